#ifndef WKA_FORMAT_HPP
#define WKA_FORMAT_HPP

#include <stdexcept>
#include <string>
#include <variant>

#include "wka/model.hpp"

namespace wka::format {

enum class ParseErrorKind {
    syntax,
    unknown_state,
    symbol_outside_alphabet,
    missing_header,
    duplicate_header,
    shape_mismatch,
};

const char* to_string(ParseErrorKind k);

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, int line, const std::string& message);
    ParseErrorKind kind() const { return kind_; }
    int line() const { return line_; }

private:
    ParseErrorKind kind_;
    int line_;
};

struct AutomatonFile {
    std::variant<WkAutomaton, Nfa> payload;

    bool is_wk() const { return payload.index() == 0; }
    const WkAutomaton& wk() const { return std::get<WkAutomaton>(payload); }
    const Nfa& nfa() const { return std::get<Nfa>(payload); }
    bool operator==(const AutomatonFile&) const = default;
};

/// Parses the text format:
///   type: wk|nfa
///   alphabet: <sym> ...
///   states: <id> ...
///   initial: <id>
///   final: <id> ...
///   <transition lines>
/// `#` starts a comment, blank lines are skipped and `_` denotes the empty
/// word. Throws ParseError on the first problem found.
AutomatonFile parse(const std::string& text);

/// Canonical text: fixed header order, declaration order everywhere, single
/// spaces. parse(serialize(f)) is structurally f, and serialize(parse(t))
/// reproduces canonical t exactly.
std::string serialize(const AutomatonFile& f);

/// Reads and parses a file; throws std::runtime_error when unreadable.
AutomatonFile load(const std::string& path);

/// `_` for the empty word, the word itself otherwise.
std::string render_word(const Word& w);

} // namespace wka::format

#endif
