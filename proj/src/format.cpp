#include "wka/format.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace wka::format {

const char* to_string(ParseErrorKind k) {
    switch (k) {
        case ParseErrorKind::syntax: return "syntax";
        case ParseErrorKind::unknown_state: return "unknown state";
        case ParseErrorKind::symbol_outside_alphabet: return "symbol outside alphabet";
        case ParseErrorKind::missing_header: return "missing header";
        case ParseErrorKind::duplicate_header: return "duplicate header";
        case ParseErrorKind::shape_mismatch: return "shape mismatch";
    }
    return "?";
}

ParseError::ParseError(ParseErrorKind kind, int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " +
                         std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      line_(line) {}

std::string render_word(const Word& w) { return w.empty() ? "_" : w; }

namespace {

const char* kHeaders[] = {"type:", "alphabet:", "states:", "initial:", "final:"};

int header_index(const std::string& tok) {
    for (int i = 0; i < 5; ++i)
        if (tok == kHeaders[i]) return i;
    return -1;
}

bool is_header_key(const std::string& tok) { return header_index(tok) >= 0; }

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        Line line{number, {}};
        std::istringstream ls(raw);
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

[[noreturn]] void fail(ParseErrorKind kind, int line, const std::string& msg) {
    throw ParseError(kind, line, msg);
}

class Parser {
public:
    explicit Parser(const std::string& text) : lines_(tokenize(text)) {}

    AutomatonFile run() {
        bool wk = parse_type();
        parse_alphabet();
        parse_states();
        parse_initial();
        parse_finals();
        if (wk) {
            WkAutomaton a = header_as<WkAutomaton>();
            while (pos_ < lines_.size()) a.transitions.push_back(parse_wk_transition());
            check_clean(validate(a));
            return AutomatonFile{a};
        }
        Nfa n = header_as<Nfa>();
        while (pos_ < lines_.size()) n.transitions.push_back(parse_nfa_transition());
        check_clean(validate(n));
        return AutomatonFile{n};
    }

private:
    std::vector<Line> lines_;
    size_t pos_ = 0;
    std::vector<Symbol> alphabet_;
    std::vector<StateId> states_;
    StateId initial_;
    std::vector<StateId> finals_;

    int eof_line() const { return lines_.empty() ? 1 : lines_.back().number + 1; }

    template <typename A>
    A header_as() const {
        A a;
        a.alphabet = alphabet_;
        a.states = states_;
        a.initial = initial_;
        a.finals = finals_;
        return a;
    }

    const Line& expect_header(const char* key) {
        if (pos_ >= lines_.size())
            fail(ParseErrorKind::missing_header, eof_line(),
                 std::string("expected '") + key + "' header");
        const Line& line = lines_[pos_];
        if (line.tokens[0] != key) {
            int seen = header_index(line.tokens[0]);
            // headers are strictly ordered: an earlier key was already parsed
            if (seen >= 0 && seen < header_index(key))
                fail(ParseErrorKind::duplicate_header, line.number,
                     "duplicate '" + line.tokens[0] + "' header");
            if (seen >= 0)
                fail(ParseErrorKind::missing_header, line.number,
                     std::string("expected '") + key + "' header, got '" +
                         line.tokens[0] + "'");
            fail(ParseErrorKind::missing_header, line.number,
                 std::string("expected '") + key + "' header");
        }
        ++pos_;
        return line;
    }

    bool parse_type() {
        const Line& line = expect_header("type:");
        if (line.tokens.size() != 2)
            fail(ParseErrorKind::syntax, line.number, "expected 'type: wk' or 'type: nfa'");
        if (line.tokens[1] == "wk") return true;
        if (line.tokens[1] == "nfa") return false;
        fail(ParseErrorKind::syntax, line.number,
             "unknown automaton type '" + line.tokens[1] + "'");
    }

    void parse_alphabet() {
        const Line& line = expect_header("alphabet:");
        std::set<Symbol> seen;
        for (size_t i = 1; i < line.tokens.size(); ++i) {
            const std::string& tok = line.tokens[i];
            if (tok.size() != 1)
                fail(ParseErrorKind::syntax, line.number,
                     "alphabet symbols are single characters, got '" + tok + "'");
            if (!is_symbol(tok[0]))
                fail(ParseErrorKind::syntax, line.number,
                     "'" + tok + "' is not a valid symbol");
            if (!seen.insert(tok[0]).second)
                fail(ParseErrorKind::syntax, line.number, "duplicate symbol '" + tok + "'");
            alphabet_.push_back(tok[0]);
        }
    }

    void parse_states() {
        const Line& line = expect_header("states:");
        std::set<StateId> seen;
        for (size_t i = 1; i < line.tokens.size(); ++i) {
            const std::string& tok = line.tokens[i];
            if (!is_state_name(tok))
                fail(ParseErrorKind::syntax, line.number,
                     "'" + tok + "' is not a valid state name");
            if (!seen.insert(tok).second)
                fail(ParseErrorKind::syntax, line.number, "duplicate state '" + tok + "'");
            states_.push_back(tok);
        }
    }

    void parse_initial() {
        const Line& line = expect_header("initial:");
        if (line.tokens.size() != 2)
            fail(ParseErrorKind::syntax, line.number, "expected exactly one initial state");
        initial_ = known_state(line.tokens[1], line.number);
    }

    void parse_finals() {
        const Line& line = expect_header("final:");
        std::set<StateId> seen;
        for (size_t i = 1; i < line.tokens.size(); ++i) {
            StateId q = known_state(line.tokens[i], line.number);
            if (!seen.insert(q).second)
                fail(ParseErrorKind::syntax, line.number, "duplicate final state '" + q + "'");
            finals_.push_back(q);
        }
    }

    StateId known_state(const std::string& tok, int line) const {
        for (const StateId& q : states_)
            if (q == tok) return q;
        fail(ParseErrorKind::unknown_state, line, "unknown state " + tok);
    }

    Word parse_word(const std::string& tok, int line) const {
        if (tok == "_") return {};
        for (char c : tok) {
            bool known = false;
            for (Symbol s : alphabet_)
                if (s == c) known = true;
            if (!known)
                fail(ParseErrorKind::symbol_outside_alphabet, line,
                     std::string("symbol outside alphabet: ") + c);
        }
        return tok;
    }

    const Line& next_transition_line() {
        const Line& line = lines_[pos_++];
        if (is_header_key(line.tokens[0]))
            fail(ParseErrorKind::duplicate_header, line.number,
                 "header '" + line.tokens[0] + "' after the header section");
        return line;
    }

    WkTransition parse_wk_transition() {
        const Line& line = next_transition_line();
        if (line.tokens.size() != 5 || line.tokens[3] != "->")
            fail(ParseErrorKind::shape_mismatch, line.number,
                 "expected '<source> <u> <v> -> <target>'");
        WkTransition t;
        t.source = known_state(line.tokens[0], line.number);
        t.left = parse_word(line.tokens[1], line.number);
        t.right = parse_word(line.tokens[2], line.number);
        t.target = known_state(line.tokens[4], line.number);
        if (!seen_transitions_.insert(wka::to_string(t)).second)
            fail(ParseErrorKind::syntax, line.number,
                 "duplicate transition " + wka::to_string(t));
        return t;
    }

    NfaTransition parse_nfa_transition() {
        const Line& line = next_transition_line();
        if (line.tokens.size() != 4 || line.tokens[2] != "->")
            fail(ParseErrorKind::shape_mismatch, line.number,
                 "expected '<source> <label> -> <target>'");
        NfaTransition t;
        t.source = known_state(line.tokens[0], line.number);
        const std::string& label = line.tokens[1];
        if (label == "_") {
            t.label = std::nullopt;
        } else {
            if (label.size() != 1)
                fail(ParseErrorKind::syntax, line.number,
                     "label must be a single symbol or _, got '" + label + "'");
            Word w = parse_word(label, line.number);
            t.label = w[0];
        }
        t.target = known_state(line.tokens[3], line.number);
        if (!seen_transitions_.insert(wka::to_string(t)).second)
            fail(ParseErrorKind::syntax, line.number,
                 "duplicate transition " + wka::to_string(t));
        return t;
    }

    void check_clean(const std::vector<std::string>& violations) const {
        if (!violations.empty())
            fail(ParseErrorKind::syntax, eof_line(), violations.front());
    }

    std::set<std::string> seen_transitions_;
};

template <typename A>
void serialize_header(std::ostringstream& out, const A& a, const char* type) {
    out << "type: " << type << "\n";
    out << "alphabet:";
    for (Symbol s : a.alphabet) out << ' ' << s;
    out << "\n";
    out << "states:";
    for (const StateId& q : a.states) out << ' ' << q;
    out << "\n";
    out << "initial: " << a.initial << "\n";
    out << "final:";
    for (const StateId& q : a.finals) out << ' ' << q;
    out << "\n";
}

} // namespace

AutomatonFile parse(const std::string& text) { return Parser(text).run(); }

std::string serialize(const AutomatonFile& f) {
    std::ostringstream out;
    if (f.is_wk()) {
        const WkAutomaton& a = f.wk();
        serialize_header(out, a, "wk");
        for (const WkTransition& t : a.transitions) out << wka::to_string(t) << "\n";
    } else {
        const Nfa& n = f.nfa();
        serialize_header(out, n, "nfa");
        for (const NfaTransition& t : n.transitions) out << wka::to_string(t) << "\n";
    }
    return out.str();
}

AutomatonFile load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

} // namespace wka::format
