#ifndef WKA_MODEL_HPP
#define WKA_MODEL_HPP

#include <optional>
#include <string>
#include <vector>

namespace wka {

/// A single input letter. Restricted to printable ASCII without whitespace
/// and without the characters the file format reserves: `_` `#` `>` `-`.
using Symbol = char;

/// A finite sequence of symbols; the empty string is the empty word.
using Word = std::string;

/// State name: [A-Za-z0-9_]+, but never the bare token `_`.
using StateId = std::string;

bool is_symbol(char c);
bool is_state_name(const std::string& s);

/// One transition of a sensing two-head automaton: from `source`, the left
/// head reads `left` and the right head reads `right`, moving to `target`.
struct WkTransition {
    StateId source;
    Word left;
    Word right;
    StateId target;
    bool operator==(const WkTransition&) const = default;
};

struct WkAutomaton {
    std::vector<Symbol> alphabet;   // declaration order is canonical
    std::vector<StateId> states;
    StateId initial;
    std::vector<StateId> finals;
    std::vector<WkTransition> transitions;
    bool operator==(const WkAutomaton&) const = default;

    bool has_state(const StateId& q) const;
    bool has_symbol(Symbol s) const;
    bool is_final(const StateId& q) const;
    int state_index(const StateId& q) const;   // -1 if absent
    int symbol_rank(Symbol s) const;           // -1 if absent
};

/// Classical finite-automaton transition; an absent label is a lambda move.
struct NfaTransition {
    StateId source;
    std::optional<Symbol> label;
    StateId target;
    bool operator==(const NfaTransition&) const = default;
};

struct Nfa {
    std::vector<Symbol> alphabet;
    std::vector<StateId> states;
    StateId initial;
    std::vector<StateId> finals;
    std::vector<NfaTransition> transitions;
    bool operator==(const Nfa&) const = default;

    bool has_state(const StateId& q) const;
    bool has_symbol(Symbol s) const;
    bool is_final(const StateId& q) const;
    int state_index(const StateId& q) const;
    int symbol_rank(Symbol s) const;
};

/// A machine configuration on a fixed input of length n: the left head has
/// consumed input[0..lo) and the right head input[hi..n). The unread middle
/// is input[lo..hi); invariant 0 <= lo <= hi <= n.
struct Configuration {
    StateId state;
    int lo = 0;
    int hi = 0;
    bool operator==(const Configuration&) const = default;
};

/// `src u v -> tgt` with `_` for the empty word, as in the file format.
std::string to_string(const WkTransition& t);
std::string to_string(const NfaTransition& t);

/// Structural invariant check. An empty result means the automaton is valid;
/// each entry names one offending element.
std::vector<std::string> validate(const WkAutomaton& a);
std::vector<std::string> validate(const Nfa& n);

/// States reachable from the initial state by directed edges, ignoring the
/// transition words. Returned in declaration order; always contains initial.
std::vector<StateId> graph_reachable(const WkAutomaton& a);

/// Restriction to states that are both reachable from the initial state and
/// co-reachable to some final state. Degenerates to the bare initial state
/// when nothing survives.
WkAutomaton trim(const WkAutomaton& a);

/// Longest word either head reads in any single transition; 0 without
/// transitions.
int radius(const WkAutomaton& a);

} // namespace wka

#endif
