#include "wka/model.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace wka {

bool is_symbol(char c) {
    if (c <= 0x20 || c >= 0x7f) return false;
    return c != '_' && c != '#' && c != '>' && c != '-';
}

bool is_state_name(const std::string& s) {
    if (s.empty() || s == "_") return false;
    for (char c : s) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                  (c >= '0' && c <= '9') || c == '_';
        if (!ok) return false;
    }
    return true;
}

namespace {

template <typename A>
bool has_state_impl(const A& a, const StateId& q) {
    return std::find(a.states.begin(), a.states.end(), q) != a.states.end();
}

template <typename A>
int state_index_impl(const A& a, const StateId& q) {
    auto it = std::find(a.states.begin(), a.states.end(), q);
    return it == a.states.end() ? -1 : static_cast<int>(it - a.states.begin());
}

template <typename A>
int symbol_rank_impl(const A& a, Symbol s) {
    auto it = std::find(a.alphabet.begin(), a.alphabet.end(), s);
    return it == a.alphabet.end() ? -1 : static_cast<int>(it - a.alphabet.begin());
}

std::string word_token(const Word& w) { return w.empty() ? "_" : w; }

} // namespace

bool WkAutomaton::has_state(const StateId& q) const { return has_state_impl(*this, q); }
bool WkAutomaton::has_symbol(Symbol s) const { return symbol_rank_impl(*this, s) >= 0; }
bool WkAutomaton::is_final(const StateId& q) const {
    return std::find(finals.begin(), finals.end(), q) != finals.end();
}
int WkAutomaton::state_index(const StateId& q) const { return state_index_impl(*this, q); }
int WkAutomaton::symbol_rank(Symbol s) const { return symbol_rank_impl(*this, s); }

bool Nfa::has_state(const StateId& q) const { return has_state_impl(*this, q); }
bool Nfa::has_symbol(Symbol s) const { return symbol_rank_impl(*this, s) >= 0; }
bool Nfa::is_final(const StateId& q) const {
    return std::find(finals.begin(), finals.end(), q) != finals.end();
}
int Nfa::state_index(const StateId& q) const { return state_index_impl(*this, q); }
int Nfa::symbol_rank(Symbol s) const { return symbol_rank_impl(*this, s); }

std::string to_string(const WkTransition& t) {
    return t.source + " " + word_token(t.left) + " " + word_token(t.right) +
           " -> " + t.target;
}

std::string to_string(const NfaTransition& t) {
    std::string label = t.label ? std::string(1, *t.label) : "_";
    return t.source + " " + label + " -> " + t.target;
}

namespace {

template <typename A>
void validate_common(const A& a, std::vector<std::string>& out) {
    std::set<Symbol> seen_sym;
    for (Symbol s : a.alphabet) {
        if (!is_symbol(s))
            out.push_back(std::string("invalid alphabet symbol ") + s);
        if (!seen_sym.insert(s).second)
            out.push_back(std::string("duplicate alphabet symbol ") + s);
    }
    std::set<StateId> seen_state;
    for (const StateId& q : a.states) {
        if (!is_state_name(q)) out.push_back("invalid state name " + q);
        if (!seen_state.insert(q).second) out.push_back("duplicate state " + q);
    }
    if (!a.has_state(a.initial))
        out.push_back("unknown initial state " + a.initial);
    std::set<StateId> seen_final;
    for (const StateId& q : a.finals) {
        if (!a.has_state(q)) out.push_back("unknown final state " + q);
        if (!seen_final.insert(q).second) out.push_back("duplicate final state " + q);
    }
}

} // namespace

std::vector<std::string> validate(const WkAutomaton& a) {
    std::vector<std::string> out;
    validate_common(a, out);
    std::set<std::string> seen_trans;
    for (const WkTransition& t : a.transitions) {
        if (!a.has_state(t.source)) out.push_back("unknown source state " + t.source);
        if (!a.has_state(t.target)) out.push_back("unknown target state " + t.target);
        for (char c : t.left)
            if (!a.has_symbol(c))
                out.push_back(std::string("transition symbol ") + c + " not in alphabet");
        for (char c : t.right)
            if (!a.has_symbol(c))
                out.push_back(std::string("transition symbol ") + c + " not in alphabet");
        if (!seen_trans.insert(to_string(t)).second)
            out.push_back("duplicate transition " + to_string(t));
    }
    return out;
}

std::vector<std::string> validate(const Nfa& n) {
    std::vector<std::string> out;
    validate_common(n, out);
    std::set<std::string> seen_trans;
    for (const NfaTransition& t : n.transitions) {
        if (!n.has_state(t.source)) out.push_back("unknown source state " + t.source);
        if (!n.has_state(t.target)) out.push_back("unknown target state " + t.target);
        if (t.label && !n.has_symbol(*t.label))
            out.push_back(std::string("transition symbol ") + *t.label + " not in alphabet");
        if (!seen_trans.insert(to_string(t)).second)
            out.push_back("duplicate transition " + to_string(t));
    }
    return out;
}

namespace {

std::unordered_set<std::string> forward_closure(const WkAutomaton& a,
                                                const std::unordered_set<std::string>& seeds,
                                                bool reversed) {
    std::unordered_set<std::string> seen = seeds;
    std::vector<StateId> stack(seeds.begin(), seeds.end());
    while (!stack.empty()) {
        StateId q = stack.back();
        stack.pop_back();
        for (const WkTransition& t : a.transitions) {
            const StateId& from = reversed ? t.target : t.source;
            const StateId& to = reversed ? t.source : t.target;
            if (from == q && seen.insert(to).second) stack.push_back(to);
        }
    }
    return seen;
}

} // namespace

std::vector<StateId> graph_reachable(const WkAutomaton& a) {
    auto seen = forward_closure(a, {a.initial}, false);
    std::vector<StateId> out;
    for (const StateId& q : a.states)
        if (seen.count(q)) out.push_back(q);
    return out;
}

WkAutomaton trim(const WkAutomaton& a) {
    auto reach = forward_closure(a, {a.initial}, false);
    std::unordered_set<std::string> final_set(a.finals.begin(), a.finals.end());
    auto coreach = forward_closure(a, final_set, true);

    std::unordered_set<std::string> keep;
    for (const StateId& q : a.states)
        if (reach.count(q) && coreach.count(q)) keep.insert(q);

    WkAutomaton out;
    out.alphabet = a.alphabet;
    out.initial = a.initial;
    if (!keep.count(a.initial)) {
        out.states = {a.initial};
        return out;
    }
    for (const StateId& q : a.states)
        if (keep.count(q)) out.states.push_back(q);
    for (const StateId& q : a.finals)
        if (keep.count(q)) out.finals.push_back(q);
    for (const WkTransition& t : a.transitions)
        if (keep.count(t.source) && keep.count(t.target)) out.transitions.push_back(t);
    return out;
}

int radius(const WkAutomaton& a) {
    size_t r = 0;
    for (const WkTransition& t : a.transitions)
        r = std::max({r, t.left.size(), t.right.size()});
    return static_cast<int>(r);
}

} // namespace wka
