#ifndef WKA_ENGINE_HPP
#define WKA_ENGINE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "wka/model.hpp"

namespace wka::engine {

/// One accepting computation. configs has exactly one more entry than
/// transitions; configs.front() is (initial, 0, |input|), every consecutive
/// pair is related by step, and configs.back() is final with lo == hi.
struct Trace {
    Word input;
    std::vector<Configuration> configs;
    std::vector<WkTransition> transitions;
};

/// All successors of configuration c on the given input, paired with the
/// transition applied, in transition declaration order. A transition
/// (q, u, v, p) applies when u is the next left text, v the next right text,
/// and the heads do not cross: lo + |u| <= hi - |v|.
std::vector<std::pair<Configuration, WkTransition>>
step(const WkAutomaton& a, const Word& input, const Configuration& c);

/// Membership: does some computation end in a final state with the heads met?
bool accepts(const WkAutomaton& a, const Word& w);

/// A shortest accepting computation, ties broken by transition declaration
/// order; nullopt when w is rejected.
std::optional<Trace> trace(const WkAutomaton& a, const Word& w);

/// All accepted words of length <= max_len, sorted by length then
/// lexicographically in alphabet declaration order.
std::vector<Word> enumerate(const WkAutomaton& a, int max_len);

struct Equivalence {
    bool equal = true;
    std::optional<Word> counterexample;   // length-lex smallest differing word
};

/// Bounded language comparison. With modulo_empty (the default) the empty
/// word is discounted on both sides. Throws std::invalid_argument when the
/// alphabets differ as sets.
Equivalence equivalent_up_to(const WkAutomaton& a, const WkAutomaton& b,
                             int max_len, bool modulo_empty = true);

/// Length-lexicographic order induced by the alphabet declaration order.
bool word_less(const Word& x, const Word& y, const std::vector<Symbol>& alphabet);

void sort_words(std::vector<Word>& words, const std::vector<Symbol>& alphabet);

} // namespace wka::engine

#endif
