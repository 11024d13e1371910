#ifndef WKA_CLASSIFY_HPP
#define WKA_CLASSIFY_HPP

#include <optional>
#include <vector>

#include "wka/model.hpp"

namespace wka::classify {

/// True iff one word is a prefix of the other. Two left-head words can be
/// read from the same configuration exactly when they are prefix-comparable.
bool prefix_comparable(const Word& u1, const Word& u2);

/// Right-head mirror: true iff one word is a suffix of the other.
bool suffix_comparable(const Word& v1, const Word& v2);

/// A pair of transitions out of one state that witnesses a failed
/// determinism property.
struct TransitionConflict {
    StateId state;
    WkTransition first;
    WkTransition second;
};

struct CheckResult {
    bool holds = true;
    std::optional<TransitionConflict> conflict;
    explicit operator bool() const { return holds; }
};

struct StructuralFlags {
    bool stateless = false;      // N: the only state is initial and final
    bool all_final = false;      // F: every state accepts
    bool simple = false;         // S: at most one head moves per step
    bool one_limited = false;    // 1: exactly one letter read per step
};

StructuralFlags structural_flags(const WkAutomaton& a);

/// sD: all transitions out of any state share one target.
CheckResult is_state_deterministic(const WkAutomaton& a);

/// qD: no graph-reachable state has two transitions toward different targets
/// whose left words are prefix-comparable and right words suffix-comparable.
/// Such a pair is co-enabled on the remaining word made of the longer prefix
/// followed by the longer suffix; incomparable pairs are never co-enabled.
/// With use_trim the check runs on trim(a), otherwise on a as given.
CheckResult is_quasi_deterministic(const WkAutomaton& a, bool use_trim = true);

/// D: as above but any two distinct co-enabled transitions conflict, even
/// toward the same target.
CheckResult is_deterministic(const WkAutomaton& a, bool use_trim = true);

enum class DeterminismKind { deterministic, quasi_deterministic };

struct SemanticCounterexample {
    Word input;
    Configuration config;
    WkTransition first;
    WkTransition second;
};

struct SemanticCheck {
    bool holds = true;
    std::optional<SemanticCounterexample> counterexample;
    explicit operator bool() const { return holds; }
};

/// Brute-force oracle over every input of length <= max_len: walks the
/// configurations reachable from (initial, 0, |w|) and reports the first one
/// where two transitions apply (kind deterministic) or where applicable
/// transitions reach two distinct targets (kind quasi_deterministic).
SemanticCheck bounded_semantic_determinism(const WkAutomaton& a,
                                           DeterminismKind kind, int max_len);

struct ClassificationReport {
    bool stateless = false;
    bool all_final = false;
    bool simple = false;
    bool one_limited = false;
    bool state_deterministic = false;
    bool deterministic = false;
    bool quasi_deterministic = false;
    std::optional<TransitionConflict> state_det_conflict;
    std::optional<TransitionConflict> det_conflict;
    std::optional<TransitionConflict> quasi_det_conflict;
};

ClassificationReport classify(const WkAutomaton& a, bool use_trim = true);

struct NfaFlags {
    bool is_dfa = false;
    bool lambda_free = false;
    bool state_deterministic = false;
    bool quasi_deterministic = false;
};

NfaFlags nfa_flags(const Nfa& n);

/// Partition of a quasi-deterministic finite automaton's states: q_s holds
/// the states with a (single) lambda successor that every letter move also
/// reaches; q_d the lambda-free states branching deterministically by letter.
struct StatePartition {
    std::vector<StateId> q_d;
    std::vector<StateId> q_s;
};

/// Throws std::invalid_argument("not quasi-deterministic") when the
/// precondition fails.
StatePartition partition_states(const Nfa& n);

/// Left-head-only automaton with the same language: (q, l, p) becomes
/// (q, l, lambda, p).
WkAutomaton embed_nfa_to_wk(const Nfa& n);

} // namespace wka::classify

#endif
