#ifndef WKA_WITNESS_HPP
#define WKA_WITNESS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wka/classify.hpp"
#include "wka/format.hpp"
#include "wka/model.hpp"

namespace wka::witness {

/// An executable language: a direct membership predicate, independent of any
/// automaton, used as the ground truth in the claims harness.
struct LanguageOracle {
    std::string id;
    std::vector<Symbol> alphabet;
    std::function<bool(const Word&)> member;
    std::string description;
};

/// The built-in oracles. Each is a plain arithmetic/string predicate.
std::vector<LanguageOracle> oracle_registry();

const LanguageOracle* find_oracle(const std::vector<LanguageOracle>& registry,
                                  const std::string& id);

/// Membership in V*.U* for finite word sets V and U, decided by dynamic
/// programming over split points. Empty sets contribute {lambda}.
LanguageOracle vstar_ustar_oracle(std::vector<Word> v, std::vector<Word> u);

/// All words over the oracle alphabet of length <= max_len that the oracle
/// accepts, in length-lex order.
std::vector<Word> oracle_language(const LanguageOracle& oracle, int max_len);

/// Flags a claim asserts. Unset fields are not checked.
struct ExpectedFlags {
    std::optional<bool> stateless, all_final, simple, one_limited;
    std::optional<bool> state_deterministic, deterministic, quasi_deterministic;
    std::optional<bool> nfa_is_dfa, nfa_state_deterministic, nfa_quasi_deterministic;
};

struct ClaimRecord {
    std::string claim_id;
    std::string file;                    // corpus-relative path
    format::AutomatonFile automaton;
    bool embed = false;                  // nfa checked through embed_nfa_to_wk
    std::string oracle_id;
    ExpectedFlags expected;

    // filled by check_claims
    int bound = 0;
    std::optional<bool> language_match;
    std::optional<bool> flags_match;
    std::string details;

    bool passed() const {
        return language_match.value_or(false) && flags_match.value_or(false);
    }
};

/// Loads every bundled automaton from corpus_dir and pairs it with its
/// oracle and asserted flags. Verdict fields are left unfilled.
std::vector<ClaimRecord> bundled_automata(const std::string& corpus_dir);

struct ClaimSummary {
    int total = 0;
    int passed = 0;
    bool all_passed() const { return passed == total; }
};

/// For each record, compares the automaton's bounded language against the
/// oracle (modulo the empty word) and the classification against the
/// asserted flags, cross-checking D and qD with the bounded semantic oracle
/// at the same bound. Fills the verdict fields in place.
ClaimSummary check_claims(std::vector<ClaimRecord>& records, int max_len);

} // namespace wka::witness

#endif
