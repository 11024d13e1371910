#include "wka/witness.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "wka/engine.hpp"

namespace wka::witness {

namespace {

// w = a^m b^n ? reports the block lengths
bool ab_block(const Word& w, size_t& m, size_t& n) {
    size_t i = 0;
    while (i < w.size() && w[i] == 'a') ++i;
    m = i;
    while (i < w.size() && w[i] == 'b') ++i;
    n = i - m;
    return i == w.size();
}

bool only_ab(const Word& w) {
    return std::all_of(w.begin(), w.end(), [](char c) { return c == 'a' || c == 'b'; });
}

std::vector<Symbol> ab() { return {'a', 'b'}; }

} // namespace

std::vector<LanguageOracle> oracle_registry() {
    std::vector<LanguageOracle> reg;

    reg.push_back({"L_o", ab(),
                   [](const Word& w) {
                       size_t m, n;
                       return ab_block(w, m, n) && m <= n && n <= 2 * m;
                   },
                   "a^m b^n with m <= n <= 2m"});

    reg.push_back({"anbn_union_anb2n", ab(),
                   [](const Word& w) {
                       size_t m, n;
                       return ab_block(w, m, n) && (n == m || n == 2 * m);
                   },
                   "a^n b^n or a^n b^2n"});

    reg.push_back({"bab_plus_b", ab(),
                   [](const Word& w) {
                       return only_ab(w) && std::count(w.begin(), w.end(), 'a') <= 1;
                   },
                   "b*ab* + b*"});

    reg.push_back({"bab", ab(),
                   [](const Word& w) {
                       return only_ab(w) && std::count(w.begin(), w.end(), 'a') == 1;
                   },
                   "b*ab*"});

    reg.push_back({"ba_plus_a", ab(),
                   [](const Word& w) {
                       size_t start = (!w.empty() && w[0] == 'b') ? 1 : 0;
                       for (size_t i = start; i < w.size(); ++i)
                           if (w[i] != 'a') return false;
                       return true;
                   },
                   "ba* + a*"});

    reg.push_back({"palindromes_ab", ab(),
                   [](const Word& w) {
                       return only_ab(w) && std::equal(w.begin(), w.end(), w.rbegin());
                   },
                   "palindromes over {a,b}"});

    reg.push_back({"anbn", ab(),
                   [](const Word& w) {
                       size_t m, n;
                       return ab_block(w, m, n) && m == n;
                   },
                   "a^n b^n"});

    reg.push_back({"even_blocks", ab(),
                   [](const Word& w) {
                       size_t m, n;
                       if (!ab_block(w, m, n)) return false;
                       return (m == n && m % 2 == 0) || (m == n + 2 && n % 2 == 0);
                   },
                   "a^2n b^2n or a^2(n+1) b^2n"});

    reg.push_back({"aaa_ab_bbb", ab(),
                   [](const Word& w) {
                       if (w.size() < 6 || !w.starts_with("aaa") || !w.ends_with("bbb"))
                           return false;
                       size_t mid = w.size() - 6;
                       if (mid % 2 != 0) return false;
                       for (size_t i = 3; i + 3 < w.size(); i += 2)
                           if (w[i] != 'a' || w[i + 1] != 'b') return false;
                       return true;
                   },
                   "aaa(ab)*bbb"});

    // `~` stands in for the minus sign: `-` is reserved by the file format.
    reg.push_back({"binary_integers", {'+', '~', '0', '1'},
                   [](const Word& w) {
                       size_t i = (!w.empty() && (w[0] == '+' || w[0] == '~')) ? 1 : 0;
                       if (i >= w.size()) return false;
                       for (; i < w.size(); ++i)
                           if (w[i] != '0' && w[i] != '1') return false;
                       return true;
                   },
                   "optionally signed nonempty binary numerals"});

    reg.push_back(vstar_ustar_oracle({"ab"}, {"b"}));
    return reg;
}

const LanguageOracle* find_oracle(const std::vector<LanguageOracle>& registry,
                                  const std::string& id) {
    for (const LanguageOracle& o : registry)
        if (o.id == id) return &o;
    return nullptr;
}

LanguageOracle vstar_ustar_oracle(std::vector<Word> v, std::vector<Word> u) {
    for (const Word& w : v)
        if (w.empty()) throw std::invalid_argument("vstar_ustar_oracle: empty word in V");
    for (const Word& w : u)
        if (w.empty()) throw std::invalid_argument("vstar_ustar_oracle: empty word in U");

    std::set<Symbol> sym;
    for (const Word& w : v) sym.insert(w.begin(), w.end());
    for (const Word& w : u) sym.insert(w.begin(), w.end());

    std::string vid, uid;
    for (const Word& w : v) vid += (vid.empty() ? "" : "+") + w;
    for (const Word& w : u) uid += (uid.empty() ? "" : "+") + w;

    LanguageOracle o;
    o.id = "vstar_ustar(" + vid + ";" + uid + ")";
    o.alphabet.assign(sym.begin(), sym.end());
    o.description = "(" + vid + ")*(" + uid + ")*";
    o.member = [v = std::move(v), u = std::move(u)](const Word& w) {
        size_t n = w.size();
        std::vector<char> in_vstar(n + 1, 0);
        in_vstar[0] = 1;
        for (size_t i = 1; i <= n; ++i)
            for (const Word& x : v)
                if (x.size() <= i && in_vstar[i - x.size()] &&
                    w.compare(i - x.size(), x.size(), x) == 0)
                    in_vstar[i] = 1;
        std::vector<char> in_ustar(n + 1, 0);
        in_ustar[n] = 1;
        for (size_t i = n; i-- > 0;)
            for (const Word& x : u)
                if (i + x.size() <= n && in_ustar[i + x.size()] &&
                    w.compare(i, x.size(), x) == 0)
                    in_ustar[i] = 1;
        for (size_t i = 0; i <= n; ++i)
            if (in_vstar[i] && in_ustar[i]) return true;
        return false;
    };
    return o;
}

std::vector<Word> oracle_language(const LanguageOracle& oracle, int max_len) {
    std::vector<Word> out;
    int nsym = static_cast<int>(oracle.alphabet.size());
    Word w;
    std::vector<int> digits;
    for (int len = 0; len <= max_len; ++len) {
        if (len > 0 && nsym == 0) break;
        w.assign(len, nsym > 0 ? oracle.alphabet[0] : 'a');
        digits.assign(len, 0);
        while (true) {
            if (oracle.member(w)) out.push_back(w);
            int pos = len - 1;
            while (pos >= 0 && digits[pos] == nsym - 1) {
                digits[pos] = 0;
                w[pos] = oracle.alphabet[0];
                --pos;
            }
            if (pos < 0) break;
            ++digits[pos];
            w[pos] = oracle.alphabet[digits[pos]];
        }
    }
    return out;
}

namespace {

ExpectedFlags flags(std::initializer_list<std::pair<const char*, bool>> items) {
    ExpectedFlags e;
    for (auto [name, value] : items) {
        std::string k = name;
        if (k == "N") e.stateless = value;
        else if (k == "F") e.all_final = value;
        else if (k == "S") e.simple = value;
        else if (k == "1") e.one_limited = value;
        else if (k == "sD") e.state_deterministic = value;
        else if (k == "D") e.deterministic = value;
        else if (k == "qD") e.quasi_deterministic = value;
        else if (k == "dfa") e.nfa_is_dfa = value;
        else if (k == "nfa_sD") e.nfa_state_deterministic = value;
        else if (k == "nfa_qD") e.nfa_quasi_deterministic = value;
        else throw std::logic_error("unknown flag key " + k);
    }
    return e;
}

} // namespace

std::vector<ClaimRecord> bundled_automata(const std::string& corpus_dir) {
    struct Entry {
        const char* id;
        const char* file;
        bool embed;
        const char* oracle;
        ExpectedFlags expected;
    };
    const std::vector<Entry> entries = {
        {"Lo_stateless", "Lo_stateless.wka", false, "L_o",
         flags({{"N", true}, {"F", true}, {"sD", true}, {"qD", true}, {"D", false}})},
        {"anbn_stateless", "anbn_stateless.wka", false, "anbn",
         flags({{"N", true}, {"qD", true}})},
        {"palindrome_qDF1", "palindrome_qDF1.wka", false, "palindromes_ab",
         flags({{"F", true}, {"1", true}, {"S", true}, {"qD", true}, {"D", true}})},
        {"even_blocks_qDFS", "even_blocks_qDFS.wka", false, "even_blocks",
         flags({{"F", true}, {"S", true}, {"sD", true}, {"qD", true}, {"1", false}})},
        {"aaa_ab_bbb_qDF", "aaa_ab_bbb_qDF.wka", false, "aaa_ab_bbb",
         flags({{"F", true}, {"sD", true}, {"qD", true}, {"S", false}})},
        {"bab_qD1", "bab_qD1.wka", false, "bab",
         flags({{"1", true}, {"S", true}, {"qD", true}, {"D", true},
                {"F", false}, {"N", false}, {"sD", false}})},
        {"ba_plus_a_qDF1", "ba_plus_a_qDF1.wka", false, "ba_plus_a",
         flags({{"F", true}, {"1", true}, {"S", true}, {"qD", true}})},
        {"binary_int_nfa", "binary_int_nfa.wka", true, "binary_integers",
         flags({{"nfa_qD", true}, {"nfa_sD", false}, {"dfa", false}})},
        {"bab_plus_b_dfa", "bab_plus_b_dfa.wka", true, "bab_plus_b",
         flags({{"qD", true}, {"D", true}, {"sD", false}})},
        {"abstar_bstar_NS", "abstar_bstar_NS.wka", false, "vstar_ustar(ab;b)",
         flags({{"N", true}, {"F", true}, {"S", true}, {"sD", true}, {"qD", true},
                {"1", false}, {"D", false}})},
    };

    std::vector<ClaimRecord> records;
    for (const Entry& s : entries) {
        ClaimRecord r;
        r.claim_id = s.id;
        r.file = s.file;
        r.automaton = format::load(corpus_dir + "/" + s.file);
        r.embed = s.embed;
        r.oracle_id = s.oracle;
        r.expected = s.expected;
        records.push_back(std::move(r));
    }
    return records;
}

namespace {

void note(std::string& details, const std::string& msg) {
    if (!details.empty()) details += "; ";
    details += msg;
}

void check_flag(const std::optional<bool>& expected, bool actual, const char* name,
                bool& ok, std::string& details) {
    if (expected && *expected != actual) {
        ok = false;
        note(details, std::string(name) + ": expected " +
                          (*expected ? "true" : "false") + ", got " +
                          (actual ? "true" : "false"));
    }
}

} // namespace

ClaimSummary check_claims(std::vector<ClaimRecord>& records, int max_len) {
    if (max_len < 1) throw std::invalid_argument("max_len must be at least 1");
    auto registry = oracle_registry();
    ClaimSummary summary;
    for (ClaimRecord& r : records) {
        r.bound = max_len;
        r.details.clear();

        WkAutomaton view;
        if (r.automaton.is_wk()) {
            view = r.automaton.wk();
        } else {
            view = classify::embed_nfa_to_wk(r.automaton.nfa());
        }

        // language against the oracle, modulo the empty word
        bool lang_ok = true;
        if (!r.oracle_id.empty()) {
            const LanguageOracle* oracle = find_oracle(registry, r.oracle_id);
            if (!oracle) throw std::runtime_error("unresolved oracle id " + r.oracle_id);
            std::set<Symbol> oa(oracle->alphabet.begin(), oracle->alphabet.end());
            std::set<Symbol> aa(view.alphabet.begin(), view.alphabet.end());
            if (oa != aa) {
                lang_ok = false;
                note(r.details, "oracle alphabet differs from automaton alphabet");
            } else {
                std::vector<Word> got = engine::enumerate(view, max_len);
                std::vector<Word> want = oracle_language(*oracle, max_len);
                std::erase_if(got, [](const Word& w) { return w.empty(); });
                std::erase_if(want, [](const Word& w) { return w.empty(); });
                engine::sort_words(want, view.alphabet);
                if (got != want) {
                    lang_ok = false;
                    std::set<Word> g(got.begin(), got.end()), e(want.begin(), want.end());
                    for (const Word& w : got)
                        if (!e.count(w)) {
                            note(r.details, "accepts " + format::render_word(w) +
                                                " outside the oracle language");
                            break;
                        }
                    for (const Word& w : want)
                        if (!g.count(w)) {
                            note(r.details, "misses oracle word " + format::render_word(w));
                            break;
                        }
                }
            }
        }
        r.language_match = lang_ok;

        // classification flags
        bool flags_ok = true;
        if (!r.automaton.is_wk()) {
            classify::NfaFlags nf = classify::nfa_flags(r.automaton.nfa());
            check_flag(r.expected.nfa_is_dfa, nf.is_dfa, "nfa is_dfa", flags_ok, r.details);
            check_flag(r.expected.nfa_state_deterministic, nf.state_deterministic,
                       "nfa sD", flags_ok, r.details);
            check_flag(r.expected.nfa_quasi_deterministic, nf.quasi_deterministic,
                       "nfa qD", flags_ok, r.details);
        }
        classify::ClassificationReport rep = classify::classify(view, true);
        check_flag(r.expected.stateless, rep.stateless, "N", flags_ok, r.details);
        check_flag(r.expected.all_final, rep.all_final, "F", flags_ok, r.details);
        check_flag(r.expected.simple, rep.simple, "S", flags_ok, r.details);
        check_flag(r.expected.one_limited, rep.one_limited, "1", flags_ok, r.details);
        check_flag(r.expected.state_deterministic, rep.state_deterministic, "sD",
                   flags_ok, r.details);
        check_flag(r.expected.deterministic, rep.deterministic, "D", flags_ok, r.details);
        check_flag(r.expected.quasi_deterministic, rep.quasi_deterministic, "qD",
                   flags_ok, r.details);

        // the exact checkers ran on trim(view); the semantic oracle must see
        // the same automaton to be a fair cross-check
        WkAutomaton trimmed = trim(view);
        bool sem_d =
            classify::bounded_semantic_determinism(
                trimmed, classify::DeterminismKind::deterministic, max_len)
                .holds;
        bool sem_qd =
            classify::bounded_semantic_determinism(
                trimmed, classify::DeterminismKind::quasi_deterministic, max_len)
                .holds;
        if (sem_d != rep.deterministic) {
            flags_ok = false;
            note(r.details, "bounded semantic D disagrees with exact checker");
        }
        if (sem_qd != rep.quasi_deterministic) {
            flags_ok = false;
            note(r.details, "bounded semantic qD disagrees with exact checker");
        }
        r.flags_match = flags_ok;

        ++summary.total;
        if (r.passed()) ++summary.passed;
    }
    return summary;
}

} // namespace wka::witness
