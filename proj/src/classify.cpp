#include "wka/classify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace wka::classify {

bool prefix_comparable(const Word& u1, const Word& u2) {
    return u1.starts_with(u2) || u2.starts_with(u1);
}

bool suffix_comparable(const Word& v1, const Word& v2) {
    return v1.ends_with(v2) || v2.ends_with(v1);
}

StructuralFlags structural_flags(const WkAutomaton& a) {
    StructuralFlags f;
    f.stateless = a.states.size() == 1 && a.finals.size() == 1 &&
                  a.finals.front() == a.states.front();
    std::unordered_set<std::string> finals(a.finals.begin(), a.finals.end());
    f.all_final = true;
    for (const StateId& q : a.states)
        if (!finals.count(q)) f.all_final = false;
    f.simple = true;
    f.one_limited = true;
    for (const WkTransition& t : a.transitions) {
        if (!t.left.empty() && !t.right.empty()) f.simple = false;
        if (t.left.size() + t.right.size() != 1) f.one_limited = false;
    }
    return f;
}

CheckResult is_state_deterministic(const WkAutomaton& a) {
    for (const StateId& q : a.states) {
        const WkTransition* first = nullptr;
        for (const WkTransition& t : a.transitions) {
            if (t.source != q) continue;
            if (!first) {
                first = &t;
            } else if (t.target != first->target) {
                return {false, TransitionConflict{q, *first, t}};
            }
        }
    }
    return {};
}

namespace {

// Shared body of the two exact checkers. same_target_ok tells whether a
// co-enabled pair toward a single target is tolerated (qD) or not (D).
CheckResult conflict_scan(const WkAutomaton& raw, bool use_trim, bool same_target_ok) {
    WkAutomaton trimmed;
    const WkAutomaton* view = &raw;
    if (use_trim) {
        trimmed = trim(raw);
        view = &trimmed;
    }
    const WkAutomaton& a = *view;
    std::unordered_set<std::string> reachable;
    for (const StateId& q : graph_reachable(a)) reachable.insert(q);

    for (const StateId& q : a.states) {
        if (!reachable.count(q)) continue;
        std::vector<const WkTransition*> out;
        for (const WkTransition& t : a.transitions)
            if (t.source == q) out.push_back(&t);
        for (size_t i = 0; i < out.size(); ++i) {
            for (size_t j = i + 1; j < out.size(); ++j) {
                if (same_target_ok && out[i]->target == out[j]->target) continue;
                if (prefix_comparable(out[i]->left, out[j]->left) &&
                    suffix_comparable(out[i]->right, out[j]->right))
                    return {false, TransitionConflict{q, *out[i], *out[j]}};
            }
        }
    }
    return {};
}

} // namespace

CheckResult is_quasi_deterministic(const WkAutomaton& a, bool use_trim) {
    return conflict_scan(a, use_trim, /*same_target_ok=*/true);
}

CheckResult is_deterministic(const WkAutomaton& a, bool use_trim) {
    return conflict_scan(a, use_trim, /*same_target_ok=*/false);
}

SemanticCheck bounded_semantic_determinism(const WkAutomaton& a,
                                           DeterminismKind kind, int max_len) {
    int nstates = static_cast<int>(a.states.size());
    std::unordered_map<std::string, int> state_of;
    for (int i = 0; i < nstates; ++i) state_of.emplace(a.states[i], i);
    int initial = state_of.at(a.initial);
    std::vector<std::vector<int>> out(nstates);
    for (size_t t = 0; t < a.transitions.size(); ++t)
        out[state_of.at(a.transitions[t].source)].push_back(static_cast<int>(t));

    int span = max_len + 1;
    std::vector<uint32_t> stamp(static_cast<size_t>(nstates) * span * span, 0);
    uint32_t epoch = 0;
    std::vector<std::array<int, 3>> queue;
    std::vector<int> applicable;

    int nsym = static_cast<int>(a.alphabet.size());
    Word w;
    std::vector<int> digits;

    auto applies = [&](const WkTransition& t, int lo, int hi) {
        int ul = static_cast<int>(t.left.size());
        int vl = static_cast<int>(t.right.size());
        if (lo + ul > hi - vl) return false;
        if (ul > 0 && w.compare(lo, ul, t.left) != 0) return false;
        if (vl > 0 && w.compare(hi - vl, vl, t.right) != 0) return false;
        return true;
    };

    for (int len = 0; len <= max_len; ++len) {
        if (len > 0 && nsym == 0) break;
        w.assign(len, nsym > 0 ? a.alphabet[0] : 'a');
        digits.assign(len, 0);
        while (true) {
            // scan every configuration reachable on input w
            ++epoch;
            queue.clear();
            queue.push_back({initial, 0, len});
            stamp[(initial * span + 0) * span + len] = epoch;
            for (size_t head = 0; head < queue.size(); ++head) {
                auto [s, lo, hi] = queue[head];
                applicable.clear();
                for (int ti : out[s])
                    if (applies(a.transitions[ti], lo, hi)) applicable.push_back(ti);
                int bad_second = -1;
                if (kind == DeterminismKind::deterministic) {
                    if (applicable.size() >= 2) bad_second = applicable[1];
                } else {
                    for (size_t k = 1; k < applicable.size(); ++k)
                        if (a.transitions[applicable[k]].target !=
                            a.transitions[applicable[0]].target) {
                            bad_second = applicable[k];
                            break;
                        }
                }
                if (bad_second >= 0) {
                    SemanticCounterexample cex{w, Configuration{a.states[s], lo, hi},
                                               a.transitions[applicable[0]],
                                               a.transitions[bad_second]};
                    return {false, std::move(cex)};
                }
                for (int ti : applicable) {
                    const WkTransition& t = a.transitions[ti];
                    int nlo = lo + static_cast<int>(t.left.size());
                    int nhi = hi - static_cast<int>(t.right.size());
                    int ns = state_of.at(t.target);
                    size_t key = (static_cast<size_t>(ns) * span + nlo) * span + nhi;
                    if (stamp[key] == epoch) continue;
                    stamp[key] = epoch;
                    queue.push_back({ns, nlo, nhi});
                }
            }
            // next word of this length, counting in alphabet order
            int pos = len - 1;
            while (pos >= 0 && digits[pos] == nsym - 1) {
                digits[pos] = 0;
                w[pos] = a.alphabet[0];
                --pos;
            }
            if (pos < 0) break;
            ++digits[pos];
            w[pos] = a.alphabet[digits[pos]];
        }
    }
    return {};
}

ClassificationReport classify(const WkAutomaton& a, bool use_trim) {
    ClassificationReport r;
    StructuralFlags s = structural_flags(a);
    r.stateless = s.stateless;
    r.all_final = s.all_final;
    r.simple = s.simple;
    r.one_limited = s.one_limited;

    CheckResult sd = is_state_deterministic(a);
    r.state_deterministic = sd.holds;
    r.state_det_conflict = sd.conflict;
    CheckResult d = is_deterministic(a, use_trim);
    r.deterministic = d.holds;
    r.det_conflict = d.conflict;
    CheckResult qd = is_quasi_deterministic(a, use_trim);
    r.quasi_deterministic = qd.holds;
    r.quasi_det_conflict = qd.conflict;
    return r;
}

NfaFlags nfa_flags(const Nfa& n) {
    NfaFlags f;
    f.lambda_free = true;
    for (const NfaTransition& t : n.transitions)
        if (!t.label) f.lambda_free = false;

    // DFA: no lambda labels and no two transitions sharing (source, letter).
    f.is_dfa = f.lambda_free;
    std::unordered_set<std::string> slots;
    for (const NfaTransition& t : n.transitions)
        if (t.label && !slots.insert(t.source + '\x01' + *t.label).second)
            f.is_dfa = false;

    f.state_deterministic = true;
    f.quasi_deterministic = true;
    for (const StateId& q : n.states) {
        std::vector<const NfaTransition*> out;
        for (const NfaTransition& t : n.transitions)
            if (t.source == q) out.push_back(&t);
        for (size_t i = 0; i + 1 < out.size(); ++i)
            if (out[i]->target != out[i + 1]->target) f.state_deterministic = false;

        const StateId* lambda_target = nullptr;
        for (const NfaTransition* t : out)
            if (!t->label) {
                if (lambda_target && *lambda_target != t->target)
                    f.quasi_deterministic = false;
                lambda_target = &t->target;
            }
        if (lambda_target) {
            // every letter move must join the lambda successor
            for (const NfaTransition* t : out)
                if (t->label && t->target != *lambda_target)
                    f.quasi_deterministic = false;
        } else {
            std::map<Symbol, StateId> per_letter;
            for (const NfaTransition* t : out) {
                auto [it, inserted] = per_letter.emplace(*t->label, t->target);
                if (!inserted && it->second != t->target) f.quasi_deterministic = false;
            }
        }
    }
    return f;
}

StatePartition partition_states(const Nfa& n) {
    if (!nfa_flags(n).quasi_deterministic)
        throw std::invalid_argument("not quasi-deterministic");
    StatePartition p;
    for (const StateId& q : n.states) {
        bool has_lambda = false;
        for (const NfaTransition& t : n.transitions)
            if (t.source == q && !t.label) has_lambda = true;
        (has_lambda ? p.q_s : p.q_d).push_back(q);
    }
    return p;
}

WkAutomaton embed_nfa_to_wk(const Nfa& n) {
    WkAutomaton a;
    a.alphabet = n.alphabet;
    a.states = n.states;
    a.initial = n.initial;
    a.finals = n.finals;
    for (const NfaTransition& t : n.transitions) {
        Word left = t.label ? Word(1, *t.label) : Word();
        a.transitions.push_back({t.source, left, Word(), t.target});
    }
    return a;
}

} // namespace wka::classify
