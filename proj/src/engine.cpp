#include "wka/engine.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace wka::engine {

namespace {

// Index-based view of an automaton for the configuration searches.
struct Indexed {
    const WkAutomaton& a;
    std::unordered_map<std::string, int> state_of;
    std::vector<std::vector<int>> out;   // per state, transition indices in declaration order
    int initial = 0;
    std::vector<char> final_flag;

    explicit Indexed(const WkAutomaton& aut) : a(aut) {
        int idx = 0;
        for (const StateId& q : a.states) state_of.emplace(q, idx++);
        out.resize(a.states.size());
        final_flag.assign(a.states.size(), 0);
        for (const StateId& q : a.finals) final_flag[state_of.at(q)] = 1;
        initial = state_of.at(a.initial);
        for (size_t t = 0; t < a.transitions.size(); ++t)
            out[state_of.at(a.transitions[t].source)].push_back(static_cast<int>(t));
    }
};

bool applies(const WkTransition& t, const Word& input, int lo, int hi) {
    int ul = static_cast<int>(t.left.size());
    int vl = static_cast<int>(t.right.size());
    if (lo + ul > hi - vl) return false;
    if (ul > 0 && input.compare(lo, ul, t.left) != 0) return false;
    if (vl > 0 && input.compare(hi - vl, vl, t.right) != 0) return false;
    return true;
}

struct ConfigSpace {
    int n;
    int span;
    explicit ConfigSpace(int input_len) : n(input_len), span(input_len + 1) {}
    int pack(int state, int lo, int hi) const { return (state * span + lo) * span + hi; }
};

} // namespace

std::vector<std::pair<Configuration, WkTransition>>
step(const WkAutomaton& a, const Word& input, const Configuration& c) {
    std::vector<std::pair<Configuration, WkTransition>> out;
    for (const WkTransition& t : a.transitions) {
        if (t.source != c.state) continue;
        if (!applies(t, input, c.lo, c.hi)) continue;
        Configuration next{t.target, c.lo + static_cast<int>(t.left.size()),
                           c.hi - static_cast<int>(t.right.size())};
        out.emplace_back(std::move(next), t);
    }
    return out;
}

bool accepts(const WkAutomaton& a, const Word& w) {
    Indexed ix(a);
    int n = static_cast<int>(w.size());
    ConfigSpace cs(n);
    if (ix.final_flag[ix.initial] && n == 0) return true;

    std::vector<char> visited(a.states.size() * cs.span * cs.span, 0);
    std::vector<std::array<int, 3>> queue;
    queue.push_back({ix.initial, 0, n});
    visited[cs.pack(ix.initial, 0, n)] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
        auto [s, lo, hi] = queue[head];
        for (int ti : ix.out[s]) {
            const WkTransition& t = a.transitions[ti];
            if (!applies(t, w, lo, hi)) continue;
            int nlo = lo + static_cast<int>(t.left.size());
            int nhi = hi - static_cast<int>(t.right.size());
            int ns = ix.state_of.at(t.target);
            int key = cs.pack(ns, nlo, nhi);
            if (visited[key]) continue;
            visited[key] = 1;
            if (nlo == nhi && ix.final_flag[ns]) return true;
            queue.push_back({ns, nlo, nhi});
        }
    }
    return false;
}

std::optional<Trace> trace(const WkAutomaton& a, const Word& w) {
    Indexed ix(a);
    int n = static_cast<int>(w.size());
    ConfigSpace cs(n);

    auto build = [&](int end_key, const std::vector<int>& prev,
                     const std::vector<int>& via) {
        std::vector<int> keys;
        for (int k = end_key; k != -1; k = prev[k]) keys.push_back(k);
        std::reverse(keys.begin(), keys.end());
        Trace tr;
        tr.input = w;
        for (size_t i = 0; i < keys.size(); ++i) {
            int k = keys[i];
            int hi = k % cs.span;
            int lo = (k / cs.span) % cs.span;
            int s = k / (cs.span * cs.span);
            tr.configs.push_back({a.states[s], lo, hi});
            if (i > 0) tr.transitions.push_back(a.transitions[via[k]]);
        }
        return tr;
    };

    int start = cs.pack(ix.initial, 0, n);
    std::vector<int> prev(a.states.size() * cs.span * cs.span, -2);
    std::vector<int> via(prev.size(), -1);
    prev[start] = -1;
    if (n == 0 && ix.final_flag[ix.initial]) return build(start, prev, via);

    // BFS expanding transitions in declaration order: the first accepting
    // configuration generated closes the lexicographically least shortest
    // computation.
    std::vector<std::array<int, 3>> queue;
    queue.push_back({ix.initial, 0, n});
    for (size_t head = 0; head < queue.size(); ++head) {
        auto [s, lo, hi] = queue[head];
        int from_key = cs.pack(s, lo, hi);
        for (int ti : ix.out[s]) {
            const WkTransition& t = a.transitions[ti];
            if (!applies(t, w, lo, hi)) continue;
            int nlo = lo + static_cast<int>(t.left.size());
            int nhi = hi - static_cast<int>(t.right.size());
            int ns = ix.state_of.at(t.target);
            int key = cs.pack(ns, nlo, nhi);
            if (prev[key] != -2) continue;
            prev[key] = from_key;
            via[key] = ti;
            if (nlo == nhi && ix.final_flag[ns]) return build(key, prev, via);
            queue.push_back({ns, nlo, nhi});
        }
    }
    return std::nullopt;
}

std::vector<Word> enumerate(const WkAutomaton& a, int max_len) {
    if (max_len < 0) return {};
    Indexed ix(a);
    // Search over (state, x, y): x is everything the left head has read, y
    // everything the right head has read; the accepted word is x . y once a
    // final state is reached.
    struct Triple {
        int state;
        Word x, y;
    };
    auto key_of = [](const Triple& t) {
        std::string k;
        k.reserve(t.x.size() + t.y.size() + 4);
        k += std::to_string(t.state);
        k += '\x01';
        k += t.x;
        k += '\x01';
        k += t.y;
        return k;
    };

    std::unordered_set<std::string> seen;
    std::unordered_set<std::string> emitted;
    std::vector<Triple> queue;
    Triple start{ix.initial, {}, {}};
    seen.insert(key_of(start));
    queue.push_back(start);
    for (size_t head = 0; head < queue.size(); ++head) {
        Triple cur = queue[head];   // copy: queue may reallocate
        if (ix.final_flag[cur.state]) emitted.insert(cur.x + cur.y);
        for (int ti : ix.out[cur.state]) {
            const WkTransition& t = a.transitions[ti];
            if (cur.x.size() + cur.y.size() + t.left.size() + t.right.size() >
                static_cast<size_t>(max_len))
                continue;
            Triple next{ix.state_of.at(t.target), cur.x + t.left, t.right + cur.y};
            if (seen.insert(key_of(next)).second) queue.push_back(std::move(next));
        }
    }

    std::vector<Word> words(emitted.begin(), emitted.end());
    sort_words(words, a.alphabet);
    return words;
}

bool word_less(const Word& x, const Word& y, const std::vector<Symbol>& alphabet) {
    if (x.size() != y.size()) return x.size() < y.size();
    std::array<int, 256> rank;
    rank.fill(255);
    for (size_t i = 0; i < alphabet.size(); ++i)
        rank[static_cast<unsigned char>(alphabet[i])] = static_cast<int>(i);
    for (size_t i = 0; i < x.size(); ++i) {
        int rx = rank[static_cast<unsigned char>(x[i])];
        int ry = rank[static_cast<unsigned char>(y[i])];
        if (rx != ry) return rx < ry;
    }
    return false;
}

void sort_words(std::vector<Word>& words, const std::vector<Symbol>& alphabet) {
    std::array<int, 256> rank;
    rank.fill(255);
    for (size_t i = 0; i < alphabet.size(); ++i)
        rank[static_cast<unsigned char>(alphabet[i])] = static_cast<int>(i);
    std::sort(words.begin(), words.end(), [&](const Word& x, const Word& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        for (size_t i = 0; i < x.size(); ++i) {
            int rx = rank[static_cast<unsigned char>(x[i])];
            int ry = rank[static_cast<unsigned char>(y[i])];
            if (rx != ry) return rx < ry;
        }
        return false;
    });
}

Equivalence equivalent_up_to(const WkAutomaton& a, const WkAutomaton& b,
                             int max_len, bool modulo_empty) {
    std::set<Symbol> sa(a.alphabet.begin(), a.alphabet.end());
    std::set<Symbol> sb(b.alphabet.begin(), b.alphabet.end());
    if (sa != sb) throw std::invalid_argument("alphabet mismatch");

    std::vector<Word> la = enumerate(a, max_len);
    std::vector<Word> lb = enumerate(b, max_len);
    sort_words(lb, a.alphabet);
    auto drop_empty = [](std::vector<Word>& v) {
        std::erase_if(v, [](const Word& w) { return w.empty(); });
    };
    if (modulo_empty) {
        drop_empty(la);
        drop_empty(lb);
    }
    if (la == lb) return {};

    std::set<Word> in_a(la.begin(), la.end());
    std::set<Word> in_b(lb.begin(), lb.end());
    std::vector<Word> diff;
    for (const Word& w : la)
        if (!in_b.count(w)) diff.push_back(w);
    for (const Word& w : lb)
        if (!in_a.count(w)) diff.push_back(w);
    sort_words(diff, a.alphabet);
    return {false, diff.front()};
}

} // namespace wka::engine
