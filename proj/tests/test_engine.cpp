#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "support/builders.hpp"
#include "support/naive.hpp"
#include "support/random_automata.hpp"
#include "wka/classify.hpp"
#include "wka/engine.hpp"
#include "wka/format.hpp"

using namespace wka;
using namespace wka::testsupport;
namespace eng = wka::engine;

TEST_CASE("step on the two-loop automaton") {
    WkAutomaton lo = load_wk("Lo_stateless.wka");
    auto succ = eng::step(lo, "aabbb", {"q", 0, 5});
    REQUIRE(succ.size() == 2);
    std::set<std::pair<int, int>> cursors;
    for (auto& [c, t] : succ) {
        CHECK(c.state == "q");
        cursors.insert({c.lo, c.hi});
    }
    CHECK(cursors == std::set<std::pair<int, int>>{{1, 4}, {1, 3}});
}

TEST_CASE("step finds nothing when the heads have met") {
    WkAutomaton lo = load_wk("Lo_stateless.wka");
    CHECK(eng::step(lo, "ab", {"q", 1, 1}).empty());
}

TEST_CASE("step on the palindrome automaton start") {
    WkAutomaton pal = load_wk("palindrome_qDF1.wka");
    auto succ = eng::step(pal, "aa", {"q", 0, 2});
    REQUIRE(succ.size() == 1);
    CHECK(succ[0].first == Configuration{"p", 1, 2});
    CHECK(succ[0].second == WkTransition{"q", "a", "", "p"});
}

TEST_CASE("step honours the non-crossing constraint") {
    // (a, ab) would need 3 letters in a 2-letter middle
    WkAutomaton a = stateless({{"a", "ab"}});
    CHECK(eng::step(a, "ab", {"q", 0, 2}).empty());
    CHECK(eng::step(a, "aab", {"q", 0, 3}).size() == 1);
}

TEST_CASE("accepts on bundled languages") {
    WkAutomaton lo = load_wk("Lo_stateless.wka");
    CHECK(eng::accepts(lo, "aabbb"));   // m=2, n=3, 2<=3<=4
    CHECK(eng::accepts(lo, ""));
    CHECK_FALSE(eng::accepts(lo, "aab"));

    WkAutomaton anbn = load_wk("anbn_stateless.wka");
    CHECK(eng::accepts(anbn, "ab"));
    CHECK(eng::accepts(anbn, "aabb"));
    CHECK_FALSE(eng::accepts(anbn, "abab"));
}

TEST_CASE("accepts terminates with lambda-lambda cycles") {
    WkAutomaton a;
    a.alphabet = {'a'};
    a.states = {"q", "p"};
    a.initial = "q";
    a.finals = {};
    a.transitions = {{"q", "", "", "p"}, {"p", "", "", "q"}};
    CHECK_FALSE(eng::accepts(a, ""));
    CHECK_FALSE(eng::accepts(a, "a"));
    a.finals = {"p"};
    CHECK(eng::accepts(a, ""));
    CHECK_FALSE(eng::accepts(a, "a"));
}

TEST_CASE("trace on the single-transition automaton") {
    WkAutomaton anbn = load_wk("anbn_stateless.wka");
    auto tr = eng::trace(anbn, "ab");
    REQUIRE(tr.has_value());
    REQUIRE(tr->configs.size() == 2);
    CHECK(tr->configs[0] == Configuration{"q", 0, 2});
    CHECK(tr->configs[1] == Configuration{"q", 1, 1});
    REQUIRE(tr->transitions.size() == 1);
    CHECK(tr->transitions[0] == WkTransition{"q", "a", "b", "q"});

    CHECK_FALSE(eng::trace(anbn, "a").has_value());
}

TEST_CASE("zero-step trace on the empty word") {
    WkAutomaton lo = load_wk("Lo_stateless.wka");
    auto tr = eng::trace(lo, "");
    REQUIRE(tr.has_value());
    CHECK(tr->configs.size() == 1);
    CHECK(tr->transitions.empty());
}

TEST_CASE("trace is shortest and breaks ties by declaration order") {
    // two routes to acceptance: q -(a,_)-> f directly, or through p
    WkAutomaton a;
    a.alphabet = {'a'};
    a.states = {"q", "p", "f"};
    a.initial = "q";
    a.finals = {"f"};
    a.transitions = {
        {"q", "", "", "p"}, {"p", "a", "", "f"}, {"q", "a", "", "f"}};
    auto tr = eng::trace(a, "a");
    REQUIRE(tr.has_value());
    REQUIRE(tr->transitions.size() == 1);
    CHECK(tr->transitions[0] == WkTransition{"q", "a", "", "f"});

    // among equal-length computations the earlier declared transition wins
    WkAutomaton b;
    b.alphabet = {'a'};
    b.states = {"q", "p1", "p2", "f"};
    b.initial = "q";
    b.finals = {"f"};
    b.transitions = {{"q", "a", "", "p1"},
                     {"q", "a", "", "p2"},
                     {"p1", "a", "", "f"},
                     {"p2", "a", "", "f"}};
    auto tb = eng::trace(b, "aa");
    REQUIRE(tb.has_value());
    CHECK(tb->configs[1].state == "p1");
}

TEST_CASE("enumerate matches the frozen bounded languages") {
    WkAutomaton anbn = load_wk("anbn_stateless.wka");
    CHECK(eng::enumerate(anbn, 4) == std::vector<Word>{"", "ab", "aabb"});

    WkAutomaton lo = load_wk("Lo_stateless.wka");
    CHECK(eng::enumerate(lo, 5) ==
          std::vector<Word>{"", "ab", "abb", "aabb", "aabbb"});
    // length 6 brings both a^3b^3 (m=n=3) and a^2b^4 (n=2m)
    CHECK(eng::enumerate(lo, 6) ==
          std::vector<Word>{"", "ab", "abb", "aabb", "aabbb", "aaabbb", "aabbbb"});

    WkAutomaton no_finals = stateless({{"a", "b"}});
    no_finals.finals.clear();
    CHECK(eng::enumerate(no_finals, 8).empty());
}

TEST_CASE("enumerate agrees with accepts word by word") {
    std::mt19937 rng(37);
    for (int i = 0; i < 120; ++i) {
        WkAutomaton a = random_wk(rng);
        auto lang = eng::enumerate(a, 6);
        std::set<Word> in_lang(lang.begin(), lang.end());
        for (const Word& w : all_words(a.alphabet, 6))
            CHECK(in_lang.count(w) == (eng::accepts(a, w) ? 1u : 0u));
    }
}

TEST_CASE("enumerate grows with the bound and respects it") {
    std::mt19937 rng(41);
    for (int i = 0; i < 60; ++i) {
        WkAutomaton a = random_wk(rng);
        auto l5 = eng::enumerate(a, 5);
        auto l6 = eng::enumerate(a, 6);
        std::set<Word> bigger(l6.begin(), l6.end());
        for (const Word& w : l5) {
            CHECK(bigger.count(w) == 1);
            CHECK(w.size() <= 5);
        }
    }
}

TEST_CASE("every enumerated word has a replayable trace") {
    std::mt19937 rng(43);
    for (int i = 0; i < 80; ++i) {
        WkAutomaton a = random_wk(rng);
        for (const Word& w : eng::enumerate(a, 6)) {
            auto tr = eng::trace(a, w);
            REQUIRE(tr.has_value());
            REQUIRE(tr->configs.size() == tr->transitions.size() + 1);
            CHECK(tr->configs.front() ==
                  Configuration{a.initial, 0, (int)w.size()});
            for (size_t s = 0; s + 1 < tr->configs.size(); ++s) {
                auto succ = eng::step(a, w, tr->configs[s]);
                bool found = false;
                for (auto& [c, t] : succ)
                    if (c == tr->configs[s + 1] && t == tr->transitions[s]) found = true;
                CHECK(found);
                // sensing: lo never decreases, hi never increases, lo <= hi
                CHECK(tr->configs[s].lo <= tr->configs[s + 1].lo);
                CHECK(tr->configs[s].hi >= tr->configs[s + 1].hi);
                CHECK(tr->configs[s + 1].lo <= tr->configs[s + 1].hi);
            }
            CHECK(tr->configs.back().lo == tr->configs.back().hi);
            CHECK(a.is_final(tr->configs.back().state));
        }
    }
}

TEST_CASE("accepts agrees with the naive recursive search") {
    std::mt19937 rng(47);
    for (int i = 0; i < 150; ++i) {
        WkAutomaton a = random_wk(rng);
        for (const Word& w : all_words(a.alphabet, 6))
            CHECK(eng::accepts(a, w) == naive_accepts(a, w));
    }
}

TEST_CASE("embedded automata behave like their finite automata") {
    std::mt19937 rng(53);
    for (int i = 0; i < 40; ++i) {
        Nfa n = random_nfa(rng);
        WkAutomaton a = classify::embed_nfa_to_wk(n);
        for (const Word& w : all_words(n.alphabet, 10))
            CHECK(eng::accepts(a, w) == nfa_simulate(n, w));
    }
}

TEST_CASE("equivalent_up_to") {
    WkAutomaton lo = load_wk("Lo_stateless.wka");
    WkAutomaton anbn = load_wk("anbn_stateless.wka");

    SUBCASE("reflexive") {
        auto eq = eng::equivalent_up_to(lo, lo, 8, true);
        CHECK(eq.equal);
        CHECK_FALSE(eq.counterexample.has_value());
    }
    SUBCASE("finds the smallest counterexample") {
        auto eq = eng::equivalent_up_to(anbn, lo, 3, true);
        REQUIRE_FALSE(eq.equal);
        CHECK(*eq.counterexample == "abb");
    }
    SUBCASE("modulo the empty word") {
        WkAutomaton only_empty = stateless({});
        WkAutomaton nothing = stateless({});
        nothing.finals.clear();
        CHECK(eng::equivalent_up_to(only_empty, nothing, 5, true).equal);
        CHECK_FALSE(eng::equivalent_up_to(only_empty, nothing, 5, false).equal);
        auto eq = eng::equivalent_up_to(only_empty, nothing, 5, false);
        CHECK(*eq.counterexample == Word{});
    }
    SUBCASE("alphabet mismatch is an error") {
        WkAutomaton other = lo;
        other.alphabet = {'a', 'c'};
        other.transitions.clear();
        CHECK_THROWS_AS((void)eng::equivalent_up_to(lo, other, 4, true),
                        std::invalid_argument);
    }
}

TEST_CASE("word ordering follows alphabet declaration order") {
    std::vector<Symbol> backwards = {'b', 'a'};
    CHECK(eng::word_less("b", "a", backwards));
    CHECK_FALSE(eng::word_less("a", "b", backwards));
    CHECK(eng::word_less("a", "aa", backwards));
    std::vector<Word> ws = {"ab", "bb", "a", ""};
    eng::sort_words(ws, backwards);
    CHECK(ws == std::vector<Word>{"", "a", "bb", "ab"});
}
