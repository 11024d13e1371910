#ifndef WKA_TESTS_BUILDERS_HPP
#define WKA_TESTS_BUILDERS_HPP

#include <string>

#include "wka/format.hpp"
#include "wka/model.hpp"

#ifndef WKA_CORPUS_DIR
#define WKA_CORPUS_DIR "corpus"
#endif

namespace wka::testsupport {

inline std::string corpus_dir() { return WKA_CORPUS_DIR; }

inline std::string corpus_file(const std::string& name) {
    return corpus_dir() + "/" + name;
}

inline WkAutomaton load_wk(const std::string& name) {
    return format::load(corpus_file(name)).wk();
}

inline Nfa load_nfa(const std::string& name) {
    return format::load(corpus_file(name)).nfa();
}

/// One-state automaton over {a,b} with the given loop transitions.
inline WkAutomaton stateless(std::vector<std::pair<Word, Word>> loops) {
    WkAutomaton a;
    a.alphabet = {'a', 'b'};
    a.states = {"q"};
    a.initial = "q";
    a.finals = {"q"};
    for (auto& [u, v] : loops) a.transitions.push_back({"q", u, v, "q"});
    return a;
}

} // namespace wka::testsupport

#endif
