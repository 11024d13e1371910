#include "wka/cli.hpp"

#include <algorithm>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wka/classify.hpp"
#include "wka/engine.hpp"
#include "wka/format.hpp"
#include "wka/model.hpp"
#include "wka/witness.hpp"

#ifndef WKA_DEFAULT_CORPUS_DIR
#define WKA_DEFAULT_CORPUS_DIR "corpus"
#endif

namespace wka::cli {

namespace {

using nlohmann::json;

Word word_argument(const std::string& raw, const std::vector<Symbol>& alphabet) {
    if (raw.empty() || raw == "_") return {};
    for (char c : raw)
        if (std::find(alphabet.begin(), alphabet.end(), c) == alphabet.end())
            throw std::runtime_error(std::string("word symbol '") + c +
                                     "' is not in the automaton alphabet");
    return raw;
}

json conflict_json(const classify::TransitionConflict& c) {
    return json{{"state", c.state},
                {"first", to_string(c.first)},
                {"second", to_string(c.second)}};
}

json report_json(const classify::ClassificationReport& r) {
    return json{{"stateless", r.stateless},
                {"all_final", r.all_final},
                {"simple", r.simple},
                {"one_limited", r.one_limited},
                {"state_deterministic", r.state_deterministic},
                {"deterministic", r.deterministic},
                {"quasi_deterministic", r.quasi_deterministic}};
}

void print_flag(std::ostream& out, const char* name, bool value,
                const std::optional<classify::TransitionConflict>& conflict) {
    out << name << ": " << (value ? "true" : "false");
    if (conflict)
        out << "   (" << conflict->state << ": " << to_string(conflict->first)
            << "  |  " << to_string(conflict->second) << ")";
    out << "\n";
}

int cmd_validate(const std::string& file, bool as_json, std::ostream& out) {
    format::AutomatonFile f = format::load(file);
    std::vector<std::string> violations =
        f.is_wk() ? validate(f.wk()) : validate(f.nfa());
    if (as_json) {
        out << json{{"command", "validate"},
                    {"verdict", violations.empty()},
                    {"evidence", violations}}
                   .dump()
            << "\n";
    } else {
        for (const std::string& v : violations) out << v << "\n";
        if (violations.empty()) out << "ok\n";
    }
    return violations.empty() ? 0 : 1;
}

int cmd_classify(const std::string& file, bool no_trim, int bounded, bool as_json,
                 std::ostream& out) {
    format::AutomatonFile f = format::load(file);
    bool use_trim = !no_trim;
    bool verdict = true;
    json j{{"command", "classify"}};

    WkAutomaton view = f.is_wk() ? f.wk() : classify::embed_nfa_to_wk(f.nfa());

    if (!f.is_wk()) {
        classify::NfaFlags nf = classify::nfa_flags(f.nfa());
        j["kind"] = "nfa";
        j["nfa"] = json{{"is_dfa", nf.is_dfa},
                        {"lambda_free", nf.lambda_free},
                        {"state_deterministic", nf.state_deterministic},
                        {"quasi_deterministic", nf.quasi_deterministic}};
        if (nf.quasi_deterministic) {
            classify::StatePartition p = classify::partition_states(f.nfa());
            j["partition"] = json{{"q_d", p.q_d}, {"q_s", p.q_s}};
        }
        if (!as_json) {
            out << "is_dfa: " << (nf.is_dfa ? "true" : "false") << "\n";
            out << "lambda_free: " << (nf.lambda_free ? "true" : "false") << "\n";
            out << "state_deterministic: "
                << (nf.state_deterministic ? "true" : "false") << "\n";
            out << "quasi_deterministic: "
                << (nf.quasi_deterministic ? "true" : "false") << "\n";
            if (nf.quasi_deterministic) {
                classify::StatePartition p = classify::partition_states(f.nfa());
                out << "q_d:";
                for (const StateId& q : p.q_d) out << ' ' << q;
                out << "\nq_s:";
                for (const StateId& q : p.q_s) out << ' ' << q;
                out << "\n";
            }
            out << "--- as wk automaton (left head only) ---\n";
        }
    } else {
        j["kind"] = "wk";
    }

    classify::ClassificationReport r = classify::classify(view, use_trim);
    j["report"] = report_json(r);
    json evidence = json::object();
    if (r.state_det_conflict) evidence["state_deterministic"] = conflict_json(*r.state_det_conflict);
    if (r.det_conflict) evidence["deterministic"] = conflict_json(*r.det_conflict);
    if (r.quasi_det_conflict) evidence["quasi_deterministic"] = conflict_json(*r.quasi_det_conflict);
    j["evidence"] = evidence;

    if (!as_json) {
        print_flag(out, "stateless", r.stateless, std::nullopt);
        print_flag(out, "all_final", r.all_final, std::nullopt);
        print_flag(out, "simple", r.simple, std::nullopt);
        print_flag(out, "one_limited", r.one_limited, std::nullopt);
        print_flag(out, "state_deterministic", r.state_deterministic, r.state_det_conflict);
        print_flag(out, "deterministic", r.deterministic, r.det_conflict);
        print_flag(out, "quasi_deterministic", r.quasi_deterministic, r.quasi_det_conflict);
    }

    if (bounded >= 0) {
        // the exact checkers looked at this view; run the oracle on the same one
        WkAutomaton oracle_view = use_trim ? trim(view) : view;
        auto sd = classify::bounded_semantic_determinism(
            oracle_view, classify::DeterminismKind::deterministic, bounded);
        auto sq = classify::bounded_semantic_determinism(
            oracle_view, classify::DeterminismKind::quasi_deterministic, bounded);
        bool agree = sd.holds == r.deterministic && sq.holds == r.quasi_deterministic;
        verdict = agree;
        json b{{"max_len", bounded},
               {"deterministic", sd.holds},
               {"quasi_deterministic", sq.holds},
               {"agrees", agree}};
        if (sd.counterexample)
            b["deterministic_counterexample"] =
                json{{"input", format::render_word(sd.counterexample->input)},
                     {"state", sd.counterexample->config.state},
                     {"lo", sd.counterexample->config.lo},
                     {"hi", sd.counterexample->config.hi},
                     {"first", to_string(sd.counterexample->first)},
                     {"second", to_string(sd.counterexample->second)}};
        j["bounded"] = b;
        if (!as_json) {
            out << "bounded(max_len=" << bounded << "): deterministic="
                << (sd.holds ? "true" : "false") << " quasi_deterministic="
                << (sq.holds ? "true" : "false") << " agrees="
                << (agree ? "yes" : "NO") << "\n";
        }
    }

    j["verdict"] = verdict;
    if (as_json) out << j.dump() << "\n";
    return verdict ? 0 : 1;
}

int cmd_accept(const std::string& file, const std::string& raw_word, bool with_trace,
               bool as_json, std::ostream& out) {
    format::AutomatonFile f = format::load(file);
    WkAutomaton a = f.is_wk() ? f.wk() : classify::embed_nfa_to_wk(f.nfa());
    Word w = word_argument(raw_word, a.alphabet);

    std::optional<engine::Trace> tr;
    bool verdict;
    if (with_trace) {
        tr = engine::trace(a, w);
        verdict = tr.has_value();
    } else {
        verdict = engine::accepts(a, w);
    }

    if (as_json) {
        json j{{"command", "accept"},
               {"word", format::render_word(w)},
               {"verdict", verdict}};
        if (tr) {
            json steps = json::array();
            for (size_t i = 0; i < tr->configs.size(); ++i) {
                json s{{"state", tr->configs[i].state},
                       {"lo", tr->configs[i].lo},
                       {"hi", tr->configs[i].hi}};
                if (i > 0) s["via"] = to_string(tr->transitions[i - 1]);
                steps.push_back(std::move(s));
            }
            j["trace"] = steps;
        }
        out << j.dump() << "\n";
    } else {
        out << (verdict ? "accepted" : "rejected") << "\n";
        if (tr) {
            for (size_t i = 0; i < tr->configs.size(); ++i) {
                out << tr->configs[i].state << ' ' << tr->configs[i].lo << ' '
                    << tr->configs[i].hi;
                if (i > 0) out << "  via " << to_string(tr->transitions[i - 1]);
                out << "\n";
            }
        }
    }
    return verdict ? 0 : 1;
}

int cmd_enumerate(const std::string& file, int max_len, bool count_only, bool as_json,
                  std::ostream& out) {
    format::AutomatonFile f = format::load(file);
    WkAutomaton a = f.is_wk() ? f.wk() : classify::embed_nfa_to_wk(f.nfa());
    std::vector<Word> words = engine::enumerate(a, max_len);
    if (as_json) {
        json j{{"command", "enumerate"},
               {"verdict", true},
               {"count", words.size()}};
        if (!count_only) {
            json arr = json::array();
            for (const Word& w : words) arr.push_back(format::render_word(w));
            j["words"] = arr;
        }
        out << j.dump() << "\n";
    } else if (count_only) {
        out << words.size() << "\n";
    } else {
        for (const Word& w : words) out << format::render_word(w) << "\n";
    }
    return 0;
}

int cmd_compare(const std::string& file1, const std::string& file2, int max_len,
                bool strict_empty, bool as_json, std::ostream& out) {
    format::AutomatonFile f1 = format::load(file1);
    format::AutomatonFile f2 = format::load(file2);
    WkAutomaton a = f1.is_wk() ? f1.wk() : classify::embed_nfa_to_wk(f1.nfa());
    WkAutomaton b = f2.is_wk() ? f2.wk() : classify::embed_nfa_to_wk(f2.nfa());
    engine::Equivalence eq = engine::equivalent_up_to(a, b, max_len, !strict_empty);
    if (as_json) {
        json j{{"command", "compare"},
               {"verdict", eq.equal},
               {"max_len", max_len}};
        if (eq.counterexample)
            j["counterexample"] = format::render_word(*eq.counterexample);
        out << j.dump() << "\n";
    } else if (eq.equal) {
        out << "equivalent up to length " << max_len << "\n";
    } else {
        out << "differ at " << format::render_word(*eq.counterexample) << "\n";
    }
    return eq.equal ? 0 : 1;
}

int cmd_claims(const std::string& corpus, int max_len, bool as_json, std::ostream& out) {
    std::vector<witness::ClaimRecord> records = witness::bundled_automata(corpus);
    witness::ClaimSummary summary = witness::check_claims(records, max_len);
    for (const witness::ClaimRecord& r : records) {
        if (as_json) {
            json j{{"command", "claims"},
                   {"record", r.claim_id},
                   {"verdict", r.passed()},
                   {"language_match", r.language_match.value_or(false)},
                   {"flags_match", r.flags_match.value_or(false)}};
            if (!r.details.empty()) j["evidence"] = r.details;
            out << j.dump() << "\n";
        } else {
            out << (r.passed() ? "[PASS] " : "[FAIL] ") << r.claim_id
                << "  language=" << (r.language_match.value_or(false) ? "ok" : "MISMATCH")
                << " flags=" << (r.flags_match.value_or(false) ? "ok" : "MISMATCH");
            if (!r.details.empty()) out << "  (" << r.details << ")";
            out << "\n";
        }
    }
    if (as_json) {
        out << json{{"command", "claims"},
                    {"verdict", summary.all_passed()},
                    {"passed", summary.passed},
                    {"total", summary.total},
                    {"max_len", max_len}}
                   .dump()
            << "\n";
    } else {
        out << "claims: " << summary.passed << "/" << summary.total
            << " passed (max_len=" << max_len << ")\n";
    }
    return summary.all_passed() ? 0 : 1;
}

} // namespace

int run(std::vector<std::string> args, std::istream&, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"sensing 5'->3' Watson-Crick automata toolkit", "wka"};
    app.require_subcommand(1);

    std::string file, file2, word;
    bool as_json = false, no_trim = false, with_trace = false, count_only = false;
    bool strict_empty = false;
    int max_len = 0, bounded = -1, claims_max_len = 10;
    std::string corpus = WKA_DEFAULT_CORPUS_DIR;

    CLI::App* validate_cmd = app.add_subcommand("validate", "check an automaton file");
    validate_cmd->add_option("file", file)->required();
    validate_cmd->add_flag("--json", as_json);

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "structural and determinism classification");
    classify_cmd->add_option("file", file)->required();
    classify_cmd->add_flag("--no-trim", no_trim,
                           "classify the automaton as given, without trimming");
    classify_cmd->add_option("--bounded", bounded,
                             "cross-check D/qD with the bounded semantic oracle");
    classify_cmd->add_flag("--json", as_json);

    CLI::App* accept_cmd = app.add_subcommand("accept", "decide membership of a word");
    accept_cmd->add_option("file", file)->required();
    accept_cmd->add_option("word", word, "input word; \"\" or _ for the empty word")
        ->required();
    accept_cmd->add_flag("--trace", with_trace, "print an accepting computation");
    accept_cmd->add_flag("--json", as_json);

    CLI::App* trace_cmd =
        app.add_subcommand("trace", "like accept --trace");
    trace_cmd->add_option("file", file)->required();
    trace_cmd->add_option("word", word)->required();
    trace_cmd->add_flag("--json", as_json);

    CLI::App* enum_cmd =
        app.add_subcommand("enumerate", "list accepted words up to a length");
    enum_cmd->add_option("file", file)->required();
    enum_cmd->add_option("--max-len", max_len)->required();
    enum_cmd->add_flag("--count", count_only, "print only the number of words");
    enum_cmd->add_flag("--json", as_json);

    CLI::App* compare_cmd =
        app.add_subcommand("compare", "bounded language equivalence of two automata");
    compare_cmd->add_option("file1", file)->required();
    compare_cmd->add_option("file2", file2)->required();
    compare_cmd->add_option("--max-len", max_len)->required();
    compare_cmd->add_flag("--strict-empty", strict_empty,
                          "count the empty word as a difference");
    compare_cmd->add_flag("--json", as_json);

    CLI::App* claims_cmd =
        app.add_subcommand("claims", "replay the bundled classification claims");
    claims_cmd->add_option("--max-len", claims_max_len);
    claims_cmd->add_option("--corpus", corpus, "corpus directory");
    claims_cmd->add_flag("--json", as_json);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(validate_cmd))
            return cmd_validate(file, as_json, out);
        if (app.got_subcommand(classify_cmd))
            return cmd_classify(file, no_trim, bounded, as_json, out);
        if (app.got_subcommand(accept_cmd))
            return cmd_accept(file, word, with_trace, as_json, out);
        if (app.got_subcommand(trace_cmd))
            return cmd_accept(file, word, true, as_json, out);
        if (app.got_subcommand(enum_cmd))
            return cmd_enumerate(file, max_len, count_only, as_json, out);
        if (app.got_subcommand(compare_cmd))
            return cmd_compare(file, file2, max_len, strict_empty, as_json, out);
        if (app.got_subcommand(claims_cmd))
            return cmd_claims(corpus, claims_max_len, as_json, out);
    } catch (const format::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

} // namespace wka::cli
