#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "support/builders.hpp"
#include "wka/cli.hpp"

using namespace wka::testsupport;
using nlohmann::json;

namespace {

struct Result {
    int code = -1;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    std::istringstream in;
    std::ostringstream out, err;
    Result r;
    r.code = wka::cli::run(std::move(args), in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::string lo() { return corpus_file("Lo_stateless.wka"); }
std::string anbn() { return corpus_file("anbn_stateless.wka"); }

} // namespace

TEST_CASE("accept exit codes") {
    CHECK(run_cli({"accept", lo(), "aabbb"}).code == 0);
    CHECK(run_cli({"accept", lo(), "aab"}).code == 1);
    CHECK(run_cli({"accept", lo(), ""}).code == 0);
    CHECK(run_cli({"accept", lo(), "_"}).code == 0);
}

TEST_CASE("accept rejects words outside the alphabet") {
    Result r = run_cli({"accept", lo(), "abc"});
    CHECK(r.code == 2);
    CHECK(r.err.find('c') != std::string::npos);
}

TEST_CASE("accept with a trace prints the computation") {
    Result r = run_cli({"accept", lo(), "aabbb", "--trace"});
    CHECK(r.code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 4);   // verdict + three configurations
    CHECK(lines[0] == "accepted");
    CHECK(lines[1] == "q 0 5");
    CHECK(lines[3].find("q 2 2") == 0);
}

TEST_CASE("trace command mirrors accept --trace") {
    Result r = run_cli({"trace", lo(), "aabbb"});
    CHECK(r.code == 0);
    CHECK(r.out.find("q 0 5") != std::string::npos);
}

TEST_CASE("enumerate prints words in order with lambda as underscore") {
    Result r = run_cli({"enumerate", anbn(), "--max-len", "4"});
    CHECK(r.code == 0);
    CHECK(lines_of(r.out) == std::vector<std::string>{"_", "ab", "aabb"});

    Result c = run_cli({"enumerate", anbn(), "--max-len", "4", "--count"});
    CHECK(lines_of(c.out) == std::vector<std::string>{"3"});
}

TEST_CASE("classify human output") {
    Result r = run_cli({"classify", lo()});
    CHECK(r.code == 0);
    CHECK(r.out.find("stateless: true") != std::string::npos);
    CHECK(r.out.find("deterministic: false") != std::string::npos);
    CHECK(r.out.find("quasi_deterministic: true") != std::string::npos);
}

TEST_CASE("classify bounded agreement verdict") {
    CHECK(run_cli({"classify", lo(), "--bounded", "8"}).code == 0);
    // a bound of 0 only exposes lambda-word configurations, so the bounded
    // oracle cannot see the conflict the exact checker reports
    CHECK(run_cli({"classify", lo(), "--bounded", "0"}).code == 1);
}

TEST_CASE("compare verdicts and counterexample") {
    Result same = run_cli({"compare", lo(), lo(), "--max-len", "6"});
    CHECK(same.code == 0);

    Result diff = run_cli({"compare", anbn(), lo(), "--max-len", "3"});
    CHECK(diff.code == 1);
    CHECK(diff.out.find("abb") != std::string::npos);
}

TEST_CASE("validate is clean on the corpus") {
    Result r = run_cli({"validate", lo()});
    CHECK(r.code == 0);
    CHECK(r.out == "ok\n");
}

TEST_CASE("usage and file errors exit 2") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"no_such_command"}).code == 2);
    CHECK(run_cli({"accept", "no_such_file.wka", "ab"}).code == 2);
    CHECK(run_cli({"enumerate", lo()}).code == 2);          // missing --max-len
    CHECK(run_cli({"accept", lo(), "ab", "--bogus"}).code == 2);
}

TEST_CASE("parse errors exit 2 with a message") {
    std::string path = "bad_automaton_test.wka";
    {
        std::ofstream f(path);
        f << "type: wk\nalphabet: a\nstates: q\ninitial: q\nfinal: q\nq a c -> q\n";
    }
    Result r = run_cli({"accept", path, "a"});
    CHECK(r.code == 2);
    CHECK(r.err.find("symbol outside alphabet") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("json outputs are parseable with stable fields") {
    for (auto args : std::vector<std::vector<std::string>>{
             {"accept", lo(), "aabbb", "--trace", "--json"},
             {"enumerate", anbn(), "--max-len", "4", "--json"},
             {"classify", lo(), "--bounded", "6", "--json"},
             {"compare", anbn(), lo(), "--max-len", "3", "--json"},
             {"validate", lo(), "--json"},
             {"claims", "--max-len", "5", "--corpus", corpus_dir(), "--json"}}) {
        Result r = run_cli(args);
        auto lines = lines_of(r.out);
        REQUIRE(!lines.empty());
        for (const std::string& line : lines) {
            json j = json::parse(line);
            CHECK(j.contains("command"));
            CHECK(j.contains("verdict"));
        }
    }

    json e = json::parse(lines_of(run_cli({"enumerate", anbn(), "--max-len", "4",
                                           "--json"})
                                      .out)[0]);
    CHECK(e["words"] == json::array({"_", "ab", "aabb"}));

    json c = json::parse(lines_of(run_cli({"compare", anbn(), lo(), "--max-len", "3",
                                           "--json"})
                                      .out)[0]);
    CHECK(c["verdict"] == false);
    CHECK(c["counterexample"] == "abb");
}

TEST_CASE("claims passes on the shipped corpus") {
    Result r = run_cli({"claims", "--max-len", "6", "--corpus", corpus_dir()});
    CHECK(r.code == 0);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() >= 10);
    CHECK(lines.back().find("passed") != std::string::npos);
}
