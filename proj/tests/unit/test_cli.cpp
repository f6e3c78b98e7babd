#include <cstdlib>
#include <sstream>

#include "doctest.h"

#include "arq/cli.hpp"

using namespace arq;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& file) { return std::string(ARQ_DATA_DIR) + "/" + file; }

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("sigma chains render as text") {
        auto r = run({"sigma", data("qc.json"), "--side", "L", "--format", "text"});
        CHECK(r.code == 0);
        CHECK(r.out == "ε_5 ⇢ p_{4,3} ⇢ p_∞\n");
        auto rr = run({"sigma", data("qc.json"), "--side", "R", "--format", "text"});
        CHECK(rr.out == "⋯ ⇠ ε_{-1} ⇠ ε_0 ⇠ ε_1 ⇠ p_{2,3} ⇠ p_{4,6} ⇠ ε_7 ⇠ ε_8 ⇠ ⋯\n");
    }

    TEST_CASE("translate and census") {
        auto t = run({"translate", data("qc.json"), "--rep", "M(p_inf)"});
        CHECK(t.code == 0);
        CHECK(t.out.find("\"name\": \"M(p_{4,3})\"") != std::string::npos);
        auto c = run({"census", data("dinf_noinf.json")});
        CHECK(c.out.find("\"regular\": 1") != std::string::npos);
        CHECK(c.out.find("\"shape\": \"ZAinf\"") != std::string::npos);
        auto w = run({"census", data("wild_inf.json")});
        CHECK(w.out.find("\"regular\": \"infinite\"") != std::string::npos);
    }

    TEST_CASE("component DOT export") {
        auto r = run({"component", data("qf.json"), "--seed", "preinjective:1", "--format", "dot"});
        CHECK(r.code == 0);
        CHECK(r.out.rfind("digraph", 0) == 0);
        CHECK(r.out.find("style=dashed") != std::string::npos);
    }

    TEST_CASE("exit codes") {
        auto bad = run({"validate", data("cycle.json")});
        CHECK(bad.code == 2);
        CHECK(bad.err.rfind("error: CoreCycle:", 0) == 0);
        CHECK(run({}).code == 1);
        CHECK(run({"translate", data("qc.json")}).code == 1);
        CHECK(run({"translate", data("qc.json"), "--rep", "Q(3)"}).code == 2);
        CHECK(run({"validate", data("does_not_exist.json")}).code == 2);
        CHECK(run({"validate", data("qc.json")}).code == 0);
    }

    TEST_CASE("output is deterministic") {
        for (std::vector<std::string> args : {std::vector<std::string>{"component", data("qc.json"), "--seed", "preprojective", "--depth", "3"},
                                              std::vector<std::string>{"connecting", data("a3.json"), "--depth", "3"},
                                              std::vector<std::string>{"qplus", data("qf.json")}}) {
            auto a = run(args), b = run(args);
            CHECK(a.code == 0);
            CHECK(a.out == b.out);
        }
    }

    TEST_CASE("field selection") {
        auto q = run({"translate", data("kronecker.json"), "--rep", "K(x)", "--field", "Fp:2"});
        CHECK(q.code == 0);
        setenv("ARQ_FIELD", "Fp:2", 1);
        auto e = run({"translate", data("kronecker.json"), "--rep", "K(x)"});
        CHECK(e.out == q.out);
        setenv("ARQ_FIELD", "bogus", 1);
        CHECK(run({"validate", data("qc.json")}).code == 2);
        CHECK(run({"validate", data("qc.json"), "--field", "Q"}).code == 0);
        unsetenv("ARQ_FIELD");
    }
}
