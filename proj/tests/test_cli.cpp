#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "rhoform/cli.hpp"

using namespace rhoform;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("golden outputs") {
    RunResult a = run({"normalize", "--algebra", "qplane:N=2", "x2*x1"});
    CHECK(a.code == 0);
    CHECK(a.out == "q^-1 * x1*x2\n");

    RunResult b = run({"commutator", "--algebra", "qplane:N=2", "x1", "x2"});
    CHECK(b.code == 0);
    CHECK(b.out == "0\n");

    RunResult c = run({"d", "--algebra", "qplane:N=2", "1"});
    CHECK(c.code == 0);
    CHECK(c.out == "0\n");
}

TEST_CASE("json envelope schema") {
    RunResult a = run({"normalize", "--algebra", "qplane:N=2", "x2*x1", "--format", "json"});
    REQUIRE(a.code == 0);
    json j = json::parse(a.out);
    REQUIRE(j.contains("input"));
    REQUIRE(j.contains("algebra"));
    REQUIRE(j.contains("result"));
    CHECK(j["input"].is_array());
    CHECK(j["algebra"] == "qplane:N=2");
    const json& result = j["result"];
    REQUIRE(result.contains("kind"));
    CHECK(result["kind"] == "element");
    REQUIRE(result["terms"].is_array());
    REQUIRE(result["terms"].size() == 1);
    CHECK(result["terms"][0]["coeff"] == "q^-1");
    CHECK(result["terms"][0]["monomial"] == "x1*x2");

    RunResult w = run({"d", "--algebra", "qplane:N=2", "x1*d(x2)", "--format", "json"});
    json jw = json::parse(w.out);
    CHECK(jw["result"]["kind"] == "form");
    REQUIRE(jw["result"]["terms"].size() == 1);
    CHECK(jw["result"]["terms"][0]["dslots"] == json::array({"x1", "x2"}));

    RunResult betti = run({"cohomology", "--algebra", "clockshift:n=2", "--grade", "0,0",
                           "--max-degree", "2", "--format", "json"});
    json jb = json::parse(betti.out);
    CHECK(jb["result"]["kind"] == "betti");
    CHECK(jb["result"]["betti"] == json::array({1, 0, 0}));
    CHECK(jb["result"]["dims"] == json::array({1, 3, 9}));
}

TEST_CASE("text and json agree in content") {
    RunResult text = run({"normalize", "--algebra", "qplane:N=2", "(x1+x2)^2"});
    RunResult js = run({"normalize", "--algebra", "qplane:N=2", "(x1+x2)^2", "--format", "json"});
    json j = json::parse(js.out);
    CHECK(text.out == j["result"]["text"].get<std::string>() + "\n");
}

TEST_CASE("exit codes and error JSON") {
    RunResult dom = run({"normalize", "--algebra", "qplane:N=2", "x3"});
    CHECK(dom.code == 1);
    json jd = json::parse(dom.out);
    CHECK(jd["error"]["kind"] == "UnknownGenerator");

    RunResult syn = run({"normalize", "--algebra", "qplane:N=2", "x1 + * x2"});
    CHECK(syn.code == 2);
    json js = json::parse(syn.out);
    CHECK(js["error"]["kind"] == "SyntaxError");
    CHECK(js["error"]["line"] == 1);
    CHECK(js["error"]["col"] == 6);

    RunResult div = run({"normalize", "--algebra", "qplane:N=2", "x1/0"});
    CHECK(div.code == 1);
    CHECK(json::parse(div.out)["error"]["kind"] == "DivisionByZero");

    RunResult usage = run({"no-such-subcommand"});
    CHECK(usage.code == 2);
}

TEST_CASE("subcommand coverage") {
    // apply-deriv: d2(x1 x2) = q x1
    RunResult ap = run({"apply-deriv", "--algebra", "qplane:N=2",
                        "deriv deg=(0,-1) x2->1", "x1*x2"});
    CHECK(ap.code == 0);
    CHECK(ap.out == "q * x1\n");

    RunResult wedge = run({"wedge", "--algebra", "qplane:N=2", "x1*d(x2)", "d(x1)"});
    CHECK(wedge.out == "x1*d(x2) /\\ d(x1)\n");

    RunResult con = run({"contract", "--algebra", "qplane:N=2",
                         "deriv deg=(-1,0) x1->1", "x2*d(x1)"});
    CHECK(con.out == "q^-1 * x2\n");

    RunResult lie = run({"lie", "--algebra", "qplane:N=2", "id", "x1*d(x2)"});
    CHECK(lie.out == "d(x1) /\\ d(x2)\n");

    RunResult nij = run({"nijenhuis", "--algebra", "qplane:N=2", "deriv deg=(-1,0) x1->1", "id"});
    CHECK(nij.code == 0);
    CHECK(nij.out == "fvform k=0 deg=(-1,0) x1->1 x2->0\n");

    RunResult fn = run({"fn-bracket", "--algebra", "qplane:N=2", "id", "id"});
    CHECK(fn.code == 0);
    CHECK(fn.out == "fvform k=2 deg=(0,0) x1->0 x2->0\n");

    RunResult dec = run({"decompose", "--algebra", "qplane:N=2",
                         "omegaderiv k=1 deg=(0,0) x1->d(x1) x2->d(x2) dx1->0 dx2->0"});
    CHECK(dec.code == 0);
    CHECK(dec.out == "K: fvform k=1 deg=(0,0) x1->d(x1) x2->d(x2)\n"
                     "L: fvform k=2 deg=(0,0) x1->0 x2->0\n");

    RunResult om = run({"omega-map", "--algebra", "qplane:N=2", "hom x1->x1 x2->0", "d(x2)"});
    CHECK(om.out == "0\n");

    RunResult rel = run({"related", "--algebra", "qplane:N=2", "hom x1->x1 x2->0",
                         "deriv deg=(0,0) x2->x2", "fvform k=0 deg=(0,0)"});
    CHECK(rel.out == "true\n");

    RunResult nat = run({"naturality", "--algebra", "qplane:N=2", "hom x1->x1 x2->0",
                         "id", "id", "id", "id"});
    CHECK(nat.code == 0);

    RunResult coh = run({"cohomology", "--algebra", "clockshift:n=2", "--grade", "1,0",
                         "--max-degree", "1"});
    CHECK(coh.out == "betti: [0, 0]\ndims: [1, 3]\n");
}

TEST_CASE("emitted fvform text round-trips as a spec argument") {
    RunResult nij = run({"nijenhuis", "--algebra", "qplane:N=2", "deriv deg=(-1,0) x1->1", "id"});
    REQUIRE(nij.code == 0);
    std::string spec = nij.out.substr(0, nij.out.size() - 1); // drop newline
    // feeding the emitted text back must reproduce j_X(x2 dx1) = q^-1 x2
    RunResult con = run({"contract", "--algebra", "qplane:N=2", spec, "x2*d(x1)"});
    CHECK(con.code == 0);
    CHECK(con.out == "q^-1 * x2\n");
}

TEST_CASE("nontrivial phi through the CLI") {
    RunResult tw = run({"wedge", "--algebra", "cyclic:n=4", "--phi", "eps", "d(g1)", "g1"});
    CHECK(tw.code == 0);
    CHECK(tw.out == "d(g1^2) - eps * g1*d(g1)\n");
    // phi values are validated against the torsion orders
    RunResult bad = run({"wedge", "--algebra", "cyclic:n=4", "--phi", "2", "d(g1)", "g1"});
    CHECK(bad.code == 1);
    CHECK(json::parse(bad.out)["error"]["kind"] == "IllDefined");
}

TEST_CASE("deterministic output for a fixed seed") {
    std::vector<std::string> args = {"check", "--suite", "parser-roundtrip", "--seed", "99",
                                     "--scale", "10"};
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("check subcommand reports failures honestly") {
    RunResult unknown = run({"check", "--suite", "no-such-suite"});
    CHECK(unknown.code == 1);
}
