// Acceptance gate: one line per criterion, every identity checked with exact
// (zero-tolerance) equality over Q(eps_n)(q). Exit code 0 iff all pass.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rhoform/checks.hpp"
#include "rhoform/cli.hpp"

using namespace rhoform;

namespace {

struct Criterion {
    int number;
    std::string label;
    double budget_seconds;
    std::function<CheckResult(const CheckConfig&)> fn;
};

CheckResult cli_and_schema_checks(const CheckConfig& cfg) {
    CheckResult r{"cli-golden"};
    auto run = [](std::vector<std::string> args, std::string* out_text = nullptr) {
        std::ostringstream out, err;
        int code = run_command(args, out, err);
        if (out_text) *out_text = out.str();
        return code;
    };
    std::string out;

    int code = run({"normalize", "--algebra", "qplane:N=2", "x2*x1"}, &out);
    r.require(code == 0 && out == "q^-1 * x1*x2\n", "golden: normalize x2*x1");
    code = run({"commutator", "--algebra", "qplane:N=2", "x1", "x2"}, &out);
    r.require(code == 0 && out == "0\n", "golden: commutator x1 x2");
    code = run({"d", "--algebra", "qplane:N=2", "1"}, &out);
    r.require(code == 0 && out == "0\n", "golden: d(1)");

    // JSON schema validation of the envelope
    code = run({"normalize", "--algebra", "qplane:N=2", "x2*x1", "--format", "json"}, &out);
    r.require(code == 0, "json normalize exit code");
    try {
        nlohmann::json j = nlohmann::json::parse(out);
        r.require(j.contains("input") && j["input"].is_array(), "schema: input array");
        r.require(j.contains("algebra") && j["algebra"].is_string(), "schema: algebra string");
        r.require(j.contains("result") && j["result"].is_object(), "schema: result object");
        const auto& result = j["result"];
        r.require(result.contains("kind") && result["kind"] == "element", "schema: kind");
        r.require(result.contains("terms") && result["terms"].is_array(), "schema: terms");
        for (const auto& t : result["terms"]) {
            r.require(t.contains("coeff") && t["coeff"].is_string(), "schema: term coeff");
            r.require(t.contains("monomial") && t["monomial"].is_string(),
                      "schema: term monomial");
        }
        r.require(result["terms"][0]["coeff"] == "q^-1" &&
                      result["terms"][0]["monomial"] == "x1*x2",
                  "schema: term content");
    } catch (const std::exception& e) {
        r.require(false, std::string("json parse failure: ") + e.what());
    }
    // error JSON and exit codes
    code = run({"normalize", "--algebra", "qplane:N=2", "x3"}, &out);
    r.require(code == 1 && nlohmann::json::parse(out)["error"]["kind"] == "UnknownGenerator",
              "domain errors exit 1 with machine-readable JSON");
    code = run({"normalize", "--algebra", "qplane:N=2", "x1 +"}, &out);
    r.require(code == 2 && nlohmann::json::parse(out)["error"]["kind"] == "SyntaxError",
              "syntax errors exit 2");

    r.merge(check_parser_roundtrip(cfg));
    return r;
}

} // namespace

int main(int argc, char** argv) {
    CheckConfig cfg;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--seed" && i + 1 < argc) cfg.seed = std::stoul(argv[++i]);
    }

    std::vector<Criterion> criteria = {
        {1, "cocycle laws: inverse symmetry, biadditivity, rhobar sign rule", 5.0,
         check_cocycle_laws},
        {2, "rho-commutativity (S_4^q random, clock-shift exhaustive)", 10.0,
         check_rho_commutativity},
        {3, "matrix oracle equivalence on all basis pairs, n in {2,3}", 5.0,
         check_matrix_oracle},
        {4, "universal calculus: d^2 = 0 and graded Leibniz (phi trivial and eps_4)", 30.0,
         check_universal_calculus},
        {5, "universality: induced hom f.d = X and round trips", 10.0, check_universality},
        {6, "contraction: j_K Leibniz, restriction to one-forms, rhobar-Jacobi", 60.0,
         check_contraction},
        {7, "decomposition: decompose(L_K + j_L) = (K, L)", 60.0, check_decompose},
        {8, "FN bracket: field case and L_[K,L] = [L_K, L_L]", 120.0, check_fn_bracket},
        {9, "naturality battery with witnessed negative", 30.0, check_naturality},
        {10, "cohomology: betti, b0 pattern, d^2 and rank-nullity", 120.0, check_cohomology},
        {11, "CLI golden files, JSON schema, print/parse round trips", 10.0,
         cli_and_schema_checks},
    };

    bool all_ok = true;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        CheckResult res = c.fn(cfg);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_budget = secs < c.budget_seconds;
        bool ok = res.passed && in_budget;
        all_ok = all_ok && ok;
        std::cout << "criterion " << c.number << " (" << c.label << "): "
                  << (ok ? "PASS" : "FAIL") << " [" << res.cases << " checks, " << secs
                  << " s, budget " << c.budget_seconds << " s]\n";
        if (!res.passed)
            for (const auto& f : res.failures) std::cout << "    failure: " << f << "\n";
        if (!in_budget) std::cout << "    over budget\n";
    }
    std::cout << (all_ok ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL") << "\n";
    return all_ok ? 0 : 1;
}
