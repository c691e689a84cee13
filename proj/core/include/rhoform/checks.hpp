#pragma once

#include <functional>
#include <string>
#include <vector>

namespace rhoform {

/// Outcome of one property suite. `cases` counts individual assertions;
/// failures keep a bounded sample of descriptions.
struct CheckResult {
    std::string name;
    bool passed = true;
    long cases = 0;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what);
    void merge(const CheckResult& other);
};

/// Knobs for the randomized suites; defaults match the acceptance criteria.
struct CheckConfig {
    unsigned long seed = 1;
    int scale_percent = 100; // unit tests dial this down
    long n(long full) const {
        long v = full * scale_percent / 100;
        return v < 1 ? 1 : v;
    }
};

CheckResult check_scalars(const CheckConfig& cfg);
CheckResult check_cocycle_laws(const CheckConfig& cfg);
CheckResult check_algebra_product(const CheckConfig& cfg);
CheckResult check_rho_commutativity(const CheckConfig& cfg);
CheckResult check_matrix_oracle(const CheckConfig& cfg);
CheckResult check_derivations(const CheckConfig& cfg);
CheckResult check_universal_calculus(const CheckConfig& cfg);
CheckResult check_universality(const CheckConfig& cfg);
CheckResult check_contraction(const CheckConfig& cfg);
CheckResult check_decompose(const CheckConfig& cfg);
CheckResult check_fn_bracket(const CheckConfig& cfg);
CheckResult check_naturality(const CheckConfig& cfg);
CheckResult check_cohomology(const CheckConfig& cfg);
CheckResult check_parser_roundtrip(const CheckConfig& cfg);

/// Registered suites in execution order, keyed by the names accepted by
/// `check --suite`.
std::vector<std::pair<std::string, std::function<CheckResult(const CheckConfig&)>>>
all_check_suites();

} // namespace rhoform
