#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace eulersum {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string lhs;
    std::string rhs;
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::size_t failures() const;
    std::string to_json() const;
    void write_text(std::ostream& os) const;
};

// Check groups. Each returns one CheckResult per verified identity; ids are
// stable strings so reports can be diffed across runs.
std::vector<CheckResult> checks_xi_three_way(unsigned max_n);
std::vector<CheckResult> checks_xi_depth_displays(unsigned max_n);
std::vector<CheckResult> checks_row_sum(unsigned max_n);
std::vector<CheckResult> checks_gkz_exact(unsigned max_n);
std::vector<CheckResult> checks_gkz_numeric();
std::vector<CheckResult> checks_psi_coefficients(unsigned max_n);
std::vector<CheckResult> checks_alpha_consistency(unsigned max_n);
std::vector<CheckResult> checks_a1_row(unsigned max_n);
std::vector<CheckResult> checks_poly_systems(unsigned max_d);
std::vector<CheckResult> checks_lemma_cross(unsigned max_n);
std::vector<CheckResult> checks_extra_identities(unsigned max_n);
std::vector<CheckResult> checks_ramanujan_exact();
std::vector<CheckResult> checks_ramanujan_numeric();
std::vector<CheckResult> checks_oracle_vs_exact(unsigned max_n);
std::vector<CheckResult> checks_stuffle_numeric(unsigned pairs, std::uint64_t seed);

constexpr std::uint64_t kStuffleSeed = 20120715;  // fixed: suite runs are reproducible

/// Assemble a named suite: "exact" (deterministic rational identities,
/// depth-limited by max_n), "numeric" (oracle comparisons, max_n applies to
/// the sweep), "stuffle", or "all".
VerifyReport run_suite(const std::string& name, unsigned max_n_exact, unsigned max_n_numeric);

}  // namespace eulersum
