#pragma once

#include "spinwhit/whittaker.hpp"

#include <random>
#include <string>
#include <vector>

namespace spinwhit::checks {

/// Independent counting oracle: product over the positive roots of so(r) of
/// <lambda+rho, alpha> / <rho, alpha>.
Int weyl_dimension(const SpinWeight& lambda);

/// <lambda, lambda + 2 rho> for so(r); the squared-generator sum acts by the
/// negative of this value.
Rational casimir_eigenvalue(const SpinWeight& lambda);

/// All dominant Spin(r) weights with |entries| <= bound, both integrality
/// classes, ascending.
std::vector<SpinWeight> enumerate_dominant(int rank, HalfInt bound);

/// Deterministic regular integral character with entries bounded by `top`.
InfCharacter random_inf_char(std::mt19937& rng, int r, int top);

struct CheckResult {
    std::string name;
    bool pass = true;
    long cases = 0;
    std::string detail;  // first failure, when any
};

struct Report {
    std::vector<CheckResult> results;

    bool all_pass() const;
    void add(CheckResult r) { results.push_back(std::move(r)); }
};

/// Pattern counting vs the dimension oracle, branching sum rule, duality,
/// and partial-pattern counting vs double branching.
Report gt_suite(int max_rank, HalfInt max_entry);

/// Skew-Hermitian generators, chain bracket relations, disjoint commutation,
/// the squared-generator scalar, and the vanishing law for shift coefficients.
Report lie_suite(int max_rank, HalfInt max_entry, HalfInt vanish_entry);

/// Spectrum boxes against the principal-series partition, pairwise
/// disjointness, and minimal-type minimization, for the given characters.
Report catalog_suite(const std::vector<InfCharacter>& lams, HalfInt cap);

/// Window exclusivity, derivation agreement, diagram structure, restriction
/// consistency, spectrum containment of gamma, and the sign-criterion
/// equivalence, sweeping |gamma_p| <= gamma_bound.
Report whittaker_suite(const std::vector<InfCharacter>& lams, HalfInt gamma_bound);

/// Central-scalar case matching over spectrum boxes, shift-matrix structure,
/// and sampled injectivity certificates.
Report radial_suite(const std::vector<InfCharacter>& lams, HalfInt cap, unsigned seed,
                    int samples_per_case);

Report run_suite(const std::string& name, int max_rank, HalfInt max_entry);

}  // namespace spinwhit::checks
