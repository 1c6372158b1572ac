#pragma once

#include "spinwhit/catalog.hpp"
#include "spinwhit/lie.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spinwhit {

/// One matrix entry of a first-order radial operator:
///   d * Da + c + x * (i xi / a),   Da = a d/da,
/// with xi a formal positive symbol.  Coefficients are complex radical sums;
/// the d and c parts are real except for the k = 0 operator on odd ranks, and
/// x picks up an imaginary part from diagonal inner terms on even ranks
/// (equivalently a real xi/a component).
struct RadialTerm {
    CSqrt d;
    CSqrt c;
    CSqrt x;

    bool is_zero() const { return d.is_zero() && c.is_zero() && x.is_zero(); }
    bool is_multiplication_only() const { return d.is_zero() && c.is_zero(); }
    std::string str() const;
};

/// Matrix of the radial operator moving the type lambda to lambda + eps_k on
/// the partial-pattern bases.  When the shifted type is not dominant the
/// target basis is empty and so is the matrix.
struct ShiftMatrix {
    int r = 4;
    SpinWeight lambda;
    SpinWeight gamma;
    int k = 1;
    int internal_k = 1;            // index after the boundary substitution
    SpinWeight lambda_target;
    bool target_dominant = true;
    std::vector<PartialGTPattern> source;
    std::vector<PartialGTPattern> target;
    std::map<std::pair<int, int>, RadialTerm> entries;  // (target row, source col)

    const RadialTerm* entry(int row, int col) const;
    int source_index(const PartialGTPattern& p) const;
    int target_index(const PartialGTPattern& p) const;
};

ShiftMatrix shift_matrix(const SpinWeight& lambda, const SpinWeight& gamma, int k);

/// Index substitution at the boundary |k| = n for even rank.
int internal_shift_index(int r, int k);

/// The spectral parameter attached to the shift k at type lambda.
HalfInt u_value(const SpinWeight& lambda, int k);

/// prod_i (u^2 - Lambda_i^2).
Rational central_scalar(const InfCharacter& lam, HalfInt u);

struct CentralZero {
    bool zero = false;
    std::string matched_case;  // "1".."4", "+n", "-n"; empty when nonzero
};
/// Vanishing test for the central scalar at u_value(lambda, k), together with
/// the closed-form case that produced the zero.  Both routes are evaluated and
/// must agree.
CentralZero central_zero_cases(const InfCharacter& lam, const SpinWeight& lambda, int k);

struct InjectivityResult {
    enum class Status { Certified, NotApplicable };
    Status status = Status::NotApplicable;
    int case_id = 0;         // 1..6
    int pivots_checked = 0;  // number of nonzero pivots the certificate verified
};
/// Certifies that the shift operator annihilates only zero, by matching one of
/// the six sufficient configurations and then re-running the triangular
/// elimination on the exact matrix: every pivot row must act by pure
/// multiplication on its pivot column and touch only earlier columns.
InjectivityResult injectivity_certificate(const SpinWeight& lambda, const SpinWeight& gamma,
                                          int k);

enum class DiscreteSeries { Plus, Minus };  // the two even-rank discrete series

struct EmbeddingOde {
    HalfInt exponent;  // solution a^(-exponent) * exp(sign * xi / a)
    int sign = 0;
    bool admits_moderate_solution = false;
};
/// First-order radial equation cut out by the lowering operators on the
/// minimal type of a discrete series; moderate growth as a -> 0+ holds exactly
/// when the exponential factor decays.
EmbeddingOde embedding_ode(const SpinWeight& lambda, const SpinWeight& gamma,
                           DiscreteSeries which);

/// Scalar of the odd-rank degree-(n+1) central element: (-1)^(n+1) prod Lambda_i.
/// Only the vanishing pattern is consumed downstream; the sign convention is
/// the product of the character values on the standard Cartan generators.
Rational pfaffian_scalar(const InfCharacter& lam);

/// Second-order radial entry: sum c[t][s] * (i xi/a)^t * Da^s with t+s <= 2.
struct SecondOrderTerm {
    CSqrt c[3][3];

    bool is_zero() const;
    std::string str() const;
};

struct ComposedMatrix {
    std::vector<PartialGTPattern> source;
    std::vector<PartialGTPattern> target;
    std::map<std::pair<int, int>, SecondOrderTerm> entries;

    bool is_diagonal() const;
};

/// Normal-ordered composition first . second, using Da (1/a) = (1/a)(Da - 1).
ComposedMatrix compose(const ShiftMatrix& first, const ShiftMatrix& second);

}  // namespace spinwhit
