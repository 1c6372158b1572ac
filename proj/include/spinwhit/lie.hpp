#pragma once

#include "spinwhit/pattern.hpp"
#include "spinwhit/sqrtsum.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <vector>

namespace spinwhit {

/// Row-shifted index values attached to a pattern: on odd rows
/// l_{2i-1,j} = q_{2i-1,j} + i - j with l_{2i-1,-j} = -l_{2i-1,j}; on even rows
/// l_{2i,j} = q_{2i,j} + i + 1 - j with l_{2i,-j} = -l_{2i,j} + 1 and l_{2i,0} = 0.
template <typename P>
HalfInt l_value(const P& pat, int row, int j) {
    if (j < 0) {
        HalfInt pos = l_value(pat, row, -j);
        return row % 2 == 0 ? -pos + HalfInt::whole(1) : -pos;
    }
    if (j == 0) {
        if (row % 2 != 0) throw std::invalid_argument("index 0 only exists on even rows");
        return HalfInt(0);
    }
    const std::vector<HalfInt>* q = pat.row_or_null(row);
    if (q == nullptr) throw std::invalid_argument("row " + std::to_string(row) + " absent");
    int i = (row + 1) / 2;
    std::int64_t shift = (row % 2 == 0) ? (i + 1 - j) : (i - j);
    return q->at(static_cast<std::size_t>(j) - 1) + shift;
}

enum class CoeffMode {
    Strict,         // radicand sign must match the formula; mismatch throws
    MagnitudeOnly,  // truncated evaluation: absolute value under the root
};

/// The square-root coefficient attached to shifting position j of row `level`.
/// Factors that reference a row the pattern does not carry are dropped, which
/// is what makes the same core serve both full patterns (all rows present)
/// and the three-row partial patterns.  Shift coefficients (j != 0) are real;
/// the j = 0 diagonal coefficients are purely imaginary.
template <typename P>
CSqrt gt_coeff_core(const P& pat, int level, int j, CoeffMode mode) {
    const bool even = level % 2 == 0;
    const int i = even ? level / 2 : (level + 1) / 2;
    if (even ? std::abs(j) > i : (j == 0 || std::abs(j) > i)) {
        throw std::invalid_argument("shift index " + std::to_string(j) + " out of range on row " +
                                    std::to_string(level));
    }
    HalfInt lj = l_value(pat, level, j);

    int sign = j > 0 ? 1 : (j < 0 ? -1 : 0);
    if (even && j == 0) {
        sign = 1;
        if (const auto* below = pat.row_or_null(level - 1)) {
            sign *= below->at(static_cast<std::size_t>(i) - 1).sgn();
        }
        if (const auto* above = pat.row_or_null(level + 1)) {
            sign *= above->at(static_cast<std::size_t>(i)).sgn();
        }
    }
    if (sign == 0) return CSqrt();

    std::vector<Rational> numerator, denominator;
    auto gather = [&](int row, int lo, int hi) {
        if (pat.row_or_null(row) == nullptr) return;
        for (int k = lo; k <= hi; ++k) {
            if (k == 0) continue;
            numerator.push_back((lj + l_value(pat, row, k)).to_rational());
        }
    };
    if (even) {
        gather(level - 1, -i, i);
        gather(level + 1, -(i + 1), i + 1);
        Rational ljq = lj.to_rational();
        denominator.push_back(4 * ljq * ljq - 1);
        for (int k = -i; k <= i; ++k) {
            if (k == j || k == -j) continue;
            if (k == 0 && j == 0) continue;
            Rational lk = l_value(pat, level, k).to_rational();
            denominator.push_back(ljq + lk);
            denominator.push_back(ljq - lk);
        }
    } else {
        gather(level - 1, -(i - 1), i - 1);
        gather(level + 1, -i, i);
        denominator.push_back(Rational(4));
        for (int k = -i; k <= i; ++k) {
            if (k == 0 || k == j || k == -j) continue;
            Rational lk = l_value(pat, level, k).to_rational();
            denominator.push_back(lj.to_rational() + lk);
            denominator.push_back(lj.to_rational() + lk + 1);
        }
    }

    int radicand_sign = -1;  // the formula reads sqrt(-N/D)
    std::vector<Rational> mags;
    for (const Rational& f : numerator) {
        int s = sgn(f);
        if (s == 0) return CSqrt();
        radicand_sign *= s;
        mags.push_back(s < 0 ? Rational(-f) : f);
    }
    for (const Rational& f : denominator) {
        int s = sgn(f);
        if (s == 0) {
            throw std::logic_error("vanishing denominator in shift coefficient on row " +
                                   std::to_string(level) + ", j=" + std::to_string(j));
        }
        radicand_sign *= s;
        mags.push_back(Rational(1) / (s < 0 ? Rational(-f) : f));
    }

    const bool want_imaginary = even && j == 0;
    if (mode == CoeffMode::Strict && radicand_sign != (want_imaginary ? -1 : 1)) {
        throw std::logic_error("radicand sign violates the coefficient formula on row " +
                               std::to_string(level) + ", j=" + std::to_string(j));
    }
    SqrtSum mag = SqrtSum::sqrt_of_factor_product(sign, mags);
    return want_imaginary ? CSqrt::imaginary(mag) : CSqrt(mag);
}

/// Guarded coefficient on a full pattern: 0 whenever the shifted pattern
/// leaves the pattern set, so no factor is ever evaluated at a degenerate
/// configuration.  Levels run over 1..r-2.
CSqrt coeff_a(const GTPattern& pattern, int level, int j);

/// Dense matrix over exact complex radical sums.
class GenMatrix {
public:
    GenMatrix() = default;
    explicit GenMatrix(int dim) : dim_(dim), m_(static_cast<std::size_t>(dim) * dim) {}

    int dim() const { return dim_; }
    CSqrt& at(int row, int col) { return m_[static_cast<std::size_t>(row) * dim_ + col]; }
    const CSqrt& at(int row, int col) const { return m_[static_cast<std::size_t>(row) * dim_ + col]; }

    GenMatrix operator+(const GenMatrix& o) const;
    GenMatrix operator-(const GenMatrix& o) const;
    GenMatrix operator*(const GenMatrix& o) const;
    GenMatrix bracket(const GenMatrix& o) const;  // [this, o]
    bool operator==(const GenMatrix& o) const { return dim_ == o.dim_ && m_ == o.m_; }

    bool is_zero() const;
    /// Skew-Hermitian test: transpose equals negated conjugate, entrywise exact.
    bool is_skew_hermitian() const;
    /// Real shift part is skew-symmetric and the imaginary part is symmetric.
    bool real_part_skew() const;

private:
    int dim_ = 0;
    std::vector<CSqrt> m_;
};

/// All generator matrices of one representation, built on the pattern basis.
class LieAction {
public:
    explicit LieAction(const SpinWeight& lambda);

    int rank() const { return lambda_.rank; }
    const std::vector<GTPattern>& basis() const { return basis_; }
    int index_of(const GTPattern& p) const;

    /// Matrix of the chain generator indexed by p (rows p+1, p), 1 <= p <= r-1.
    const GenMatrix& chain_generator(int p);
    /// Matrix of the generator with row pair (p, q), r >= p > q >= 1, built by
    /// bracketing down the chain.
    const GenMatrix& generator(int p, int q);

    /// Scalar of the sum of squared generators over all pairs p > q; throws if
    /// the sum is not an exact rational scalar matrix.
    Rational casimir_scalar();

private:
    SpinWeight lambda_;
    std::vector<GTPattern> basis_;
    std::map<GTPattern, int> index_;
    std::map<std::pair<int, int>, GenMatrix> cache_;
};

}  // namespace spinwhit
