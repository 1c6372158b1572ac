#pragma once

#include "spinwhit/numeric.hpp"

#include <map>
#include <string>

namespace spinwhit {

/// Exact value of the form sum_m c_m * sqrt(m), with square-free positive
/// integer radicands m and rational coefficients c_m.  The radicand 1 carries
/// the rational part.  Distinct square-free radicals are linearly independent
/// over Q, so structural equality after normalization is semantic equality.
class SqrtSum {
public:
    SqrtSum() = default;
    SqrtSum(const Rational& q);  // NOLINT: implicit from rationals is the point
    SqrtSum(std::int64_t n) : SqrtSum(Rational(n)) {}

    /// sqrt(q) for q >= 0, normalized to c*sqrt(m) with m square-free.
    /// Throws std::domain_error for q < 0.
    static SqrtSum sqrt_rational(const Rational& q);

    /// sign * sqrt(prod |f|) for nonzero factors f; returns 0 when sign == 0.
    /// Keeps radicands factored pairwise, so no large factorizations happen.
    static SqrtSum sqrt_of_factor_product(int sign, const std::vector<Rational>& abs_factors);

    SqrtSum operator-() const;
    SqrtSum operator+(const SqrtSum& o) const;
    SqrtSum operator-(const SqrtSum& o) const;
    SqrtSum operator*(const SqrtSum& o) const;
    SqrtSum& operator+=(const SqrtSum& o);
    SqrtSum& operator-=(const SqrtSum& o);

    SqrtSum operator*(const Rational& q) const;
    SqrtSum operator/(const Rational& q) const;

    bool operator==(const SqrtSum& o) const { return terms_ == o.terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    Rational rational_part() const;
    /// Defined only for rational values; throws otherwise.
    Rational as_rational() const;

    const std::map<Int, Rational>& terms() const { return terms_; }

    double to_double() const;
    std::string str() const;

private:
    void insert_term(const Int& radicand, const Rational& coeff);

    std::map<Int, Rational> terms_;
};

inline SqrtSum operator*(const Rational& q, const SqrtSum& s) { return s * q; }

/// Square-free decomposition n = s^2 * m of a positive integer; returns (s, m).
std::pair<Int, Int> square_free_split(const Int& n);

/// Complex combination re + i*im of two exact radical sums.  The compact-group
/// matrices below are skew-Hermitian: shift entries land in the real part and
/// diagonal entries in the imaginary part.
struct CSqrt {
    SqrtSum re;
    SqrtSum im;

    CSqrt() = default;
    CSqrt(SqrtSum real) : re(std::move(real)) {}  // NOLINT
    static CSqrt imaginary(SqrtSum v) { return CSqrt{SqrtSum(), std::move(v)}; }
    CSqrt(SqrtSum real, SqrtSum imag) : re(std::move(real)), im(std::move(imag)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool operator==(const CSqrt& o) const { return re == o.re && im == o.im; }

    CSqrt operator-() const { return {-re, -im}; }
    CSqrt operator+(const CSqrt& o) const { return {re + o.re, im + o.im}; }
    CSqrt operator-(const CSqrt& o) const { return {re - o.re, im - o.im}; }
    CSqrt operator*(const CSqrt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    CSqrt conj() const { return {re, -im}; }
    CSqrt operator*(const Rational& q) const { return {re * q, im * q}; }

    std::string str() const;
};

}  // namespace spinwhit
