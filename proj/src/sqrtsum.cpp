#include "spinwhit/sqrtsum.hpp"

#include <sstream>
#include <stdexcept>

namespace spinwhit {

namespace {

Int num(const Rational& q) { return numerator(q); }
Int den(const Rational& q) { return denominator(q); }

}  // namespace

std::pair<Int, Int> square_free_split(const Int& n) {
    if (n <= 0) throw std::domain_error("square_free_split needs a positive integer");
    Int rest = n;
    Int outside = 1, inside = 1;
    for (Int p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        for (int i = 0; i + 1 < e; i += 2) outside *= p;
        if (e % 2 == 1) inside *= p;
    }
    inside *= rest;  // leftover is prime (or 1), exponent one
    return {outside, inside};
}

SqrtSum::SqrtSum(const Rational& q) {
    if (q != 0) terms_.emplace(Int(1), q);
}

void SqrtSum::insert_term(const Int& radicand, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = terms_.emplace(radicand, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

SqrtSum SqrtSum::sqrt_rational(const Rational& q) {
    if (q < 0) throw std::domain_error("sqrt of negative rational: " + format_rational(q));
    if (q == 0) return SqrtSum();
    // sqrt(p/q) = sqrt(p*q)/q
    Int pq = num(q) * den(q);
    auto [outside, inside] = square_free_split(pq);
    SqrtSum out;
    out.insert_term(inside, Rational(outside, den(q)));
    return out;
}

SqrtSum SqrtSum::sqrt_of_factor_product(int sign, const std::vector<Rational>& abs_factors) {
    if (sign == 0) return SqrtSum();
    Rational coeff(sign);
    Int radicand = 1;
    for (const Rational& f : abs_factors) {
        if (f <= 0) throw std::domain_error("factor magnitudes must be positive");
        Int pq = num(f) * den(f);
        auto [outside, inside] = square_free_split(pq);
        coeff *= Rational(outside, den(f));
        // sqrt(radicand)*sqrt(inside) with both square-free
        Int g = gcd(radicand, inside);
        coeff *= Rational(g);
        radicand = (radicand / g) * (inside / g);
    }
    SqrtSum out;
    out.insert_term(radicand, coeff);
    return out;
}

SqrtSum SqrtSum::operator-() const {
    SqrtSum out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

SqrtSum SqrtSum::operator+(const SqrtSum& o) const {
    SqrtSum out = *this;
    out += o;
    return out;
}

SqrtSum& SqrtSum::operator+=(const SqrtSum& o) {
    for (const auto& [m, c] : o.terms_) insert_term(m, c);
    return *this;
}

SqrtSum SqrtSum::operator-(const SqrtSum& o) const {
    SqrtSum out = *this;
    out -= o;
    return out;
}

SqrtSum& SqrtSum::operator-=(const SqrtSum& o) {
    for (const auto& [m, c] : o.terms_) insert_term(m, -c);
    return *this;
}

SqrtSum SqrtSum::operator*(const SqrtSum& o) const {
    SqrtSum out;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            // sqrt(m1)*sqrt(m2) = g*sqrt(m1*m2/g^2) with g = gcd, exact for
            // square-free m1, m2.
            Int g = gcd(m1, m2);
            out.insert_term((m1 / g) * (m2 / g), c1 * c2 * Rational(g));
        }
    }
    return out;
}

SqrtSum SqrtSum::operator*(const Rational& q) const {
    SqrtSum out;
    if (q == 0) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * q);
    return out;
}

SqrtSum SqrtSum::operator/(const Rational& q) const {
    if (q == 0) throw std::domain_error("division by zero rational");
    return *this * Rational(den(q) * (q < 0 ? -1 : 1), abs(num(q)));
}

bool SqrtSum::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational SqrtSum::rational_part() const {
    auto it = terms_.find(Int(1));
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational SqrtSum::as_rational() const {
    if (!is_rational()) throw std::logic_error("value is irrational: " + str());
    return rational_part();
}

double SqrtSum::to_double() const {
    double acc = 0.0;
    for (const auto& [m, c] : terms_) {
        acc += static_cast<double>(c) * std::sqrt(static_cast<double>(m));
    }
    return acc;
}

std::string SqrtSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << (c > 0 ? " + " : " - ");
        Rational a = (!first && c < 0) ? Rational(-c) : c;
        first = false;
        if (m == 1) {
            out << a;
        } else if (a == 1) {
            out << "sqrt(" << m << ")";
        } else if (a == -1) {
            out << "-sqrt(" << m << ")";
        } else {
            out << a << "*sqrt(" << m << ")";
        }
    }
    return out.str();
}

std::string CSqrt::str() const {
    if (is_zero()) return "0";
    if (im.is_zero()) return re.str();
    if (re.is_zero()) return "i*(" + im.str() + ")";
    return re.str() + " + i*(" + im.str() + ")";
}

}  // namespace spinwhit
