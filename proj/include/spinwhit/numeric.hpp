#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace spinwhit {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Half-integer stored as twice its value, so arithmetic stays in Z.
struct HalfInt {
    std::int64_t twice = 0;

    HalfInt() = default;
    explicit HalfInt(std::int64_t twice_value) : twice(twice_value) {}

    static HalfInt whole(std::int64_t n) { return HalfInt(2 * n); }
    static HalfInt half() { return HalfInt(1); }

    bool is_integer() const { return twice % 2 == 0; }
    std::int64_t as_integer() const;

    HalfInt operator-() const { return HalfInt(-twice); }
    HalfInt operator+(HalfInt o) const { return HalfInt(twice + o.twice); }
    HalfInt operator-(HalfInt o) const { return HalfInt(twice - o.twice); }
    HalfInt& operator+=(HalfInt o) { twice += o.twice; return *this; }
    HalfInt& operator-=(HalfInt o) { twice -= o.twice; return *this; }

    friend HalfInt operator+(HalfInt a, std::int64_t n) { return HalfInt(a.twice + 2 * n); }
    friend HalfInt operator-(HalfInt a, std::int64_t n) { return HalfInt(a.twice - 2 * n); }
    friend HalfInt operator*(std::int64_t n, HalfInt a) { return HalfInt(n * a.twice); }

    auto operator<=>(const HalfInt&) const = default;

    HalfInt abs() const { return HalfInt(twice < 0 ? -twice : twice); }
    int sgn() const { return twice > 0 ? 1 : (twice < 0 ? -1 : 0); }

    Rational to_rational() const { return Rational(twice, 2); }
    double to_double() const { return static_cast<double>(twice) / 2.0; }
};

/// a - b is an integer, i.e. both are whole or both are proper halves.
inline bool same_integrality(HalfInt a, HalfInt b) { return (a.twice - b.twice) % 2 == 0; }

/// Accepts "3", "-3", "p/2", "1.5"/".5" decimal-half forms.
HalfInt parse_half_int(const std::string& text);

/// Canonical wire form: whole values as "n", halves as "p/2".
std::string format_half_int(HalfInt h);

std::vector<HalfInt> parse_half_int_list(const std::string& csv);
std::string format_half_int_list(const std::vector<HalfInt>& v);

std::string format_rational(const Rational& q);

int sgn(const Rational& q);

}  // namespace spinwhit
