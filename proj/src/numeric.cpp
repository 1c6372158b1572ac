#include "spinwhit/numeric.hpp"

#include <sstream>
#include <stdexcept>

namespace spinwhit {

std::int64_t HalfInt::as_integer() const {
    if (!is_integer()) throw std::logic_error("half-integer is not a whole number: " + format_half_int(*this));
    return twice / 2;
}

HalfInt parse_half_int(const std::string& text) {
    std::string s = text;
    if (s.empty()) throw std::invalid_argument("empty half-integer literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::int64_t num = std::stoll(s.substr(0, slash));
        std::int64_t den = std::stoll(s.substr(slash + 1));
        if (den == 1) return HalfInt::whole(num);
        if (den == 2) return HalfInt(num);
        throw std::invalid_argument("half-integer denominator must be 1 or 2: " + text);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string frac = s.substr(dot + 1);
        std::string whole = s.substr(0, dot);
        bool neg = !whole.empty() && whole[0] == '-';
        if (whole.empty() || whole == "-" || whole == "+") whole += "0";
        std::int64_t w = std::stoll(whole);
        if (frac == "5") return HalfInt(2 * w + (neg ? -1 : 1));
        if (frac == "0" || frac.empty()) return HalfInt::whole(w);
        throw std::invalid_argument("decimal half-integers must end in .0 or .5: " + text);
    }
    return HalfInt::whole(std::stoll(s));
}

std::string format_half_int(HalfInt h) {
    if (h.is_integer()) return std::to_string(h.twice / 2);
    return std::to_string(h.twice) + "/2";
}

std::vector<HalfInt> parse_half_int_list(const std::string& csv) {
    std::vector<HalfInt> out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(parse_half_int(item));
    }
    return out;
}

std::string format_half_int_list(const std::vector<HalfInt>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += format_half_int(v[i]);
    }
    out += ")";
    return out;
}

std::string format_rational(const Rational& q) {
    std::ostringstream out;
    out << q;
    return out.str();
}

int sgn(const Rational& q) {
    if (q > 0) return 1;
    if (q < 0) return -1;
    return 0;
}

}  // namespace spinwhit
