#include "mvcrys/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace mvcrys {

std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::string to_string(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

std::string to_string(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        std::int64_t d = std::stoll(s.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
        return Rational(std::stoll(s.substr(0, slash)), d);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("not a rational number: '" + s + "'");
    }
}

RatVec parse_rat_list(const std::string& s) {
    RatVec out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(parse_rational(item));
    }
    return out;
}

IntVec parse_int_list(const std::string& s) {
    IntVec out;
    for (const auto& q : parse_rat_list(s)) {
        if (!is_integral(q)) throw std::invalid_argument("expected integers: '" + s + "'");
        out.push_back(q.numerator());
    }
    return out;
}

}  // namespace mvcrys
