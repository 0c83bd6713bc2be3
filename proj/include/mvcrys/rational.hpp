#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace mvcrys {

// boost::rational's scalar comparison overloads recurse forever under C++20
// rewritten-operator lookup, so all comparisons here go rational-to-rational.
class Rational {
public:
    using base = boost::rational<std::int64_t>;
    Rational() = default;
    Rational(std::int64_t n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d) : q_(n, d) {}
    explicit Rational(const base& q) : q_(q) {}

    std::int64_t numerator() const { return q_.numerator(); }
    std::int64_t denominator() const { return q_.denominator(); }
    const base& raw() const { return q_; }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { q_ /= o.q_; return *this; }
    Rational operator-() const { return Rational(-q_); }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_.numerator() == b.q_.numerator() && a.q_.denominator() == b.q_.denominator(); }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return b.q_ < a.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b.q_ < a.q_); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a.q_ < b.q_); }

private:
    base q_;
};
using IntVec = std::vector<std::int64_t>;
using RatVec = std::vector<Rational>;

inline bool is_integral(const Rational& q) { return q.denominator() == 1; }

inline std::int64_t floor_div(const Rational& q) {
    std::int64_t n = q.numerator(), d = q.denominator();
    std::int64_t f = n / d;
    if ((n % d != 0) && (n < 0)) --f;
    return f;
}

inline RatVec to_rat(const IntVec& v) {
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
    return out;
}

std::string to_string(const Rational& q);
std::string to_string(const RatVec& v);
std::string to_string(const IntVec& v);

Rational parse_rational(const std::string& s);
RatVec parse_rat_list(const std::string& s);
IntVec parse_int_list(const std::string& s);

}  // namespace mvcrys
