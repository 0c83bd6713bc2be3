#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mvcrys {

struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Relative precision used when inverting a series that is not a monomial.
int working_precision();
void set_working_precision(int prec);

class PrecisionScope {
public:
    explicit PrecisionScope(int prec) : saved_(working_precision()) { set_working_precision(prec); }
    ~PrecisionScope() { set_working_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    int saved_;
};

// Default precision: $MVCRYS_PRECISION or 32.
int default_precision();
constexpr int kMaxPrecision = 256;

// Runs fn at prec, 2 prec, ... up to kMaxPrecision while it throws PrecisionError.
template <class F>
auto with_precision_escalation(int prec, F&& fn) -> decltype(fn()) {
    for (int p = prec;; p *= 2) {
        PrecisionScope scope(p);
        try {
            return fn();
        } catch (const PrecisionError&) {
            if (p * 2 > kMaxPrecision) throw;
        }
    }
}

// Coefficients are known for exponents below cap(); exact series have an infinite cap.
class LaurentSeries {
public:
    static constexpr int kExact = 1 << 28;

    LaurentSeries() = default;
    LaurentSeries(long c);  // NOLINT(google-explicit-constructor)
    static LaurentSeries monomial(const mpq_class& c, int exponent);
    static LaurentSeries from_terms(std::map<int, mpq_class> terms, int cap = kExact);
    static LaurentSeries zero_up_to(int cap);

    int cap() const { return cap_; }
    bool exact() const { return cap_ >= kExact; }
    const std::map<int, mpq_class>& terms() const { return terms_; }
    bool known_zero() const { return terms_.empty(); }
    bool is_exact_zero() const { return terms_.empty() && exact(); }
    // Lowest known exponent, or cap() when no known term is nonzero.
    int low() const { return terms_.empty() ? cap_ : terms_.begin()->first; }
    int val() const;
    mpq_class coeff(int e) const;
    mpq_class leading() const;

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    LaurentSeries inverse() const;
    friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) { return a * b.inverse(); }
    LaurentSeries truncated(int cap) const;

    // Equal on the common known range.
    bool agrees_with(const LaurentSeries& o) const;
    std::string str() const;

private:
    void normalize();
    std::map<int, mpq_class> terms_;
    int cap_ = kExact;
};

LaurentSeries tpow(int e);

class LaurentMatrix {
public:
    LaurentMatrix() = default;
    explicit LaurentMatrix(int n);
    static LaurentMatrix identity(int n);

    int n() const { return n_; }
    LaurentSeries& operator()(int i, int j) { return e_[i * n_ + j]; }
    const LaurentSeries& operator()(int i, int j) const { return e_[i * n_ + j]; }

    friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
    LaurentSeries det() const;
    LaurentSeries minor(const std::vector<int>& rows, const std::vector<int>& cols) const;
    // Adjugate divided by the determinant.
    LaurentMatrix inverse() const;

    bool agrees_with(const LaurentMatrix& o) const;
    // Minimum valuation over entries; exact zeros are skipped.
    int min_val() const;
    std::string str() const;

private:
    int n_ = 0;
    std::vector<LaurentSeries> e_;
};

// Minimum valuation over a family; raises PrecisionError when a vanishing-to-precision
// member could still be the minimum.
int min_valuation(const std::vector<LaurentSeries>& xs);

}  // namespace mvcrys
