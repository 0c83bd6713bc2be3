#include "mvcrys/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace mvcrys {

namespace {

thread_local int g_precision = 0;

int sat_add(int a, int b) {
    long s = static_cast<long>(a) + b;
    if (a >= LaurentSeries::kExact || b >= LaurentSeries::kExact || s >= LaurentSeries::kExact) return LaurentSeries::kExact;
    return static_cast<int>(s);
}

}  // namespace

int default_precision() {
    if (const char* env = std::getenv("MVCRYS_PRECISION")) {
        int p = std::atoi(env);
        if (p > 0) return std::min(p, kMaxPrecision);
    }
    return 32;
}

int working_precision() {
    if (g_precision <= 0) g_precision = default_precision();
    return g_precision;
}

void set_working_precision(int prec) { g_precision = prec; }

LaurentSeries::LaurentSeries(long c) {
    if (c != 0) terms_[0] = c;
}

LaurentSeries LaurentSeries::monomial(const mpq_class& c, int exponent) {
    LaurentSeries s;
    if (c != 0) s.terms_[exponent] = c;
    return s;
}

LaurentSeries LaurentSeries::from_terms(std::map<int, mpq_class> terms, int cap) {
    LaurentSeries s;
    s.terms_ = std::move(terms);
    s.cap_ = std::min(cap, kExact);
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::zero_up_to(int cap) {
    LaurentSeries s;
    s.cap_ = std::min(cap, kExact);
    return s;
}

void LaurentSeries::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0 || it->first >= cap_) it = terms_.erase(it);
        else ++it;
    }
}

int LaurentSeries::val() const {
    if (terms_.empty()) throw PrecisionError("series is indistinguishable from zero below t^" + std::to_string(cap_));
    return terms_.begin()->first;
}

mpq_class LaurentSeries::coeff(int e) const {
    if (e >= cap_) throw PrecisionError("coefficient of t^" + std::to_string(e) + " is beyond the precision cap");
    auto it = terms_.find(e);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

mpq_class LaurentSeries::leading() const { return terms_.at(val()); }

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries s = *this;
    for (auto& [e, c] : s.terms_) c = -c;
    return s;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries s;
    s.cap_ = std::min(a.cap_, b.cap_);
    s.terms_ = a.terms_;
    for (const auto& [e, c] : b.terms_) s.terms_[e] += c;
    s.normalize();
    return s;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries s;
    s.cap_ = std::min(sat_add(a.cap_, b.low()), sat_add(b.cap_, a.low()));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            int e = ea + eb;
            if (e >= s.cap_) break;
            s.terms_[e] += ca * cb;
        }
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::inverse() const {
    int v = val();
    mpq_class a0 = terms_.begin()->second;
    if (exact() && terms_.size() == 1) return monomial(1 / a0, -v);
    int r = exact() ? working_precision() : cap_ - v;
    std::vector<mpq_class> a(r), b(r);
    for (const auto& [e, c] : terms_)
        if (e - v < r) a[e - v] = c;
    b[0] = 1 / a0;
    for (int k = 1; k < r; ++k) {
        mpq_class s = 0;
        for (int i = 1; i <= k; ++i)
            if (a[i] != 0) s += a[i] * b[k - i];
        b[k] = -s / a0;
    }
    std::map<int, mpq_class> t;
    for (int k = 0; k < r; ++k)
        if (b[k] != 0) t[k - v] = b[k];
    return from_terms(std::move(t), r - v);
}

LaurentSeries LaurentSeries::truncated(int cap) const { return from_terms(terms_, std::min(cap, cap_)); }

bool LaurentSeries::agrees_with(const LaurentSeries& o) const {
    int c = std::min(cap_, o.cap_);
    auto below = [c](const std::map<int, mpq_class>& m) {
        std::map<int, mpq_class> out;
        for (const auto& [e, x] : m)
            if (e < c) out.emplace(e, x);
        return out;
    };
    return below(terms_) == below(o.terms_);
}

std::string LaurentSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        if (e != 0) os << "*t^" << e;
    }
    if (first) os << "0";
    if (!exact()) os << " + O(t^" << cap_ << ")";
    return os.str();
}

LaurentSeries tpow(int e) { return LaurentSeries::monomial(1, e); }

LaurentMatrix::LaurentMatrix(int n) : n_(n), e_(n * n) {}

LaurentMatrix LaurentMatrix::identity(int n) {
    LaurentMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = LaurentSeries(1);
    return m;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    const int n = a.n_;
    LaurentMatrix c(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            LaurentSeries s;
            for (int k = 0; k < n; ++k) {
                if (a(i, k).is_exact_zero() || b(k, j).is_exact_zero()) continue;
                s = s + a(i, k) * b(k, j);
            }
            c(i, j) = s;
        }
    return c;
}

namespace {

LaurentSeries det_rec(const LaurentMatrix& m, std::vector<int>& rows, std::vector<int>& cols) {
    if (rows.empty()) return LaurentSeries(1);
    int r = rows.front();
    rows.erase(rows.begin());
    LaurentSeries total;
    for (std::size_t idx = 0; idx < cols.size(); ++idx) {
        const LaurentSeries& x = m(r, cols[idx]);
        if (x.is_exact_zero()) continue;
        int c = cols[idx];
        cols.erase(cols.begin() + idx);
        LaurentSeries sub = x * det_rec(m, rows, cols);
        cols.insert(cols.begin() + idx, c);
        total = (idx % 2 == 0) ? total + sub : total - sub;
    }
    rows.insert(rows.begin(), r);
    return total;
}

}  // namespace

LaurentSeries LaurentMatrix::minor(const std::vector<int>& rows, const std::vector<int>& cols) const {
    std::vector<int> r = rows, c = cols;
    return det_rec(*this, r, c);
}

LaurentSeries LaurentMatrix::det() const {
    std::vector<int> all(n_);
    for (int i = 0; i < n_; ++i) all[i] = i;
    return minor(all, all);
}

LaurentMatrix LaurentMatrix::inverse() const {
    LaurentMatrix adj(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            std::vector<int> rows, cols;
            for (int k = 0; k < n_; ++k) {
                if (k != j) rows.push_back(k);
                if (k != i) cols.push_back(k);
            }
            LaurentSeries m = minor(rows, cols);
            adj(i, j) = ((i + j) % 2 == 0) ? m : -m;
        }
    LaurentSeries d = det();
    if (d.exact() && d.terms().size() == 1 && d.terms().begin()->first == 0 && d.terms().begin()->second == 1) return adj;
    LaurentSeries di = d.inverse();
    for (auto& x : adj.e_) x = x * di;
    return adj;
}

bool LaurentMatrix::agrees_with(const LaurentMatrix& o) const {
    if (n_ != o.n_) return false;
    for (std::size_t k = 0; k < e_.size(); ++k)
        if (!e_[k].agrees_with(o.e_[k])) return false;
    return true;
}

int LaurentMatrix::min_val() const { return min_valuation(e_); }

std::string LaurentMatrix::str() const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
        s += "[";
        for (int j = 0; j < n_; ++j) {
            if (j) s += ", ";
            s += (*this)(i, j).str();
        }
        s += "]\n";
    }
    return s;
}

int min_valuation(const std::vector<LaurentSeries>& xs) {
    int best = LaurentSeries::kExact, zero_cap = LaurentSeries::kExact;
    for (const auto& x : xs) {
        if (x.known_zero()) zero_cap = std::min(zero_cap, x.cap());
        else best = std::min(best, x.val());
    }
    if (best >= LaurentSeries::kExact && zero_cap >= LaurentSeries::kExact)
        throw std::domain_error("all entries vanish identically");
    if (best >= zero_cap) throw PrecisionError("minimum valuation is not decided below the precision cap");
    return best;
}

}  // namespace mvcrys
