#include "mvcrys/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace mvcrys {

Series parse_series(const std::string& s) {
    if (s == "A") return Series::A;
    if (s == "B") return Series::B;
    if (s == "C") return Series::C;
    if (s == "D") return Series::D;
    if (s == "G") return Series::G;
    throw std::invalid_argument("unsupported series '" + s + "'");
}

char series_letter(Series s) {
    switch (s) {
        case Series::A: return 'A';
        case Series::B: return 'B';
        case Series::C: return 'C';
        case Series::D: return 'D';
        case Series::G: return 'G';
    }
    return '?';
}

namespace {

using EVec = std::vector<std::int64_t>;

std::int64_t dot(const EVec& a, const EVec& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<EVec> euclidean_simple_roots(Series s, int r) {
    std::vector<EVec> out;
    auto unit_diff = [](int dim, int i, int j) {
        EVec v(dim, 0);
        v[i] = 1;
        v[j] = -1;
        return v;
    };
    switch (s) {
        case Series::A:
            if (r < 1 || r > 4) break;
            for (int i = 0; i < r; ++i) out.push_back(unit_diff(r + 1, i, i + 1));
            return out;
        case Series::B:
        case Series::C:
            if (r < 2 || r > 4) break;
            for (int i = 0; i + 1 < r; ++i) out.push_back(unit_diff(r, i, i + 1));
            out.emplace_back(r, 0);
            out.back()[r - 1] = (s == Series::B) ? 1 : 2;
            return out;
        case Series::D:
            if (r != 4) break;
            for (int i = 0; i + 1 < r; ++i) out.push_back(unit_diff(r, i, i + 1));
            out.emplace_back(r, 0);
            out.back()[r - 2] = 1;
            out.back()[r - 1] = 1;
            return out;
        case Series::G:
            if (r != 2) break;
            out.push_back({1, -1, 0});
            out.push_back({-2, 1, 1});
            return out;
    }
    throw std::invalid_argument(std::string("unsupported root datum ") + series_letter(s) +
                                std::to_string(r));
}

IntVec matmul(const IntVec& a, const IntVec& b, int n) {
    IntVec c(n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            auto aik = a[i * n + k];
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
        }
    return c;
}

RatVec solve(const IntVec& m, int n, const RatVec& rhs) {
    std::vector<RatVec> a(n, RatVec(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = Rational(m[i * n + j]);
        a[i][n] = rhs[i];
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("singular Cartan matrix");
        std::swap(a[piv], a[col]);
        for (int i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rational f = a[i][col] / a[col][col];
            for (int j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    RatVec x(n);
    for (int i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
    return x;
}

}  // namespace

bool is_negative(const IntVec& root) {
    for (auto c : root)
        if (c != 0) return c < 0;
    return false;
}

IntVec negate(const IntVec& v) {
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

RatVec add(const RatVec& a, const RatVec& b) {
    RatVec out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
    return out;
}

RatVec sub(const RatVec& a, const RatVec& b) {
    RatVec out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
    return out;
}

RatVec scale(const RatVec& a, const Rational& s) {
    RatVec out(a);
    for (auto& x : out) x *= s;
    return out;
}

std::int64_t height(const RatVec& x) {
    std::int64_t h = 0;
    for (const auto& q : x) {
        if (!is_integral(q)) throw std::domain_error("height: " + to_string(x) + " is not in the coroot lattice");
        h += q.numerator();
    }
    return h;
}

bool dominance_leq(const RatVec& mu, const RatVec& lambda) {
    for (std::size_t i = 0; i < mu.size(); ++i) {
        Rational d = lambda[i] - mu[i];
        if (!is_integral(d) || d < 0) return false;
    }
    return true;
}

std::shared_ptr<const RootDatum> RootDatum::build(Series series, int rank) {
    auto simple = euclidean_simple_roots(series, rank);
    std::shared_ptr<RootDatum> d(new RootDatum());
    d->series_ = series;
    d->rank_ = rank;
    d->cartan_.assign(rank * rank, 0);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            d->cartan_[i * rank + j] = 2 * dot(simple[i], simple[j]) / dot(simple[j], simple[j]);
    d->build_roots();
    d->build_group();
    return d;
}

std::string RootDatum::name() const { return std::string(1, series_letter(series_)) + std::to_string(rank_); }

void RootDatum::build_roots() {
    const int r = rank_;
    std::map<IntVec, IntVec> found;  // root -> coroot
    std::deque<IntVec> queue;
    for (int i = 0; i < r; ++i) {
        IntVec e(r, 0);
        e[i] = 1;
        found[e] = e;
        queue.push_back(e);
    }
    while (!queue.empty()) {
        IntVec b = queue.front();
        queue.pop_front();
        IntVec bv = found[b];
        for (int i = 0; i < r; ++i) {
            std::int64_t p = 0, q = 0;
            for (int k = 0; k < r; ++k) {
                p += b[k] * cartan(k, i);
                q += cartan(i, k) * bv[k];
            }
            IntVec nb = b, nbv = bv;
            nb[i] -= p;
            nbv[i] -= q;
            if (found.emplace(nb, nbv).second) queue.push_back(nb);
        }
    }
    for (const auto& [root, coroot] : found) {
        bool pos = std::all_of(root.begin(), root.end(), [](auto c) { return c >= 0; });
        bool neg = std::all_of(root.begin(), root.end(), [](auto c) { return c <= 0; });
        if (!pos && !neg) throw std::logic_error("reflection closure produced a mixed-sign root");
        if (!found.count(negate(root))) throw std::logic_error("reflection closure not symmetric");
        if (pos) {
            pos_roots_.push_back({root});
            pos_coroots_.push_back(coroot);
        }
    }
    std::vector<std::size_t> order(pos_roots_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto ht = [](const IntVec& v) { std::int64_t s = 0; for (auto c : v) s += c; return s; };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        auto ha = ht(pos_roots_[a].c), hb = ht(pos_roots_[b].c);
        if (ha != hb) return ha < hb;
        return pos_roots_[a].c > pos_roots_[b].c;
    });
    std::vector<Root> roots;
    std::vector<IntVec> coroots;
    for (auto i : order) {
        roots.push_back(pos_roots_[i]);
        coroots.push_back(pos_coroots_[i]);
    }
    pos_roots_ = std::move(roots);
    pos_coroots_ = std::move(coroots);
    for (std::size_t i = 0; i < pos_roots_.size(); ++i) {
        root_lookup_[pos_roots_[i].c] = static_cast<int>(i);
        functionals_.push_back(functional_of(pos_roots_[i].c));
    }
    theta_ = pos_roots_.back();
    theta_vee_ = pos_coroots_.back();
    for (int i = 0; i < r; ++i) {
        RatVec e(r, Rational(0));
        e[i] = 1;
        fund_coweights_.push_back(solve(cartan_, r, e));
    }
    barycenter_.assign(r, Rational(0));
    for (int i = 0; i < r; ++i) barycenter_ = add(barycenter_, scale(fund_coweights_[i], Rational(1, theta_.c[i])));
    barycenter_ = scale(barycenter_, Rational(1, r + 1));
}

void RootDatum::build_group() {
    const int r = rank_;
    for (int i = 0; i < r; ++i) {
        WeylElt s;
        s.rank = r;
        s.coweight_mat.assign(r * r, 0);
        s.root_mat.assign(r * r, 0);
        for (int k = 0; k < r; ++k) {
            s.coweight_mat[k * r + k] = 1;
            s.root_mat[k * r + k] = 1;
        }
        for (int k = 0; k < r; ++k) {
            s.coweight_mat[i * r + k] -= cartan(i, k);
            s.root_mat[i * r + k] -= cartan(k, i);
        }
        simple_.push_back(s);
    }
    WeylElt id = identity();
    group_.push_back(id);
    group_lookup_[id.coweight_mat] = 0;
    for (std::size_t head = 0; head < group_.size(); ++head) {
        for (int i = 0; i < r; ++i) {
            WeylElt w = compose(simple_[i], group_[head]);
            if (group_lookup_.emplace(w.coweight_mat, static_cast<int>(group_.size())).second) group_.push_back(w);
        }
    }
    int best = -1;
    for (std::size_t g = 0; g < group_.size(); ++g) {
        int l = 0;
        for (const auto& a : pos_roots_)
            if (is_negative(act_root(group_[g], a.c))) ++l;
        lengths_.push_back(l);
        if (l > best) {
            best = l;
            longest_index_ = static_cast<int>(g);
        }
    }
}

Rational RootDatum::pair(const IntVec& root, const RatVec& x) const {
    Rational s(0);
    for (int i = 0; i < rank_; ++i) {
        if (root[i] == 0) continue;
        for (int k = 0; k < rank_; ++k) {
            auto c = cartan(i, k);
            if (c != 0) s += Rational(root[i] * c) * x[k];
        }
    }
    return s;
}

Rational RootDatum::pairing(const Root& a, const Coweight& v) const {
    if (v.basis != CoweightBasis::coroot)
        throw std::invalid_argument("pairing expects a coweight in the coroot basis");
    if (static_cast<int>(a.c.size()) != rank_ || static_cast<int>(v.c.size()) != rank_)
        throw std::invalid_argument("pairing: rank mismatch");
    return pair(a.c, v.c);
}

IntVec RootDatum::functional_of(const IntVec& root) const {
    IntVec row(rank_, 0);
    for (int i = 0; i < rank_; ++i)
        for (int k = 0; k < rank_; ++k) row[k] += root[i] * cartan(i, k);
    return row;
}

RatVec RootDatum::rho_vee() const {
    RatVec s(rank_, Rational(0));
    for (const auto& f : fund_coweights_) s = add(s, f);
    return s;
}

Coweight RootDatum::to_coroot_basis(const Coweight& v) const {
    if (v.basis == CoweightBasis::coroot) return v;
    RatVec s(rank_, Rational(0));
    for (int i = 0; i < rank_; ++i) s = add(s, scale(fund_coweights_[i], v.c[i]));
    return {s, CoweightBasis::coroot};
}

WeylElt RootDatum::identity() const {
    WeylElt id;
    id.rank = rank_;
    id.coweight_mat.assign(rank_ * rank_, 0);
    id.root_mat.assign(rank_ * rank_, 0);
    for (int k = 0; k < rank_; ++k) {
        id.coweight_mat[k * rank_ + k] = 1;
        id.root_mat[k * rank_ + k] = 1;
    }
    return id;
}

WeylElt RootDatum::compose(const WeylElt& a, const WeylElt& b) const {
    WeylElt c;
    c.rank = rank_;
    c.coweight_mat = matmul(a.coweight_mat, b.coweight_mat, rank_);
    c.root_mat = matmul(a.root_mat, b.root_mat, rank_);
    return c;
}

WeylElt RootDatum::from_word(const Word& word) const {
    WeylElt w = identity();
    for (int i : word) {
        if (i < 1 || i > rank_) throw std::invalid_argument("word letter out of range: " + std::to_string(i));
        w = compose(w, simple_[i - 1]);
    }
    return w;
}

WeylElt RootDatum::inverse(const WeylElt& w) const {
    Word word = reduced_word(w);
    std::reverse(word.begin(), word.end());
    return from_word(word);
}

RatVec RootDatum::act(const WeylElt& w, const RatVec& x) const {
    RatVec out(rank_, Rational(0));
    for (int i = 0; i < rank_; ++i)
        for (int k = 0; k < rank_; ++k) {
            auto m = w.coweight_mat[i * rank_ + k];
            if (m != 0) out[i] += Rational(m) * x[k];
        }
    return out;
}

IntVec RootDatum::act_int(const WeylElt& w, const IntVec& x) const {
    IntVec out(rank_, 0);
    for (int i = 0; i < rank_; ++i)
        for (int k = 0; k < rank_; ++k) out[i] += w.coweight_mat[i * rank_ + k] * x[k];
    return out;
}

IntVec RootDatum::act_root(const WeylElt& w, const IntVec& root) const {
    IntVec out(rank_, 0);
    for (int i = 0; i < rank_; ++i)
        for (int k = 0; k < rank_; ++k) out[i] += w.root_mat[i * rank_ + k] * root[k];
    return out;
}

Coweight RootDatum::weyl_act(const WeylElt& w, const Coweight& v) const {
    return {act(w, to_coroot_basis(v).c), CoweightBasis::coroot};
}

Root RootDatum::weyl_act(const WeylElt& w, const Root& a) const { return {act_root(w, a.c)}; }

int RootDatum::index_of(const WeylElt& w) const {
    auto it = group_lookup_.find(w.coweight_mat);
    if (it == group_lookup_.end()) throw std::logic_error("matrix is not a Weyl group element");
    return it->second;
}

int RootDatum::length(const WeylElt& w) const { return lengths_[index_of(w)]; }

std::vector<Word> RootDatum::reduced_words(const WeylElt& w) const {
    std::map<int, std::vector<Word>> memo;
    std::function<const std::vector<Word>&(int)> rec = [&](int g) -> const std::vector<Word>& {
        auto it = memo.find(g);
        if (it != memo.end()) return it->second;
        std::vector<Word> out;
        if (lengths_[g] == 0) {
            out.push_back({});
        } else {
            for (int i = 0; i < rank_; ++i) {
                int h = index_of(compose(simple_[i], group_[g]));
                if (lengths_[h] >= lengths_[g]) continue;
                for (const auto& tail : rec(h)) {
                    Word wd{i + 1};
                    wd.insert(wd.end(), tail.begin(), tail.end());
                    out.push_back(std::move(wd));
                }
            }
        }
        return memo.emplace(g, std::move(out)).first->second;
    };
    auto words = rec(index_of(w));
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}

Word RootDatum::reduced_word(const WeylElt& w) const {
    Word out;
    int g = index_of(w);
    while (lengths_[g] > 0) {
        for (int i = 0; i < rank_; ++i) {
            int h = index_of(compose(simple_[i], group_[g]));
            if (lengths_[h] < lengths_[g]) {
                out.push_back(i + 1);
                g = h;
                break;
            }
        }
    }
    return out;
}

bool RootDatum::is_dominant(const RatVec& x) const {
    for (int i = 0; i < rank_; ++i) {
        Rational s(0);
        for (int k = 0; k < rank_; ++k) s += Rational(cartan(i, k)) * x[k];
        if (s < 0) return false;
    }
    return true;
}

RatVec RootDatum::dominant_conjugate(const RatVec& x) const {
    RatVec y = x;
    for (;;) {
        bool moved = false;
        for (int i = 0; i < rank_; ++i) {
            Rational s(0);
            for (int k = 0; k < rank_; ++k) s += Rational(cartan(i, k)) * y[k];
            if (s < 0) {
                y[i] -= s;
                moved = true;
            }
        }
        if (!moved) return y;
    }
}

int RootDatum::root_index(const IntVec& root) const {
    auto it = root_lookup_.find(root);
    return it == root_lookup_.end() ? -1 : it->second;
}

}  // namespace mvcrys
