#include "mvcrys/looplab.hpp"

#include <algorithm>
#include <stdexcept>

namespace mvcrys {

namespace {

using IMat = std::vector<std::int64_t>;

struct Span {
    int first = 0;  // 0-based index of the first simple root in the support
    int last = 0;
    bool negative = false;
};

Span root_span(int n, const IntVec& root) {
    if (static_cast<int>(root.size()) != n - 1) throw std::invalid_argument("root has the wrong rank");
    Span s{-1, -1, false};
    for (int i = 0; i < n - 1; ++i) {
        if (root[i] == 0) continue;
        if (root[i] != 1 && root[i] != -1) throw std::invalid_argument("not a type A root");
        if (s.first < 0) {
            s.first = i;
            s.negative = root[i] < 0;
        } else if (s.last != i - 1 || (root[i] < 0) != s.negative) {
            throw std::invalid_argument("not a type A root");
        }
        s.last = i;
    }
    if (s.first < 0) throw std::invalid_argument("zero is not a root");
    return s;
}

IMat int_identity(int n) {
    IMat m(n * n, 0);
    for (int i = 0; i < n; ++i) m[i * n + i] = 1;
    return m;
}

IMat int_mul(int n, const IMat& a, const IMat& b) {
    IMat c(n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i * n + k] == 0) continue;
            for (int j = 0; j < n; ++j) c[i * n + j] += a[i * n + k] * b[k * n + j];
        }
    return c;
}

IMat int_sbar(int n, int a) {
    IMat m = int_identity(n);
    m[a * n + a] = 0;
    m[(a + 1) * n + a + 1] = 0;
    m[a * n + a + 1] = 1;
    m[(a + 1) * n + a] = -1;
    return m;
}

// Signed permutation matrices are orthogonal.
IMat int_transpose(int n, const IMat& m) {
    IMat t(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[j * n + i] = m[i * n + j];
    return t;
}

// wbar for w = s_first ... s_{last-1}, so that w(alpha_last) is the root with this span.
IMat conjugator(int n, const Span& s) {
    IMat w = int_identity(n);
    for (int a = s.first; a < s.last; ++a) w = int_mul(n, w, int_sbar(n, a));
    return w;
}

LaurentMatrix from_int(int n, const IMat& m) {
    LaurentMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = LaurentSeries(static_cast<long>(m[i * n + j]));
    return out;
}

IntVec eps_coords(int n, const IntVec& x) {
    if (static_cast<int>(x.size()) != n - 1) throw std::invalid_argument("coweight has the wrong rank");
    IntVec a(n);
    for (int j = 0; j < n; ++j) a[j] = (j < n - 1 ? x[j] : 0) - (j > 0 ? x[j - 1] : 0);
    return a;
}

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> mask(n, 0);
    std::fill(mask.begin(), mask.begin() + k, 1);
    do {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask[i]) s.push_back(i);
        out.push_back(s);
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
}

std::vector<int> range(int lo, int hi) {
    std::vector<int> r;
    for (int i = lo; i < hi; ++i) r.push_back(i);
    return r;
}

IntVec scale_int(const IntVec& v, std::int64_t k) {
    IntVec out = v;
    for (auto& x : out) x *= k;
    return out;
}

bool all_known_zero(const std::vector<LaurentSeries>& v) {
    return std::all_of(v.begin(), v.end(), [](const LaurentSeries& x) { return x.known_zero(); });
}

}  // namespace

LaurentSeries series_pow(const LaurentSeries& a, int m) {
    LaurentSeries base = m < 0 ? a.inverse() : a;
    LaurentSeries out(1);
    for (int k = 0; k < std::abs(m); ++k) out = out * base;
    return out;
}

IntVec coroot_of(const IntVec& root) { return root; }

std::int64_t pair_a(const IntVec& root, const IntVec& coweight) {
    const int n = static_cast<int>(root.size()) + 1;
    Span s = root_span(n, root);
    IntVec a = eps_coords(n, coweight);
    std::int64_t v = a[s.first] - a[s.last + 1];
    return s.negative ? -v : v;
}

LaurentMatrix gen_x(int n, const IntVec& root, const LaurentSeries& p) {
    Span s = root_span(n, root);
    IMat w = conjugator(n, s);
    // Conjugate E_{last,last+1} (or its transpose) by wbar to read off the sign.
    IMat e(n * n, 0);
    if (s.negative) e[(s.last + 1) * n + s.last] = 1;
    else e[s.last * n + s.last + 1] = 1;
    IMat c = int_mul(n, int_mul(n, w, e), int_transpose(n, w));
    int row = s.negative ? s.last + 1 : s.first;
    int col = s.negative ? s.first : s.last + 1;
    LaurentMatrix m = LaurentMatrix::identity(n);
    m(row, col) = LaurentSeries(static_cast<long>(c[row * n + col])) * p;
    return m;
}

LaurentMatrix gen_x_simple(int n, int label, const LaurentSeries& p) {
    LaurentMatrix m = LaurentMatrix::identity(n);
    m(label - 1, label) = p;
    return m;
}

LaurentMatrix gen_y(int n, int label, const LaurentSeries& p) {
    LaurentMatrix m = LaurentMatrix::identity(n);
    m(label, label - 1) = p;
    return m;
}

LaurentMatrix gen_torus(int n, const LaurentSeries& a, const IntVec& coweight) {
    IntVec e = eps_coords(n, coweight);
    LaurentMatrix m(n);
    for (int j = 0; j < n; ++j) m(j, j) = series_pow(a, static_cast<int>(e[j]));
    return m;
}

LaurentMatrix gen_t(int n, const IntVec& coweight) { return gen_torus(n, tpow(1), coweight); }

LaurentMatrix gen_sbar(int n, int label) { return from_int(n, int_sbar(n, label - 1)); }

LaurentMatrix gen_wbar(int n, const Word& word) {
    IMat w = int_identity(n);
    for (int i : word) w = int_mul(n, w, int_sbar(n, i - 1));
    return from_int(n, w);
}

LaurentMatrix gen_sbar_root(int n, const IntVec& root) {
    Span s = root_span(n, root);
    if (s.negative) throw std::invalid_argument("gen_sbar_root expects a positive root");
    IMat w = conjugator(n, s);
    return from_int(n, int_mul(n, int_mul(n, w, int_sbar(n, s.last)), int_transpose(n, w)));
}

LaurentMatrix y_product(int n, const Word& word, const std::vector<LaurentSeries>& p) {
    LaurentMatrix m = LaurentMatrix::identity(n);
    for (std::size_t j = 0; j < word.size(); ++j) m = m * gen_y(n, word[j], p[j]);
    return m;
}

IntVec mu_plus(const LaurentMatrix& g) {
    // Minors of g^-1 on the first k columns are complementary minors of g on the last n-k rows.
    const int n = g.n();
    IntVec out(n - 1);
    for (int k = 1; k < n; ++k) {
        std::vector<LaurentSeries> ms;
        for (const auto& cols : subsets(n, n - k)) ms.push_back(g.minor(range(k, n), cols));
        out[k - 1] = -min_valuation(ms);
    }
    return out;
}

IntVec mu_minus(const LaurentMatrix& g) {
    const int n = g.n();
    IntVec out(n - 1);
    for (int k = 1; k < n; ++k) {
        std::vector<LaurentSeries> ms;
        for (const auto& cols : subsets(n, k)) ms.push_back(g.minor(range(0, k), cols));
        out[k - 1] = min_valuation(ms);
    }
    return out;
}

IntVec orbit_coweight(const LaurentMatrix& g) {
    const int n = g.n();
    IntVec x(n - 1);
    for (int k = 1; k < n; ++k) {
        std::vector<LaurentSeries> ms;
        auto all = subsets(n, k);
        for (const auto& rows : all)
            for (const auto& cols : all) ms.push_back(g.minor(rows, cols));
        x[k - 1] = min_valuation(ms);
    }
    for (int i = 0; i < n - 1; ++i) {
        std::int64_t v = 2 * x[i] - (i > 0 ? x[i - 1] : 0) - (i < n - 2 ? x[i + 1] : 0);
        if (v > 0) throw PrecisionError("orbit parameter is not antidominant");
    }
    return x;
}

bool coset_equal(const LaurentMatrix& u, const LaurentMatrix& v) {
    LaurentMatrix m = u.inverse() * v;
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) {
            const LaurentSeries& x = m(i, j);
            if (x.known_zero()) {
                if (x.cap() < 0) throw PrecisionError("coset test undecided below t^0");
                continue;
            }
            if (x.val() < 0) return false;
        }
    return true;
}

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial, std::uint64_t attempt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(attempt)};
    eng_.seed(seq);
}

std::int64_t TrialRng::nonzero() {
    std::uniform_int_distribution<std::int64_t> dist(1, 10000);
    std::int64_t v = dist(eng_);
    return std::bernoulli_distribution(0.5)(eng_) ? v : -v;
}

LaurentSeries TrialRng::monomial(int m) { return LaurentSeries::monomial(mpq_class(static_cast<long>(nonzero())), m); }

LaurentSeries TrialRng::unit_times_tpow(int m) {
    std::map<int, mpq_class> t;
    t[m] = mpq_class(static_cast<long>(nonzero()));
    t[m + 1] = mpq_class(static_cast<long>(nonzero()));
    t[m + 2] = mpq_class(static_cast<long>(nonzero()));
    return LaurentSeries::from_terms(std::move(t));
}

std::vector<CheckReport> generator_identity_checks(int n, int trials, std::uint64_t seed, Exec exec) {
    std::vector<IntVec> roots;
    for (int a = 0; a < n - 1; ++a)
        for (int b = a; b < n - 1; ++b) {
            IntVec r(n - 1, 0);
            for (int i = a; i <= b; ++i) r[i] = 1;
            roots.push_back(r);
        }
    const char* names[] = {"torus_commutation", "rank_one_commutation", "reflection_lift", "fold_across_wall",
                           "fold_reflection"};
    constexpr int kChecks = 5;
    auto results = run_trials<std::vector<std::string>>(trials, exec, [&](int k) {
        std::vector<std::string> fails(kChecks);
        TrialRng rng(seed, k);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(roots.size()) - 1), small(-2, 2);
        IntVec alpha = roots[pick(rng.engine())];
        IntVec neg = negate(alpha);
        IntVec lambda(n - 1);
        for (auto& x : lambda) x = small(rng.engine());
        LaurentSeries a = rng.unit_times_tpow(small(rng.engine()));
        LaurentSeries b = rng.unit_times_tpow(small(rng.engine()));
        LaurentSeries am = rng.monomial(small(rng.engine()));
        int m = small(rng.engine());
        int label = 1 + static_cast<int>(rng.engine()() % (n - 1));
        IntVec simple(n - 1, 0);
        simple[label - 1] = 1;
        auto guard = [&](int idx, auto&& fn) {
            try {
                with_precision_escalation(default_precision(), [&] {
                    if (!fn()) fails[idx] = "mismatch";
                    return 0;
                });
            } catch (const std::exception& e) {
                fails[idx] = e.what();
            }
        };
        guard(0, [&] {
            const IntVec& r = (k % 2) ? alpha : neg;
            return (gen_torus(n, a, lambda) * gen_x(n, r, b))
                .agrees_with(gen_x(n, r, series_pow(a, static_cast<int>(pair_a(r, lambda))) * b) * gen_torus(n, a, lambda));
        });
        guard(1, [&] {
            LaurentSeries u = LaurentSeries(1) + a * b;
            LaurentSeries ui = u.inverse();
            LaurentMatrix lhs = gen_x(n, alpha, a) * gen_x(n, neg, b);
            LaurentMatrix rhs = gen_x(n, neg, b * ui) * gen_torus(n, u, coroot_of(alpha)) * gen_x(n, alpha, a * ui);
            return lhs.agrees_with(rhs);
        });
        guard(2, [&] {
            LaurentSeries ai = -am.inverse();
            LaurentMatrix s = gen_sbar_root(n, alpha);
            LaurentMatrix one = gen_x(n, alpha, am) * gen_x(n, neg, ai) * gen_x(n, alpha, am);
            LaurentMatrix two = gen_x(n, neg, ai) * gen_x(n, alpha, am) * gen_x(n, neg, ai);
            LaurentMatrix three = gen_torus(n, am, coroot_of(alpha)) * s;
            LaurentMatrix four = s * gen_torus(n, am, negate(coroot_of(alpha)));
            return one.agrees_with(two) && one.agrees_with(three) && one.agrees_with(four);
        });
        guard(3, [&] {
            LaurentSeries h = LaurentSeries::monomial(am.leading(), 0);
            LaurentMatrix lhs = gen_y(n, label, h * tpow(-m - 1)) * gen_x_simple(n, label, -h.inverse() * tpow(m + 1));
            LaurentMatrix rhs = gen_torus(n, -h, negate(simple)) * gen_x_simple(n, label, h * tpow(m + 1)) *
                                gen_t(n, scale_int(simple, m + 1)) * gen_sbar(n, label);
            return lhs.agrees_with(rhs);
        });
        guard(4, [&] {
            LaurentSeries h = LaurentSeries::monomial(am.leading(), 0);
            LaurentMatrix lhs = gen_x_simple(n, label, h * tpow(m)) * gen_y(n, label, -h.inverse() * tpow(-m)) *
                                gen_x_simple(n, label, h * tpow(m));
            LaurentMatrix ts = gen_t(n, scale_int(simple, m + 1)) * gen_sbar(n, label);
            LaurentMatrix rhs = ts.inverse() * gen_torus(n, -h, negate(simple)) * gen_t(n, simple);
            return lhs.agrees_with(rhs);
        });
        return fails;
    });
    std::vector<CheckReport> out(kChecks);
    for (int c = 0; c < kChecks; ++c) {
        out[c].name = names[c];
        out[c].trials = trials;
        for (int k = 0; k < trials; ++k)
            if (!results[k][c].empty()) {
                if (out[c].failures++ == 0) out[c].first_failure = "trial " + std::to_string(k) + ": " + results[k][c];
            }
    }
    return out;
}

bool rank_one_identity_check(std::int64_t nu, std::int64_t lambda, const LaurentSeries& q) {
    if (lambda < nu) throw std::invalid_argument("rank_one_identity_check needs lambda - nu in N alpha^vee");
    const int e = static_cast<int>(lambda + nu);
    return with_precision_escalation(default_precision(), [&] {
        LaurentMatrix u = gen_y(2, 1, q.inverse() * tpow(-e)) * gen_t(2, {nu});
        LaurentMatrix v = gen_x_simple(2, 1, q * tpow(e)) * gen_t(2, {lambda});
        return coset_equal(u, v);
    });
}

CheckReport rank_one_random_checks(int trials, std::uint64_t seed, Exec exec) {
    auto res = run_trials<std::string>(trials, exec, [&](int k) -> std::string {
        TrialRng rng(seed, k);
        std::uniform_int_distribution<int> nu_d(-3, 3), k_d(0, 3);
        std::int64_t nu = nu_d(rng.engine());
        std::int64_t lambda = nu + k_d(rng.engine());
        LaurentSeries q = rng.unit_times_tpow(0);
        try {
            if (rank_one_identity_check(nu, lambda, q)) return "";
            return "nu=" + std::to_string(nu) + " lambda=" + std::to_string(lambda) + ": cosets differ";
        } catch (const std::exception& e) {
            return e.what();
        }
    });
    CheckReport r{"rank_one_identity", trials, 0, ""};
    for (int k = 0; k < trials; ++k)
        if (!res[k].empty() && r.failures++ == 0) r.first_failure = "trial " + std::to_string(k) + ": " + res[k];
    return r;
}

PointReport point_report(const LaurentMatrix& g) {
    PointReport r;
    try {
        r.mu_plus = mu_plus(g);
        r.mu_minus = mu_minus(g);
        r.orbit = orbit_coweight(g);
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    return r;
}

YtildeReport sample_ytilde(const DatumPtr& d, const Word& word, const IntVec& c, int trials, std::uint64_t seed,
                           Exec exec) {
    if (d->series() != Series::A) throw std::invalid_argument("sample_ytilde is implemented for type A only");
    const int n = d->rank() + 1;
    YtildeReport rep;
    rep.c = c;
    rep.c_tilde = string_to_tilde(*d, word, c);
    rep.expected.assign(n - 1, 0);
    for (std::size_t j = 0; j < word.size(); ++j) rep.expected[word[j] - 1] += c[j];
    rep.trials = run_trials<PointReport>(trials, exec, [&](int k) {
        TrialRng rng(seed, k);
        std::vector<LaurentSeries> p;
        for (auto m : rep.c_tilde) p.push_back(rng.unit_times_tpow(static_cast<int>(m)));
        return point_report(y_product(n, word, p));
    });
    return rep;
}

IntVec to_int_coweight(const RatVec& x) {
    IntVec out;
    for (const auto& v : x) {
        if (!is_integral(v)) throw std::invalid_argument("coweight is not in the coroot lattice");
        out.push_back(v.numerator());
    }
    return out;
}

LaurentMatrix cell_point(const Gallery& g, TrialRng& rng) {
    const RootDatum& d = *g.type->datum;
    if (d.series() != Series::A) throw std::invalid_argument("cell sampling is implemented for type A only");
    const int n = d.rank() + 1;
    GalleryGeometry geo = geometry(g);
    LaurentMatrix m = LaurentMatrix::identity(n);
    for (std::size_t j = 0; j < geo.alcoves.size(); ++j)
        for (const auto& beta : phi_plus_aff_points(d, geo.facets[j], geo.alcoves[j]))
            m = m * gen_x(n, beta.root, rng.monomial(static_cast<int>(beta.level)));
    return m * gen_t(n, to_int_coweight(geo.weight));
}

CellReport sample_cell(const Gallery& g, int trials, std::uint64_t seed, Exec exec) {
    if (!is_positively_folded(g)) throw std::invalid_argument("sample_cell needs a positively folded gallery");
    CellReport rep;
    rep.weight = to_int_coweight(weight(g));
    rep.points = run_trials<LaurentMatrix>(trials, exec, [&](int k) {
        TrialRng rng(seed, k);
        return cell_point(g, rng);
    });
    for (const auto& p : rep.points) rep.trials.push_back(point_report(p));
    return rep;
}

std::vector<LaurentMatrix> crystal_op_sample(const std::vector<LaurentMatrix>& points, int label, int k, int eps,
                                             std::uint64_t seed) {
    std::vector<LaurentMatrix> out;
    for (std::size_t idx = 0; idx < points.size(); ++idx) {
        TrialRng rng(seed, idx, 1);
        out.push_back(gen_y(points[idx].n(), label, rng.unit_times_tpow(eps - k)) * points[idx]);
    }
    return out;
}

GaussFactors gauss_decompose(const LaurentMatrix& g) {
    const int n = g.n();
    GaussFactors f{LaurentMatrix(n), LaurentMatrix(n)};
    for (int r = n - 1; r >= 0; --r) {
        std::vector<LaurentSeries> rho(n);
        for (int j = 0; j < n; ++j) rho[j] = g(r, j);
        for (int s = n - 1; s > r; --s) {
            LaurentSeries b = rho[s];
            f.upper(r, s) = b;
            if (b.is_exact_zero()) continue;
            for (int j = 0; j <= s; ++j)
                if (!f.lower(s, j).is_exact_zero()) rho[j] = rho[j] - b * f.lower(s, j);
        }
        if (rho[r].known_zero()) {
            if (rho[r].exact()) throw std::domain_error("gauss_decompose: a leading minor vanishes");
            throw PrecisionError("gauss_decompose: pivot indistinguishable from zero");
        }
        f.upper(r, r) = rho[r];
        LaurentSeries inv = rho[r].inverse();
        for (int j = 0; j < r; ++j) f.lower(r, j) = rho[j] * inv;
        f.lower(r, r) = LaurentSeries(1);
    }
    return f;
}

namespace {

int min_val_index(const std::vector<LaurentSeries>& v) {
    int best = -1;
    for (int j = 0; j < static_cast<int>(v.size()); ++j) {
        if (v[j].known_zero()) continue;
        if (best < 0 || v[j].val() < v[best].val()) best = j;
    }
    return best;
}

struct Pivot {
    int col;
    std::vector<LaurentSeries> row;
};

void reduce(std::vector<LaurentSeries>& v, const std::vector<Pivot>& pivots) {
    for (const auto& p : pivots) {
        if (v[p.col].known_zero()) continue;
        LaurentSeries f = v[p.col] / p.row[p.col];
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!p.row[j].is_exact_zero()) v[j] = v[j] - f * p.row[j];
    }
}

}  // namespace

std::vector<LaurentSeries> factor_y(const LaurentMatrix& g, const Word& word) {
    const int n = g.n();
    const int N = static_cast<int>(word.size());
    // perms[t] = s_{i_t} ... s_{i_N} as a map on 0..n-1
    std::vector<std::vector<int>> perms(N + 1, range(0, n));
    for (int t = N - 1; t >= 0; --t) {
        perms[t] = perms[t + 1];
        int a = word[t] - 1;
        for (auto& x : perms[t]) {
            if (x == a) x = a + 1;
            else if (x == a + 1) x = a;
        }
    }
    LaurentMatrix r = g;
    std::vector<LaurentSeries> p(N);
    for (int t = 0; t < N; ++t) {
        const auto& w = perms[t];
        const int a = word[t] - 1, b = a + 1;
        int q = static_cast<int>(std::find(w.begin(), w.end(), b) - w.begin());
        int qa = static_cast<int>(std::find(w.begin(), w.end(), a) - w.begin());
        if (qa < q) throw std::invalid_argument("factor_y: word is not reduced");
        int expected_rank = 0;
        for (int j = 0; j <= q; ++j) expected_rank += w[j] > b;
        std::vector<Pivot> pivots;
        for (int row = b + 1; row < n; ++row) {
            std::vector<LaurentSeries> v(q + 1);
            for (int j = 0; j <= q; ++j) v[j] = r(row, j);
            reduce(v, pivots);
            int c = min_val_index(v);
            if (c >= 0) pivots.push_back({c, std::move(v)});
        }
        if (static_cast<int>(pivots.size()) != expected_rank)
            throw PrecisionError("factor_y: rank of the lower block is not resolved");
        std::vector<LaurentSeries> ra(q + 1), rb(q + 1);
        for (int j = 0; j <= q; ++j) {
            ra[j] = r(a, j);
            rb[j] = r(b, j);
        }
        reduce(ra, pivots);
        reduce(rb, pivots);
        int c = min_val_index(ra);
        if (c < 0) throw PrecisionError("factor_y: pivot row indistinguishable from zero");
        p[t] = rb[c] / ra[c];
        for (int j = 0; j <= q; ++j) rb[j] = rb[j] - p[t] * ra[j];
        if (!all_known_zero(rb)) throw std::domain_error("factor_y: residual is not in the smaller Bruhat cell");
        for (int j = 0; j < n; ++j)
            if (!r(a, j).is_exact_zero()) r(b, j) = r(b, j) - p[t] * r(a, j);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            LaurentSeries x = r(i, j) - LaurentSeries(i == j ? 1 : 0);
            if (!x.known_zero()) throw std::domain_error("factor_y: residual is not the identity");
            if (x.cap() < 1) throw PrecisionError("factor_y: residual undecided");
        }
    for (const auto& x : p) (void)x.val();
    return p;
}

LaurentMatrix counterexample_matrix() {
    const LaurentSeries t = tpow(1), ti = tpow(-1);
    return y_product(4, {2, 1, 3, 2, 1, 3}, {LaurentSeries(-1), ti, ti, t, -ti, -ti});
}

LaurentMatrix counterexample_display() {
    LaurentMatrix m = LaurentMatrix::identity(4);
    m(2, 0) = LaurentSeries(-1);
    m(2, 1) = tpow(1) - LaurentSeries(1);
    m(3, 0) = -tpow(-1);
    m(3, 1) = LaurentSeries(1);
    return m;
}

LaurentMatrix z_map(int n, const Word& word, const std::vector<LaurentSeries>& q) {
    return gauss_decompose(y_product(n, word, q) * gen_wbar(n, word).inverse()).lower;
}

std::vector<LaurentSeries> f_map(int n, const Word& word, const std::vector<LaurentSeries>& p) {
    return factor_y(gauss_decompose(y_product(n, word, p) * gen_wbar(n, word)).lower, word);
}

std::vector<LaurentSeries> g_map(int n, const Word& word, const std::vector<LaurentSeries>& q) {
    return factor_y(z_map(n, word, q), word);
}

TropResult trop_eval(const SeriesMap& map, const IntVec& m, int trials, std::uint64_t seed, int max_attempts) {
    TropResult res;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        res.attempts = attempt + 1;
        std::optional<IntVec> agreed;
        std::string failure;
        for (int k = 0; k < trials && failure.empty(); ++k) {
            TrialRng rng(seed, k, attempt);
            std::vector<LaurentSeries> p;
            for (auto x : m) p.push_back(rng.unit_times_tpow(static_cast<int>(x)));
            try {
                IntVec v = with_precision_escalation(default_precision(), [&] {
                    IntVec out;
                    for (const auto& s : map(p)) out.push_back(s.val());
                    return out;
                });
                if (!agreed) agreed = v;
                else if (*agreed != v) failure = "trials disagree: " + to_string(*agreed) + " vs " + to_string(v);
            } catch (const std::exception& e) {
                failure = std::string("trial ") + std::to_string(k) + ": " + e.what();
            }
        }
        if (failure.empty() && agreed) {
            res.ok = true;
            res.value = *agreed;
            res.failure.clear();
            return res;
        }
        res.failure = failure;
    }
    return res;
}

LusztigResult lusztig_from_string(const DatumPtr& d, const Word& word, const IntVec& c_tilde, int trials,
                                  std::uint64_t seed) {
    if (d->series() != Series::A) throw std::invalid_argument("transition maps are implemented for type A only");
    const int n = d->rank() + 1;
    LusztigResult out;
    TropResult f = trop_eval([&](const std::vector<LaurentSeries>& p) { return f_map(n, word, p); }, c_tilde, trials,
                             seed);
    if (!f.ok) {
        out.failure = "f: " + f.failure;
        return out;
    }
    out.n = f.value;
    TropResult g = trop_eval([&](const std::vector<LaurentSeries>& q) { return g_map(n, word, q); }, out.n, trials,
                             seed + 1);
    if (!g.ok) {
        out.failure = "g: " + g.failure;
        return out;
    }
    out.back = g.value;
    bool nonneg = std::all_of(out.n.begin(), out.n.end(), [](std::int64_t x) { return x >= 0; });
    if (!nonneg) out.failure = "Lusztig parameter has a negative entry";
    else if (out.back != c_tilde) out.failure = "inverse map does not return c_tilde";
    out.ok = out.failure.empty();
    return out;
}

MorierGenoudRow morier_genoud_check(const CrystalGraph& g, int node, const Word& word, const RatVec& lambda,
                                    int trials, std::uint64_t seed) {
    const RootDatum& d = *g.datum;
    MorierGenoudRow row;
    row.node = node;
    row.c_tilde_f = string_parameters(g, node, word).c_tilde;
    row.c_tilde_e = string_to_tilde(d, word, e_string(g, node, word));
    row.lusztig = lusztig_from_string(g.datum, word, row.c_tilde_e, trials, seed);
    RatVec dual = d.act(d.longest_element(), scale(lambda, Rational(-1)));
    for (std::size_t j = 0; j < word.size(); ++j) {
        IntVec e(d.rank(), 0);
        e[word[j] - 1] = 1;
        Rational v = d.pair(e, dual);
        row.predicted.push_back(v.numerator() + row.c_tilde_f[j]);
    }
    row.ok = row.lusztig.ok && row.lusztig.n == row.predicted;
    return row;
}

}  // namespace mvcrys
