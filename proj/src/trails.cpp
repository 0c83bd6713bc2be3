#include "mvcrys/trails.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace mvcrys {

WedgeRep build_wedge_rep(int n, int k) {
    if (n < 2 || k < 1 || k > n - 1) throw std::invalid_argument("build_wedge_rep: need 1 <= k <= n-1");
    WedgeRep rep;
    rep.n = n;
    rep.k = k;
    std::vector<int> mask(n, 0);
    std::fill(mask.begin(), mask.begin() + k, 1);
    do {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask[i]) s.push_back(i + 1);
        rep.basis.push_back(s);
    } while (std::prev_permutation(mask.begin(), mask.end()));
    std::sort(rep.basis.begin(), rep.basis.end());
    for (int b = 0; b < rep.dim(); ++b) {
        rep.index[rep.basis[b]] = b;
        IntVec w(n, 0);
        for (int x : rep.basis[b]) w[x - 1] = 1;
        rep.weights.push_back(w);
    }
    rep.raise.assign(n - 1, std::vector<int>(rep.dim(), -1));
    rep.lower.assign(n - 1, std::vector<int>(rep.dim(), -1));
    for (int i = 1; i < n; ++i) {
        for (int b = 0; b < rep.dim(); ++b) {
            const auto& s = rep.basis[b];
            bool has_i = std::count(s.begin(), s.end(), i) > 0;
            bool has_next = std::count(s.begin(), s.end(), i + 1) > 0;
            if (has_next && !has_i) {
                auto t = s;
                std::replace(t.begin(), t.end(), i + 1, i);
                rep.raise[i - 1][b] = rep.index.at(t);
            }
            if (has_i && !has_next) {
                auto t = s;
                std::replace(t.begin(), t.end(), i, i + 1);
                rep.lower[i - 1][b] = rep.index.at(t);
            }
        }
    }
    if (!check_commutators(rep).empty()) throw std::logic_error("wedge representation fails the commutator check");
    return rep;
}

namespace {

SparseVec apply_map(const std::vector<int>& m, const SparseVec& v) {
    SparseVec out;
    for (const auto& [b, c] : v) {
        if (m[b] < 0 || c == 0) continue;
        out[m[b]] += c;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace

SparseVec apply_raise(const WedgeRep& rep, int label, const SparseVec& v) { return apply_map(rep.raise[label - 1], v); }
SparseVec apply_lower(const WedgeRep& rep, int label, const SparseVec& v) { return apply_map(rep.lower[label - 1], v); }

std::vector<std::string> check_commutators(const WedgeRep& rep) {
    std::vector<std::string> out;
    for (int b = 0; b < rep.dim(); ++b) {
        SparseVec v{{b, 1}};
        for (int i = 1; i < rep.n; ++i)
            for (int j = 1; j < rep.n; ++j) {
                SparseVec lhs = apply_raise(rep, i, apply_lower(rep, j, v));
                for (const auto& [x, c] : apply_lower(rep, j, apply_raise(rep, i, v))) lhs[x] -= c;
                std::int64_t h = (i == j) ? rep.weights[b][i - 1] - rep.weights[b][i] : 0;
                lhs[b] -= h;
                bool zero = std::all_of(lhs.begin(), lhs.end(), [](const auto& p) { return p.second == 0; });
                if (!zero)
                    out.push_back("basis " + std::to_string(b) + ": [E_" + std::to_string(i) + ",F_" + std::to_string(j) +
                                  "] mismatch");
            }
    }
    return out;
}

IntVec reflect_weight(const IntVec& eps, int label) {
    IntVec out = eps;
    std::swap(out[label - 1], out[label]);
    return out;
}

IntVec fundamental_weight_eps(int n, int i) {
    IntVec w(n, 0);
    for (int j = 0; j < i; ++j) w[j] = 1;
    return w;
}

IntVec longest_weight_action(const IntVec& eps) { return IntVec(eps.rbegin(), eps.rend()); }

std::vector<ITrail> enumerate_itrails(const WedgeRep& rep, const IntVec& gamma, const IntVec& delta, const Word& word) {
    std::vector<ITrail> out;
    auto start = std::find(rep.weights.begin(), rep.weights.end(), delta);
    if (start == rep.weights.end()) return out;
    const int N = static_cast<int>(word.size());
    std::vector<IntVec> weights(N + 1);
    IntVec exps(N, 0);
    weights[N] = delta;
    // j runs from N down to 1: the rightmost operator acts first.
    std::function<void(int, const SparseVec&)> rec = [&](int j, const SparseVec& v) {
        if (j == 0) {
            if (weights[0] != gamma) return;
            ITrail t;
            t.weights = weights;
            t.exponents = exps;
            t.witness = v.begin()->second;
            for (int l = 1; l <= N; ++l) {
                int i = word[l - 1];
                std::int64_t s = weights[l - 1][i - 1] - weights[l - 1][i] + weights[l][i - 1] - weights[l][i];
                if (s % 2 != 0) throw std::logic_error("trail statistic d_j is not an integer");
                t.d.push_back(s / 2);
            }
            out.push_back(std::move(t));
            return;
        }
        int i = word[j - 1];
        SparseVec cur = v;
        IntVec w = weights[j];
        for (int e = 0; !cur.empty(); ++e) {
            exps[j - 1] = e;
            weights[j - 1] = w;
            rec(j - 1, cur);
            cur = apply_raise(rep, i, cur);
            w[i - 1] += 1;
            w[i] -= 1;
        }
        exps[j - 1] = 0;
    };
    rec(N, SparseVec{{static_cast<int>(start - rep.weights.begin()), 1}});
    return out;
}

StringCone string_cone_inequalities(int n, const Word& word, Exec exec) {
    StringCone cone;
    cone.word = word;
    cone.trails.resize(n - 1);
    auto work = [&](int i) {
        WedgeRep rep = build_wedge_rep(n, i);
        IntVec gamma = fundamental_weight_eps(n, i);
        IntVec delta = longest_weight_action(reflect_weight(gamma, i));
        cone.trails[i - 1] = enumerate_itrails(rep, gamma, delta, word);
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (int i = 1; i < n; ++i) work(i);
    } else {
        for (int i = 1; i < n; ++i) work(i);
    }
    std::set<IntVec> uniq;
    for (const auto& ts : cone.trails)
        for (const auto& t : ts) {
            cone.raw.push_back(t.d);
            uniq.insert(t.d);
        }
    cone.rows.assign(uniq.begin(), uniq.end());
    return cone;
}

bool in_string_cone(const IntVec& c, const std::vector<IntVec>& rows) {
    for (const auto& r : rows) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < r.size(); ++j) s += r[j] * c[j];
        if (s < 0) return false;
    }
    return true;
}

std::vector<IntVec> listed_a3_relations() {
    return {
        {1, 0, 0, 0, 0, 0},    // c1 >= 0
        {0, 1, 0, 0, 0, -1},   // c2 >= c6
        {0, 0, 0, 0, 0, 1},    // c6 >= 0
        {0, 0, 1, 0, -1, 0},   // c3 >= c5
        {0, 0, 0, 0, 1, 0},    // c5 >= 0
        {0, 1, 1, -1, 0, 0},   // c2 + c3 >= c4
        {0, 0, 0, 1, -1, -1},  // c4 >= c5 + c6
    };
}

ConeComparison compare_cones(const std::vector<IntVec>& a, const std::vector<IntVec>& b, int dim, int lo, int hi,
                             Exec exec) {
    const std::int64_t side = hi - lo + 1;
    std::int64_t total = 1;
    for (int i = 0; i < dim; ++i) total *= side;
    auto point = [&](std::int64_t idx) {
        IntVec c(dim);
        for (int i = 0; i < dim; ++i) {
            c[i] = lo + idx % side;
            idx /= side;
        }
        return c;
    };
    std::int64_t in_a = 0, in_b = 0, bad = 0, first = total;
    if (exec == Exec::parallel) {
#pragma omp parallel for reduction(+ : in_a, in_b, bad) reduction(min : first)
        for (std::int64_t idx = 0; idx < total; ++idx) {
            IntVec c = point(idx);
            bool x = in_string_cone(c, a), y = in_string_cone(c, b);
            in_a += x;
            in_b += y;
            if (x != y) {
                ++bad;
                first = std::min(first, idx);
            }
        }
    } else {
        for (std::int64_t idx = 0; idx < total; ++idx) {
            IntVec c = point(idx);
            bool x = in_string_cone(c, a), y = in_string_cone(c, b);
            in_a += x;
            in_b += y;
            if (x != y) {
                ++bad;
                first = std::min(first, idx);
            }
        }
    }
    ConeComparison res{total, in_a, in_b, bad, {}};
    if (bad) res.first_mismatch = point(first);
    return res;
}

}  // namespace mvcrys
