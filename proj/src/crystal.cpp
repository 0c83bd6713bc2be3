#include "mvcrys/crystal.hpp"

#include "mvcrys/gallery.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace mvcrys {

namespace {

Rational pair_simple(const RootDatum& d, int c, const RatVec& x) {
    Rational s(0);
    for (int k = 0; k < d.rank(); ++k) s += Rational(d.cartan(c, k)) * x[k];
    return s;
}

std::string node_str(std::size_t b, int c) {
    return "node " + std::to_string(b) + " color " + std::to_string(c + 1) + ": ";
}

}  // namespace

std::vector<std::string> validate_axioms(const CrystalGraph& g) {
    std::vector<std::string> out;
    const RootDatum& d = *g.datum;
    const int r = d.rank();
    const int N = static_cast<int>(g.size());
    for (int b = 0; b < N; ++b) {
        for (int c = 0; c < r; ++c) {
            int fb = g.f[b][c], eb = g.e[b][c];
            if (fb >= N || eb >= N) {
                out.push_back(node_str(b, c) + "arrow points outside the graph");
                continue;
            }
            if (fb >= 0) {
                if (g.e[fb][c] != b) out.push_back(node_str(b, c) + "e(f(b)) != b");
                RatVec expect = g.weight[b];
                expect[c] -= 1;
                if (g.weight[fb] != expect) out.push_back(node_str(b, c) + "wt(f b) != wt(b) - alpha^vee");
                if (g.eps[fb][c] != g.eps[b][c] + 1) out.push_back(node_str(b, c) + "eps(f b) != eps(b) + 1");
                if (g.phi[fb][c] != g.phi[b][c] - 1) out.push_back(node_str(b, c) + "phi(f b) != phi(b) - 1");
            }
            if (eb >= 0 && g.f[eb][c] != b) out.push_back(node_str(b, c) + "f(e(b)) != b");
            if (Rational(g.phi[b][c] - g.eps[b][c]) != pair_simple(d, c, g.weight[b]))
                out.push_back(node_str(b, c) + "phi - eps != <alpha, wt>");
            int len = 0;
            for (int x = g.e[b][c]; x >= 0 && len <= N; x = g.e[x][c]) ++len;
            if (len != g.eps[b][c]) out.push_back(node_str(b, c) + "eps differs from e-string length");
            len = 0;
            for (int x = g.f[b][c]; x >= 0 && len <= N; x = g.f[x][c]) ++len;
            if (len != g.phi[b][c]) out.push_back(node_str(b, c) + "phi differs from f-string length");
        }
    }
    return out;
}

Character character(const CrystalGraph& g) {
    Character ch;
    for (const auto& w : g.weight) ++ch[w];
    return ch;
}

std::int64_t weyl_dimension(const RootDatum& d, const RatVec& lambda) {
    RatVec rho = d.rho_vee();
    RatVec shifted = add(lambda, rho);
    Rational prod(1);
    for (const auto& a : d.positive_roots()) prod *= d.pair(a.c, shifted) / d.pair(a.c, rho);
    if (!is_integral(prod)) throw std::logic_error("Weyl dimension is not an integer");
    return prod.numerator();
}

Character expected_character(const RootDatum& d, const RatVec& lambda) {
    if (!d.is_dominant(lambda)) throw std::invalid_argument("expected_character: lambda is not dominant");
    const int r = d.rank();
    auto form = [&](const RatVec& x, const RatVec& y) {
        Rational s(0);
        for (const auto& a : d.positive_roots()) s += d.pair(a.c, x) * d.pair(a.c, y);
        return s;
    };
    // Breadth-first order is by depth, so every mu + k beta is settled before mu.
    std::vector<RatVec> order{lambda};
    std::set<RatVec> members{lambda};
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (int i = 0; i < r; ++i) {
            RatVec mu = order[head];
            mu[i] -= 1;
            if (members.count(mu)) continue;
            if (!dominance_leq(d.dominant_conjugate(mu), lambda)) continue;
            members.insert(mu);
            order.push_back(mu);
        }
    }
    std::vector<RatVec> coroots;
    for (const auto& cv : d.positive_coroots()) coroots.push_back(to_rat(cv));
    RatVec rho = d.rho_vee();
    Rational top = form(add(lambda, rho), add(lambda, rho));
    Character ch;
    ch[lambda] = 1;
    for (std::size_t idx = 1; idx < order.size(); ++idx) {
        const RatVec& mu = order[idx];
        Rational num(0);
        for (const auto& beta : coroots) {
            RatVec x = add(mu, beta);
            while (members.count(x)) {
                num += form(x, beta) * Rational(ch.at(x));
                x = add(x, beta);
            }
        }
        Rational den = top - form(add(mu, rho), add(mu, rho));
        Rational m = Rational(2) * num / den;
        if (!is_integral(m) || m <= 0) throw std::logic_error("Freudenthal recursion produced " + to_string(m));
        ch[mu] = m.numerator();
    }
    return ch;
}

IntVec string_to_tilde(const RootDatum& d, const Word& word, const IntVec& c) {
    const std::size_t N = word.size();
    IntVec t(N, 0);
    for (std::size_t j = 0; j < N; ++j) {
        std::int64_t s = -c[j];
        for (std::size_t k = j + 1; k < N; ++k) s -= c[k] * d.cartan(word[j] - 1, word[k] - 1);
        t[j] = s;
    }
    return t;
}

IntVec tilde_to_string(const RootDatum& d, const Word& word, const IntVec& c_tilde) {
    const std::size_t N = word.size();
    IntVec c(N, 0);
    for (std::size_t jj = N; jj-- > 0;) {
        std::int64_t s = -c_tilde[jj];
        for (std::size_t k = jj + 1; k < N; ++k) s -= c[k] * d.cartan(word[jj] - 1, word[k] - 1);
        c[jj] = s;
    }
    return c;
}

namespace {

int unique_node(const CrystalGraph& g, const std::vector<std::vector<int>>& arrows, const char* what) {
    int found = -1;
    for (std::size_t b = 0; b < g.size(); ++b) {
        bool none = true;
        for (int x : arrows[b]) none = none && x < 0;
        if (!none) continue;
        if (found >= 0) throw std::invalid_argument(std::string("crystal has several ") + what + " nodes");
        found = static_cast<int>(b);
    }
    if (found < 0) throw std::invalid_argument(std::string("crystal has no ") + what + " node");
    return found;
}

}  // namespace

int lowest_node(const CrystalGraph& g) { return unique_node(g, g.f, "lowest"); }
int highest_node(const CrystalGraph& g) { return unique_node(g, g.e, "highest"); }

StringParam string_parameters(const CrystalGraph& g, int node, const Word& word) {
    StringParam sp;
    sp.word = word;
    int cur = node;
    for (int i : word) {
        int c = g.phi[cur][i - 1];
        sp.c.push_back(c);
        for (int s = 0; s < c; ++s) cur = g.f[cur][i - 1];
    }
    if (cur != lowest_node(g)) throw std::invalid_argument("string_parameters: walk did not end at the lowest-weight node");
    sp.c_tilde = string_to_tilde(*g.datum, word, sp.c);
    return sp;
}

IntVec e_string(const CrystalGraph& g, int node, const Word& word) {
    IntVec out;
    int cur = node;
    for (int i : word) {
        int c = g.eps[cur][i - 1];
        out.push_back(c);
        for (int s = 0; s < c; ++s) cur = g.e[cur][i - 1];
    }
    if (cur != highest_node(g)) throw std::invalid_argument("e_string: walk did not end at the highest-weight node");
    return out;
}

int follow_e_word(const CrystalGraph& g, const Word& e_word) {
    int cur = lowest_node(g);
    for (int i : e_word) {
        if (i < 1 || i > g.colors()) throw std::invalid_argument("selector letter out of range");
        cur = g.e[cur][i - 1];
        if (cur < 0) return -1;
    }
    return cur;
}

StableString stable_string(DatumPtr d, const RatVec& lambda, const RatVec& mu, const Word& selector, const Word& word,
                           int max_levels) {
    std::optional<IntVec> prev;
    for (int k = 0; k < max_levels; ++k) {
        RatVec level = add(lambda, scale(mu, Rational(k)));
        auto crystal = enumerate_LS(make_type(d, level));
        int node = follow_e_word(crystal.graph, selector);
        if (node < 0) {
            prev.reset();
            continue;
        }
        auto sp = string_parameters(crystal.graph, node, word);
        if (prev && *prev == sp.c) return {sp, k + 1};
        prev = sp.c;
    }
    throw std::runtime_error("stable_string: no stabilization within the tower bound");
}

IsoResult crystal_isomorphic(const CrystalGraph& g1, const CrystalGraph& g2) {
    IsoResult res;
    if (g1.colors() != g2.colors()) {
        res.failure = "different ranks";
        return res;
    }
    int s1 = highest_node(g1), s2 = highest_node(g2);
    if (g1.weight[s1] != g2.weight[s2]) {
        res.failure = "source weights differ: " + to_string(g1.weight[s1]) + " vs " + to_string(g2.weight[s2]);
        return res;
    }
    std::vector<int> map12(g1.size(), -1), map21(g2.size(), -1);
    map12[s1] = s2;
    map21[s2] = s1;
    std::deque<int> queue{s1};
    auto bind = [&](int u, int v, const std::string& where) -> bool {
        if (map12[u] < 0 && map21[v] < 0) {
            if (g1.weight[u] != g2.weight[v]) {
                res.failure = where + ": weights differ";
                return false;
            }
            map12[u] = v;
            map21[v] = u;
            queue.push_back(u);
            return true;
        }
        if (map12[u] != v || map21[v] != u) {
            res.failure = where + ": inconsistent matching";
            return false;
        }
        return true;
    };
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        int v = map12[u];
        for (int c = 0; c < g1.colors(); ++c) {
            std::string where = "node " + std::to_string(u) + " color " + std::to_string(c + 1);
            for (int dir = 0; dir < 2; ++dir) {
                int a = dir ? g1.e[u][c] : g1.f[u][c];
                int b = dir ? g2.e[v][c] : g2.f[v][c];
                if ((a < 0) != (b < 0)) {
                    res.failure = where + ": arrow defined on one side only";
                    return res;
                }
                if (a >= 0 && !bind(a, b, where)) return res;
            }
        }
    }
    for (int x : map12)
        if (x < 0) {
            res.failure = "first graph is not connected";
            return res;
        }
    if (g1.size() != g2.size()) {
        res.failure = "node counts differ";
        return res;
    }
    res.ok = true;
    res.matching = std::move(map12);
    return res;
}

}  // namespace mvcrys
