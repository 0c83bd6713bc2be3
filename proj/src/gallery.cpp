#include "mvcrys/gallery.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mvcrys {

std::vector<int> Gallery::key() const {
    std::vector<int> k{delta0};
    for (char b : folds) k.push_back(b);
    return k;
}

TypePtr make_type(DatumPtr d, const RatVec& lambda, const Word& word) {
    return std::make_shared<const GalleryType>(build_gamma_lambda(d, lambda, word));
}

TypePtr make_type(DatumPtr d, const RatVec& lambda) {
    return std::make_shared<const GalleryType>(build_gamma_lambda(d, lambda));
}

Gallery gamma_lambda(const TypePtr& t) {
    Gallery g;
    g.type = t;
    g.delta0 = 0;
    g.folds.assign(t->p(), 1);
    return g;
}

Gallery gallery_from_key(const TypePtr& t, const std::vector<int>& key) {
    if (static_cast<int>(key.size()) != t->p() + 1) throw std::invalid_argument("gallery tuple has the wrong length");
    if (key[0] < 0 || key[0] >= static_cast<int>(t->datum->weyl_group().size()))
        throw std::invalid_argument("gallery tuple: delta_0 out of range");
    Gallery g;
    g.type = t;
    g.delta0 = key[0];
    for (std::size_t j = 1; j < key.size(); ++j) {
        if (key[j] != 0 && key[j] != 1) throw std::invalid_argument("gallery tuple: fold flags must be 0 or 1");
        g.folds.push_back(static_cast<char>(key[j]));
    }
    return g;
}

GalleryGeometry geometry(const Gallery& g) {
    const GalleryType& t = *g.type;
    const RootDatum& d = *t.datum;
    GalleryGeometry geo;
    AffWeylElt P = aff_finite(d, d.weyl_group()[g.delta0]);
    geo.facets.push_back(RatVec(d.rank(), Rational(0)));
    geo.prefixes.push_back(P);
    geo.alcoves.push_back(aff_act_point(d, P, t.base_alcove));
    for (int j = 1; j <= t.p(); ++j) {
        int label = t.word[j - 1];
        geo.facets.push_back(aff_act_point(d, P, t.base_facets[label]));
        if (g.folds[j - 1]) P = aff_compose(d, P, simple_affine_reflection(d, label));
        geo.prefixes.push_back(P);
        geo.alcoves.push_back(aff_act_point(d, P, t.base_alcove));
    }
    geo.weight = aff_act_point(d, P, t.lambda_fund);
    geo.facets.push_back(geo.weight);
    return geo;
}

RatVec weight(const Gallery& g) { return geometry(g).weight; }

namespace {

IntVec simple_root(int rank, int label) {
    IntVec e(rank, 0);
    e[label - 1] = 1;
    return e;
}

// Level n when the face lies in some wall H_{alpha,n}, nothing otherwise.
std::optional<std::int64_t> wall_level(const RootDatum& d, const IntVec& alpha, const RatVec& x) {
    Rational v = d.pair(alpha, x);
    if (!is_integral(v)) return std::nullopt;
    return v.numerator();
}

std::optional<Gallery> recover(const Gallery& g, const GalleryGeometry& geo, const std::vector<AffWeylElt>& movers) {
    const GalleryType& t = *g.type;
    const RootDatum& d = *t.datum;
    std::vector<AffWeylElt> moved;
    for (std::size_t l = 0; l < geo.prefixes.size(); ++l) moved.push_back(aff_compose(d, movers[l], geo.prefixes[l]));
    if (std::any_of(moved[0].translation.begin(), moved[0].translation.end(), [](auto c) { return c != 0; }))
        throw std::logic_error("root operator: recovered delta_0 is not in the finite Weyl group");
    Gallery out;
    out.type = g.type;
    out.delta0 = d.index_of(moved[0].w);
    for (int l = 1; l <= t.p(); ++l) {
        if (moved[l] == moved[l - 1]) {
            out.folds.push_back(0);
        } else if (aff_compose(d, moved[l - 1], simple_affine_reflection(d, t.word[l - 1])) == moved[l]) {
            out.folds.push_back(1);
        } else {
            throw std::logic_error("root operator: recovered delta_" + std::to_string(l) + " is not of the gallery type");
        }
    }
    return out;
}

}  // namespace

std::int64_t min_wall_level(const Gallery& g, const GalleryGeometry& geo, int label) {
    const RootDatum& d = *g.type->datum;
    IntVec a = simple_root(d.rank(), label);
    std::int64_t m = 0;
    for (const auto& x : geo.facets) {
        auto n = wall_level(d, a, x);
        if (n && *n < m) m = *n;
    }
    return m;
}

std::int64_t min_wall_level(const Gallery& g, int label) { return min_wall_level(g, geometry(g), label); }

CrystalMaps crystal_maps(const Gallery& g, int label) {
    auto geo = geometry(g);
    const RootDatum& d = *g.type->datum;
    std::int64_t m = min_wall_level(g, geo, label);
    Rational nu = d.pair(simple_root(d.rank(), label), geo.weight);
    return {geo.weight, -m, nu.numerator() - m};
}

std::optional<Gallery> root_e(const Gallery& g, const GalleryGeometry& geo, int label) {
    const RootDatum& d = *g.type->datum;
    const int p = g.type->p();
    IntVec a = simple_root(d.rank(), label);
    std::int64_t m = min_wall_level(g, geo, label);
    if (m == 0) return std::nullopt;
    int k = -1;
    for (int l = 1; l <= p + 1 && k < 0; ++l)
        if (wall_level(d, a, geo.facets[l]) == m) k = l;
    int j = -1;
    for (int l = k - 1; l >= 0 && j < 0; --l)
        if (wall_level(d, a, geo.facets[l]) == m + 1) j = l;
    if (k < 0 || j < 0) throw std::logic_error("root_e: wall indices not found");
    IntVec cv = d.positive_coroots()[d.root_index(a)];
    std::vector<AffWeylElt> movers;
    for (int l = 0; l <= p; ++l) {
        if (l < j) movers.push_back(aff_identity(d));
        else if (l < k) movers.push_back(affine_reflection(d, a, m + 1));
        else movers.push_back(aff_translation(d, cv));
    }
    return recover(g, geo, movers);
}

std::optional<Gallery> root_f(const Gallery& g, const GalleryGeometry& geo, int label) {
    const RootDatum& d = *g.type->datum;
    const int p = g.type->p();
    IntVec a = simple_root(d.rank(), label);
    std::int64_t m = min_wall_level(g, geo, label);
    Rational nu = d.pair(a, geo.weight);
    if (Rational(m) == nu) return std::nullopt;
    int j = -1;
    for (int l = p; l >= 0 && j < 0; --l)
        if (wall_level(d, a, geo.facets[l]) == m) j = l;
    int k = -1;
    for (int l = j + 1; l <= p + 1 && k < 0; ++l)
        if (wall_level(d, a, geo.facets[l]) == m + 1) k = l;
    if (k < 0 || j < 0) throw std::logic_error("root_f: wall indices not found");
    IntVec cv = negate(d.positive_coroots()[d.root_index(a)]);
    std::vector<AffWeylElt> movers;
    for (int l = 0; l <= p; ++l) {
        if (l < j) movers.push_back(aff_identity(d));
        else if (l < k) movers.push_back(affine_reflection(d, a, m));
        else movers.push_back(aff_translation(d, cv));
    }
    return recover(g, geo, movers);
}

std::optional<Gallery> root_e(const Gallery& g, int label) { return root_e(g, geometry(g), label); }
std::optional<Gallery> root_f(const Gallery& g, int label) { return root_f(g, geometry(g), label); }

bool is_positively_folded(const Gallery& g) {
    auto geo = geometry(g);
    const RootDatum& d = *g.type->datum;
    for (int j = 1; j <= g.type->p(); ++j) {
        if (g.folds[j - 1]) continue;
        if (phi_plus_aff_points(d, geo.facets[j], geo.alcoves[j]).empty()) return false;
    }
    return true;
}

int dimension(const Gallery& g) {
    auto geo = geometry(g);
    const RootDatum& d = *g.type->datum;
    std::size_t n = 0;
    for (int j = 0; j <= g.type->p(); ++j) n += phi_plus_aff_points(d, geo.facets[j], geo.alcoves[j]).size();
    return static_cast<int>(n);
}

bool is_LS(const Gallery& g) {
    if (!is_positively_folded(g)) return false;
    int top = dimension(gamma_lambda(g.type));
    return top - dimension(g) == height(sub(g.type->lambda, weight(g)));
}

std::vector<std::vector<std::optional<Gallery>>> expand_frontier(const std::vector<Gallery>& frontier, Exec exec) {
    std::vector<std::vector<std::optional<Gallery>>> out(frontier.size());
    if (frontier.empty()) return out;
    const int r = frontier.front().type->datum->rank();
    const long n = static_cast<long>(frontier.size());
    auto work = [&](long idx) {
        auto geo = geometry(frontier[idx]);
        out[idx].resize(r);
        for (int c = 0; c < r; ++c) out[idx][c] = root_f(frontier[idx], geo, c + 1);
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
        for (long idx = 0; idx < n; ++idx) work(idx);
    } else {
        for (long idx = 0; idx < n; ++idx) work(idx);
    }
    return out;
}

LSCrystal enumerate_LS(const TypePtr& t, std::size_t node_cap, Exec exec) {
    const RootDatum& d = *t->datum;
    const int r = d.rank();
    LSCrystal out;
    out.type = t;
    std::map<std::vector<int>, int> ids;
    std::vector<std::pair<int, std::pair<int, std::vector<int>>>> f_edges;

    std::vector<Gallery> layer{gamma_lambda(t)};
    ids[layer[0].key()] = 0;
    out.galleries.push_back(layer[0]);
    while (!layer.empty()) {
        auto images = expand_frontier(layer, exec);
        std::map<std::vector<int>, Gallery> next;
        for (std::size_t n = 0; n < layer.size(); ++n) {
            int from = ids.at(layer[n].key());
            for (int c = 0; c < r; ++c) {
                if (!images[n][c]) continue;
                auto k = images[n][c]->key();
                f_edges.push_back({from, {c, k}});
                next.emplace(k, *images[n][c]);
            }
        }
        layer.clear();
        for (auto& [k, gal] : next) {
            if (ids.count(k)) throw std::logic_error("enumerate_LS: gallery reached at two depths");
            ids[k] = static_cast<int>(out.galleries.size());
            out.galleries.push_back(gal);
            layer.push_back(gal);
            if (out.galleries.size() > node_cap) throw std::runtime_error("enumerate_LS: node cap exceeded");
        }
    }

    const std::size_t N = out.galleries.size();
    CrystalGraph& G = out.graph;
    G.datum = t->datum;
    G.f.assign(N, std::vector<int>(r, -1));
    G.e.assign(N, std::vector<int>(r, -1));
    G.eps.assign(N, std::vector<int>(r, 0));
    G.phi.assign(N, std::vector<int>(r, 0));
    for (const auto& [from, ck] : f_edges) G.f[from][ck.first] = ids.at(ck.second);

    int top = dimension(out.galleries[0]);
    for (std::size_t n = 0; n < N; ++n) {
        const Gallery& gal = out.galleries[n];
        auto geo = geometry(gal);
        G.weight.push_back(geo.weight);
        G.keys.push_back(gal.key());
        int dim = dimension(gal);
        G.dims.push_back(dim);
        if (!is_positively_folded(gal) || top - dim != height(sub(t->lambda, geo.weight)))
            throw std::logic_error("enumerate_LS: generated gallery is not LS");
        for (int c = 0; c < r; ++c) {
            std::int64_t m = min_wall_level(gal, geo, c + 1);
            Rational nu = d.pair(simple_root(r, c + 1), geo.weight);
            G.eps[n][c] = static_cast<int>(-m);
            G.phi[n][c] = static_cast<int>(nu.numerator() - m);
            auto e = root_e(gal, geo, c + 1);
            if (e) {
                auto it = ids.find(e->key());
                if (it == ids.end()) throw std::logic_error("enumerate_LS: LS set not closed under e");
                G.e[n][c] = it->second;
            }
        }
    }
    return out;
}

}  // namespace mvcrys
