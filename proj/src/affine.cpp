#include "mvcrys/affine.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace mvcrys {

namespace {

IntVec coroot_of(const RootDatum& d, const IntVec& alpha) {
    bool neg = is_negative(alpha);
    int idx = d.root_index(neg ? negate(alpha) : alpha);
    if (idx < 0) throw std::invalid_argument("not a root: " + to_string(alpha));
    const IntVec& cv = d.positive_coroots()[idx];
    return neg ? negate(cv) : cv;
}

WeylElt finite_reflection(const RootDatum& d, const IntVec& alpha) {
    const int r = d.rank();
    IntVec cv = coroot_of(d, alpha);
    IntVec f = d.functional_of(alpha);
    WeylElt s = d.identity();
    // beta -> beta - <beta, alpha^vee> alpha
    IntVec g(r, 0);
    for (int k = 0; k < r; ++k)
        for (int b = 0; b < r; ++b) g[k] += d.cartan(k, b) * cv[b];
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k) {
            s.coweight_mat[i * r + k] -= cv[i] * f[k];
            s.root_mat[i * r + k] -= alpha[i] * g[k];
        }
    return s;
}

}  // namespace

AffWeylElt aff_identity(const RootDatum& d) { return {IntVec(d.rank(), 0), d.identity()}; }

AffWeylElt aff_translation(const RootDatum& d, const IntVec& coroot) { return {coroot, d.identity()}; }

AffWeylElt aff_finite(const RootDatum& d, const WeylElt& w) { return {IntVec(d.rank(), 0), w}; }

AffWeylElt aff_compose(const RootDatum& d, const AffWeylElt& g, const AffWeylElt& h) {
    IntVec t = d.act_int(g.w, h.translation);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] += g.translation[i];
    return {t, d.compose(g.w, h.w)};
}

AffWeylElt aff_inverse(const RootDatum& d, const AffWeylElt& g) {
    WeylElt wi = d.inverse(g.w);
    return {negate(d.act_int(wi, g.translation)), wi};
}

RatVec aff_act_point(const RootDatum& d, const AffWeylElt& g, const RatVec& x) {
    RatVec y = d.act(g.w, x);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += g.translation[i];
    return y;
}

AffineRoot aff_act_root(const RootDatum& d, const AffWeylElt& g, const AffineRoot& beta) {
    IntVec a = d.act_root(g.w, beta.root);
    Rational shift = d.pair(a, to_rat(g.translation));
    return {a, beta.level + shift.numerator()};
}

AffWeylElt affine_reflection(const RootDatum& d, const IntVec& alpha, std::int64_t n) {
    IntVec cv = coroot_of(d, alpha);
    for (auto& c : cv) c *= n;
    return {cv, finite_reflection(d, alpha)};
}

AffWeylElt simple_affine_reflection(const RootDatum& d, int label) {
    if (label == 0) return affine_reflection(d, d.highest_root().c, 1);
    if (label < 0 || label > d.rank()) throw std::invalid_argument("affine label out of range");
    return aff_finite(d, d.simple_reflection(label - 1));
}

AffWeylElt aff_from_word(const RootDatum& d, const Word& word) {
    AffWeylElt g = aff_identity(d);
    for (int i : word) g = aff_compose(d, g, simple_affine_reflection(d, i));
    return g;
}

std::vector<RatVec> alcove_vertices(const RootDatum& d) {
    std::vector<RatVec> v{RatVec(d.rank(), Rational(0))};
    for (int k = 0; k < d.rank(); ++k) v.push_back(scale(d.fundamental_coweight(k), Rational(1, d.marks()[k])));
    return v;
}

int aff_length(const RootDatum& d, const AffWeylElt& g) {
    RatVec y = aff_act_point(d, g, d.alcove_barycenter());
    std::int64_t l = 0;
    for (const auto& a : d.positive_roots()) {
        auto fl = floor_div(d.pair(a.c, y));
        l += fl < 0 ? -fl : fl;
    }
    return static_cast<int>(l);
}

RatVec face_sample_point(const RootDatum& d, const Face& f) {
    auto verts = alcove_vertices(d);
    RatVec s(d.rank(), Rational(0));
    std::int64_t count = 0;
    for (int k = 0; k <= d.rank(); ++k) {
        if (std::find(f.type.begin(), f.type.end(), k) != f.type.end()) continue;
        s = add(s, verts[k]);
        ++count;
    }
    if (count == 0) throw std::invalid_argument("face type must be a proper subset of the affine nodes");
    return aff_act_point(d, f.mover, scale(s, Rational(1, count)));
}

WallRelation wall_relation(const RootDatum& d, const Face& f, const AffineRoot& beta) {
    Rational v = d.pair(beta.root, face_sample_point(d, f));
    if (v == Rational(beta.level)) return WallRelation::in_wall;
    return v < Rational(beta.level) ? WallRelation::strictly_minus : WallRelation::strictly_plus;
}

std::vector<AffineRoot> phi_plus_aff_points(const RootDatum& d, const RatVec& inner, const RatVec& outer) {
    std::vector<AffineRoot> out;
    for (const auto& a : d.positive_roots()) {
        Rational v = d.pair(a.c, inner);
        if (!is_integral(v)) continue;
        if (d.pair(a.c, outer) > v) out.push_back({a.c, v.numerator()});
    }
    return out;
}

std::vector<AffineRoot> phi_plus_aff(const RootDatum& d, const Face& inner, const Face& outer) {
    return phi_plus_aff_points(d, face_sample_point(d, inner), face_sample_point(d, outer));
}

std::vector<int> vertex_type(const RootDatum& d, const RatVec& x) {
    std::vector<int> type;
    if (d.pair(d.highest_root().c, x) == 1) type.push_back(0);
    for (int i = 0; i < d.rank(); ++i) {
        IntVec e(d.rank(), 0);
        e[i] = 1;
        if (d.pair(e, x) == 0) type.push_back(i + 1);
    }
    return type;
}

Fundamentalized fundamentalize(const RootDatum& d, const RatVec& lambda) {
    RatVec x = lambda;
    AffWeylElt fold = aff_identity(d);
    // Each reflection strictly decreases the number of walls between x and A_fund.
    std::int64_t guard = 1;
    for (const auto& a : d.positive_roots()) {
        Rational v = d.pair(a.c, lambda);
        guard += floor_div(v < 0 ? -v : v) + 2;
    }
    for (std::int64_t step = 0;; ++step) {
        if (step > guard) throw std::logic_error("fundamentalize did not terminate");
        int violated = -1;
        for (int i = 0; i < d.rank() && violated < 0; ++i) {
            IntVec e(d.rank(), 0);
            e[i] = 1;
            if (d.pair(e, x) < 0) violated = i + 1;
        }
        if (violated < 0 && d.pair(d.highest_root().c, x) > 1) violated = 0;
        if (violated < 0) break;
        AffWeylElt s = simple_affine_reflection(d, violated);
        x = aff_act_point(d, s, x);
        fold = aff_compose(d, s, fold);
    }
    return {x, vertex_type(d, x), aff_inverse(d, fold)};
}

AffWeylElt minimal_element(const RootDatum& d, const RatVec& lambda) {
    if (!d.is_dominant(lambda)) throw std::invalid_argument("minimal_word: lambda is not dominant");
    auto fz = fundamentalize(d, lambda);
    AffWeylElt g = fz.unfold;
    int len = aff_length(d, g);
    for (bool moved = true; moved;) {
        moved = false;
        for (int j : fz.type) {
            AffWeylElt h = aff_compose(d, g, simple_affine_reflection(d, j));
            int lh = aff_length(d, h);
            if (lh < len) {
                g = h;
                len = lh;
                moved = true;
            }
        }
    }
    if (aff_act_point(d, g, fz.point) != lambda) throw std::logic_error("minimal element does not map lambda_fund to lambda");
    return g;
}

Word minimal_word(const RootDatum& d, const RatVec& lambda, const std::vector<int>& priority) {
    std::vector<int> order = priority;
    for (int i = 0; i <= d.rank(); ++i)
        if (std::find(order.begin(), order.end(), i) == order.end()) order.push_back(i);
    AffWeylElt g = minimal_element(d, lambda);
    int len = aff_length(d, g);
    const int total = len;
    Word rev;
    while (len > 0) {
        bool found = false;
        for (int i : order) {
            AffWeylElt h = aff_compose(d, g, simple_affine_reflection(d, i));
            int lh = aff_length(d, h);
            if (lh < len) {
                rev.push_back(i);
                g = h;
                len = lh;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("no right descent for a nontrivial element");
    }
    std::reverse(rev.begin(), rev.end());
    if (static_cast<int>(rev.size()) != total) throw std::logic_error("word length differs from inversion count");
    return rev;
}

std::vector<Word> affine_reduced_words(const RootDatum& d, const AffWeylElt& g) {
    std::vector<Word> out;
    std::function<void(const AffWeylElt&, int, Word&)> rec = [&](const AffWeylElt& h, int len, Word& suffix) {
        if (len == 0) {
            out.emplace_back(suffix.rbegin(), suffix.rend());
            return;
        }
        for (int i = 0; i <= d.rank(); ++i) {
            AffWeylElt k = aff_compose(d, h, simple_affine_reflection(d, i));
            if (aff_length(d, k) < len) {
                suffix.push_back(i);
                rec(k, len - 1, suffix);
                suffix.pop_back();
            }
        }
    };
    Word suffix;
    rec(g, aff_length(d, g), suffix);
    std::sort(out.begin(), out.end());
    return out;
}

int parabolic_dimension(const RootDatum& d, const RatVec& lambda) {
    int n = 0;
    for (const auto& a : d.positive_roots())
        if (d.pair(a.c, lambda) == 0) ++n;
    return n;
}

GalleryType build_gamma_lambda(DatumPtr dp, const RatVec& lambda, const Word& word) {
    const RootDatum& d = *dp;
    GalleryType t;
    t.datum = dp;
    t.lambda = lambda;
    auto fz = fundamentalize(d, lambda);
    t.lambda_fund = fz.point;
    t.lambda_type = fz.type;
    t.word = word;

    AffWeylElt g = aff_identity(d);
    t.prefixes.push_back(g);
    for (int i : word) {
        g = aff_compose(d, g, simple_affine_reflection(d, i));
        t.prefixes.push_back(g);
    }
    if (aff_length(d, g) != t.p()) throw std::invalid_argument("word is not reduced");
    if (aff_act_point(d, g, t.lambda_fund) != lambda) throw std::invalid_argument("word does not map lambda_fund to lambda");
    if (aff_length(d, minimal_element(d, lambda)) != t.p()) throw std::invalid_argument("word is not of minimal length");

    Face alcove{aff_identity(d), {}};
    t.base_alcove = face_sample_point(d, alcove);
    for (int i = 0; i <= d.rank(); ++i) t.base_facets.push_back(face_sample_point(d, Face{aff_identity(d), {i}}));
    for (int j = 0; j <= t.p(); ++j) {
        alcove.mover = t.prefixes[j];
        t.alcove_points.push_back(face_sample_point(d, alcove));
    }
    t.facet_points.push_back(RatVec(d.rank(), Rational(0)));
    for (int j = 1; j <= t.p(); ++j)
        t.facet_points.push_back(face_sample_point(d, Face{t.prefixes[j - 1], {word[j - 1]}}));
    t.facet_points.push_back(lambda);
    for (const auto& x : t.alcove_points)
        if (!d.is_dominant(x)) throw std::logic_error("gamma_lambda leaves the dominant chamber");
    for (const auto& x : t.facet_points)
        if (!d.is_dominant(x)) throw std::logic_error("gamma_lambda leaves the dominant chamber");
    return t;
}

GalleryType build_gamma_lambda(DatumPtr d, const RatVec& lambda) {
    return build_gamma_lambda(d, lambda, minimal_word(*d, lambda));
}

}  // namespace mvcrys
