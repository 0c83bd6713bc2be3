#pragma once

#include "mvcrys/rootdata.hpp"

#include <vector>

namespace mvcrys {

struct AffineRoot {
    IntVec root;
    std::int64_t level = 0;
    bool operator==(const AffineRoot&) const = default;
    auto operator<=>(const AffineRoot&) const = default;
};

// x -> w(x) + translation
struct AffWeylElt {
    IntVec translation;
    WeylElt w;
    bool operator==(const AffWeylElt& o) const { return translation == o.translation && w == o.w; }
};

// The face mover(phi_type); type is a sorted proper subset of {0..r}.
struct Face {
    AffWeylElt mover;
    std::vector<int> type;
};

enum class WallRelation { in_wall, strictly_minus, strictly_plus };

AffWeylElt aff_identity(const RootDatum& d);
AffWeylElt aff_translation(const RootDatum& d, const IntVec& coroot);
AffWeylElt aff_finite(const RootDatum& d, const WeylElt& w);
AffWeylElt aff_compose(const RootDatum& d, const AffWeylElt& g, const AffWeylElt& h);
AffWeylElt aff_inverse(const RootDatum& d, const AffWeylElt& g);
RatVec aff_act_point(const RootDatum& d, const AffWeylElt& g, const RatVec& x);
AffineRoot aff_act_root(const RootDatum& d, const AffWeylElt& g, const AffineRoot& beta);

// Reflection of the coweight space in the wall H_{alpha,n}; alpha may be negative.
AffWeylElt affine_reflection(const RootDatum& d, const IntVec& alpha, std::int64_t n);
// Label 0 is the affine node (wall H_{theta,1}).
AffWeylElt simple_affine_reflection(const RootDatum& d, int label);
AffWeylElt aff_from_word(const RootDatum& d, const Word& word);

// Number of affine walls separating A_fund from g(A_fund).
int aff_length(const RootDatum& d, const AffWeylElt& g);

// Vertices of closure(A_fund): index 0 is the origin, index k is omega_k^vee / m_k.
std::vector<RatVec> alcove_vertices(const RootDatum& d);
RatVec face_sample_point(const RootDatum& d, const Face& f);
WallRelation wall_relation(const RootDatum& d, const Face& f, const AffineRoot& beta);
std::vector<AffineRoot> phi_plus_aff(const RootDatum& d, const Face& inner, const Face& outer);
// Same, on precomputed sample points.
std::vector<AffineRoot> phi_plus_aff_points(const RootDatum& d, const RatVec& inner, const RatVec& outer);

struct Fundamentalized {
    RatVec point;            // lambda_fund
    std::vector<int> type;   // walls of A_fund containing it
    AffWeylElt unfold;       // unfold(point) == lambda
};
Fundamentalized fundamentalize(const RootDatum& d, const RatVec& lambda);
std::vector<int> vertex_type(const RootDatum& d, const RatVec& x);

// Reduced word for the minimal w with w(lambda_fund) = lambda. Descents are peeled
// in the given priority order (labels), smallest label first when empty.
Word minimal_word(const RootDatum& d, const RatVec& lambda, const std::vector<int>& priority = {});
AffWeylElt minimal_element(const RootDatum& d, const RatVec& lambda);
std::vector<Word> affine_reduced_words(const RootDatum& d, const AffWeylElt& g);

struct GalleryType {
    DatumPtr datum;
    RatVec lambda;
    RatVec lambda_fund;
    std::vector<int> lambda_type;
    Word word;
    std::vector<AffWeylElt> prefixes;  // prefixes[j] = s_{i_1}...s_{i_j}, j = 0..p
    std::vector<RatVec> alcove_points;  // Gamma_j sample points
    std::vector<RatVec> facet_points;   // Gamma'_j, j = 0..p+1
    RatVec base_alcove;                 // sample point of A_fund
    std::vector<RatVec> base_facets;    // sample point of phi_{{i}}, i = 0..r

    int p() const { return static_cast<int>(word.size()); }
};

GalleryType build_gamma_lambda(DatumPtr d, const RatVec& lambda, const Word& word);
GalleryType build_gamma_lambda(DatumPtr d, const RatVec& lambda);

// |{alpha > 0 : <alpha, lambda> = 0}|
int parabolic_dimension(const RootDatum& d, const RatVec& lambda);

}  // namespace mvcrys
