#pragma once

#include "mvcrys/affine.hpp"
#include "mvcrys/crystal.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace mvcrys {

using TypePtr = std::shared_ptr<const GalleryType>;

struct Gallery {
    TypePtr type;
    int delta0 = 0;             // index into the finite Weyl group
    std::vector<char> folds;    // folds[j-1] = 1 when delta_j = s_{i_j}

    std::vector<int> key() const;
    bool operator==(const Gallery& o) const { return delta0 == o.delta0 && folds == o.folds; }
};

struct GalleryGeometry {
    std::vector<AffWeylElt> prefixes;  // delta_0 ... delta_j
    std::vector<RatVec> alcoves;       // Delta_j, j = 0..p
    std::vector<RatVec> facets;        // Delta'_j, j = 0..p+1
    RatVec weight;
};

TypePtr make_type(DatumPtr d, const RatVec& lambda, const Word& word);
TypePtr make_type(DatumPtr d, const RatVec& lambda);

Gallery gamma_lambda(const TypePtr& t);
Gallery gallery_from_key(const TypePtr& t, const std::vector<int>& key);
GalleryGeometry geometry(const Gallery& g);

RatVec weight(const Gallery& g);
// label is 1..r
std::int64_t min_wall_level(const Gallery& g, int label);
std::int64_t min_wall_level(const Gallery& g, const GalleryGeometry& geo, int label);

struct CrystalMaps {
    RatVec weight;
    std::int64_t eps = 0;
    std::int64_t phi = 0;
};
CrystalMaps crystal_maps(const Gallery& g, int label);

std::optional<Gallery> root_e(const Gallery& g, int label);
std::optional<Gallery> root_f(const Gallery& g, int label);
std::optional<Gallery> root_e(const Gallery& g, const GalleryGeometry& geo, int label);
std::optional<Gallery> root_f(const Gallery& g, const GalleryGeometry& geo, int label);

bool is_positively_folded(const Gallery& g);
int dimension(const Gallery& g);
bool is_LS(const Gallery& g);

struct LSCrystal {
    TypePtr type;
    std::vector<Gallery> galleries;
    CrystalGraph graph;
};

enum class Exec { serial, parallel };

// Applies every root_f to every gallery of a frontier; result[n][c] is the image under
// f_{c+1} of frontier[n], if defined.
std::vector<std::vector<std::optional<Gallery>>> expand_frontier(const std::vector<Gallery>& frontier, Exec exec);

LSCrystal enumerate_LS(const TypePtr& t, std::size_t node_cap = 1000000, Exec exec = Exec::parallel);

}  // namespace mvcrys
