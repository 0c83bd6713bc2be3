#pragma once

#include "mvcrys/rootdata.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mvcrys {

// Colors are 0-based here (color c is the simple root alpha_{c+1}); -1 marks an undefined arrow.
struct CrystalGraph {
    DatumPtr datum;
    std::vector<RatVec> weight;
    std::vector<std::vector<int>> f;
    std::vector<std::vector<int>> e;
    std::vector<std::vector<int>> eps;
    std::vector<std::vector<int>> phi;
    std::vector<std::vector<int>> keys;  // model-specific tuple, may be empty
    std::vector<int> dims;               // may be empty

    std::size_t size() const { return weight.size(); }
    int colors() const { return datum->rank(); }
};

using Character = std::map<RatVec, std::int64_t>;

std::vector<std::string> validate_axioms(const CrystalGraph& g);
Character character(const CrystalGraph& g);

// Freudenthal recursion for the irreducible module of highest weight lambda of the dual group.
Character expected_character(const RootDatum& d, const RatVec& lambda);
std::int64_t weyl_dimension(const RootDatum& d, const RatVec& lambda);

struct StringParam {
    Word word;
    IntVec c;
    IntVec c_tilde;
};

IntVec string_to_tilde(const RootDatum& d, const Word& word, const IntVec& c);
IntVec tilde_to_string(const RootDatum& d, const Word& word, const IntVec& c_tilde);

int lowest_node(const CrystalGraph& g);
int highest_node(const CrystalGraph& g);

// c_j = phi_{i_j} of the current node, then apply f^{c_j}; must end at the lowest node.
StringParam string_parameters(const CrystalGraph& g, int node, const Word& word);
// Same with epsilon and e; ends at the highest node.
IntVec e_string(const CrystalGraph& g, int node, const Word& word);

// Follow an e-word (labels) from the lowest node; -1 when some step is undefined.
int follow_e_word(const CrystalGraph& g, const Word& e_word);

struct StableString {
    StringParam param;
    int levels_used = 0;
};
// Evaluates the node reached by selector (an e-word from the lowest node) in B(lambda + k mu)
// for k = 0..max_levels-1 and returns the string once two consecutive levels agree.
StableString stable_string(DatumPtr d, const RatVec& lambda, const RatVec& mu, const Word& selector, const Word& word,
                           int max_levels = 8);

struct IsoResult {
    bool ok = false;
    std::vector<int> matching;  // node of g1 -> node of g2
    std::string failure;
};
IsoResult crystal_isomorphic(const CrystalGraph& g1, const CrystalGraph& g2);

}  // namespace mvcrys
