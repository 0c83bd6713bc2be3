#pragma once

#include "mvcrys/gallery.hpp"

#include <map>
#include <vector>

namespace mvcrys {

// Lambda^k C^n for SL_n. Basis vectors are sorted k-subsets of {1..n}; weights are
// 0/1 vectors in epsilon coordinates.
struct WedgeRep {
    int n = 0;
    int k = 0;
    std::vector<std::vector<int>> basis;
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> raise;  // raise[i-1][b] = E_i(b) or -1
    std::vector<std::vector<int>> lower;  // lower[i-1][b] = F_i(b) or -1
    std::vector<IntVec> weights;

    int dim() const { return static_cast<int>(basis.size()); }
};

using SparseVec = std::map<int, std::int64_t>;

WedgeRep build_wedge_rep(int n, int k);
SparseVec apply_raise(const WedgeRep& rep, int label, const SparseVec& v);
SparseVec apply_lower(const WedgeRep& rep, int label, const SparseVec& v);
// [E_i, F_j] = delta_ij H_i on every basis vector; returns violations.
std::vector<std::string> check_commutators(const WedgeRep& rep);

// s_label acting on an epsilon-coordinate weight
IntVec reflect_weight(const IntVec& eps, int label);
IntVec fundamental_weight_eps(int n, int i);
IntVec longest_weight_action(const IntVec& eps);

struct ITrail {
    std::vector<IntVec> weights;  // gamma_0 .. gamma_N
    IntVec exponents;             // n_1 .. n_N
    IntVec d;
    std::int64_t witness = 0;     // nonzero coefficient of the operator on V_delta
};

std::vector<ITrail> enumerate_itrails(const WedgeRep& rep, const IntVec& gamma, const IntVec& delta, const Word& word);

struct StringCone {
    Word word;
    std::vector<IntVec> raw;     // one row per trail, in enumeration order
    std::vector<IntVec> rows;    // deduplicated, sorted
    std::vector<std::vector<ITrail>> trails;  // per i
};

StringCone string_cone_inequalities(int n, const Word& word, Exec exec = Exec::parallel);
bool in_string_cone(const IntVec& c, const std::vector<IntVec>& rows);

// The relations c1>=0, c2>=c6>=0, c3>=c5>=0, c2+c3>=c4>=c5+c6 for A3 and word (2,1,3,2,1,3).
std::vector<IntVec> listed_a3_relations();

struct ConeComparison {
    std::int64_t points = 0;
    std::int64_t inside_a = 0;
    std::int64_t inside_b = 0;
    std::int64_t mismatches = 0;
    IntVec first_mismatch;
};
// Compares the solution sets of two inequality systems on the box [lo, hi]^dim.
ConeComparison compare_cones(const std::vector<IntVec>& a, const std::vector<IntVec>& b, int dim, int lo, int hi,
                             Exec exec = Exec::parallel);

}  // namespace mvcrys
