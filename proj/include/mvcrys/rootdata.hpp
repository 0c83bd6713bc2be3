#pragma once

#include "mvcrys/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace mvcrys {

enum class Series { A, B, C, D, G };

Series parse_series(const std::string& s);
char series_letter(Series s);

// Simple-root coordinates.
struct Root {
    IntVec c;
    bool operator==(const Root&) const = default;
    auto operator<=>(const Root&) const = default;
};

enum class CoweightBasis { coroot, fundamental };

// Default basis is the simple coroots; the fundamental-coweight basis is only
// accepted at the edges (parsing, display) and must be converted before pairing.
struct Coweight {
    RatVec c;
    CoweightBasis basis = CoweightBasis::coroot;
    bool operator==(const Coweight&) const = default;
};

// Matrices are row-major rank x rank. coweight_mat has w(alpha_j^vee) as column j,
// root_mat has w(alpha_j) as column j.
struct WeylElt {
    int rank = 0;
    IntVec coweight_mat;
    IntVec root_mat;
    bool operator==(const WeylElt& o) const { return coweight_mat == o.coweight_mat; }
};

using Word = std::vector<int>;  // labels 1..r, and 0 for the affine node

class RootDatum {
public:
    static std::shared_ptr<const RootDatum> build(Series series, int rank);

    Series series() const { return series_; }
    int rank() const { return rank_; }
    std::string name() const;

    // <alpha_i, alpha_j^vee>, indices 0-based.
    std::int64_t cartan(int i, int j) const { return cartan_[i * rank_ + j]; }

    const std::vector<Root>& positive_roots() const { return pos_roots_; }
    const std::vector<IntVec>& positive_coroots() const { return pos_coroots_; }
    const Root& highest_root() const { return theta_; }
    const IntVec& highest_coroot() const { return theta_vee_; }
    const IntVec& marks() const { return theta_.c; }

    Rational pairing(const Root& a, const Coweight& v) const;
    // Fast path: root in simple-root coords, point in coroot coords.
    Rational pair(const IntVec& root, const RatVec& x) const;
    // Row vector r with <root, x> = r . x
    const IntVec& functional(std::size_t pos_root_index) const { return functionals_[pos_root_index]; }
    IntVec functional_of(const IntVec& root) const;

    const RatVec& fundamental_coweight(int i) const { return fund_coweights_[i]; }
    RatVec rho_vee() const;
    // Barycenter of the fundamental alcove {x dominant, <theta, x> <= 1}.
    const RatVec& alcove_barycenter() const { return barycenter_; }
    Coweight to_coroot_basis(const Coweight& v) const;

    WeylElt identity() const;
    const WeylElt& simple_reflection(int i) const { return simple_[i]; }
    WeylElt compose(const WeylElt& a, const WeylElt& b) const;
    WeylElt inverse(const WeylElt& w) const;
    WeylElt from_word(const Word& word) const;
    RatVec act(const WeylElt& w, const RatVec& x) const;
    IntVec act_int(const WeylElt& w, const IntVec& x) const;
    IntVec act_root(const WeylElt& w, const IntVec& root) const;
    Coweight weyl_act(const WeylElt& w, const Coweight& v) const;
    Root weyl_act(const WeylElt& w, const Root& a) const;

    int length(const WeylElt& w) const;
    const WeylElt& longest_element() const { return group_[longest_index_]; }
    const std::vector<WeylElt>& weyl_group() const { return group_; }
    int index_of(const WeylElt& w) const;

    std::vector<Word> reduced_words(const WeylElt& w) const;
    Word reduced_word(const WeylElt& w) const;  // lexicographically first

    bool is_dominant(const RatVec& x) const;
    RatVec dominant_conjugate(const RatVec& x) const;
    int root_index(const IntVec& root) const;  // index into positive_roots, -1 if absent

private:
    RootDatum() = default;
    void build_roots();
    void build_group();

    Series series_ = Series::A;
    int rank_ = 0;
    IntVec cartan_;
    std::vector<Root> pos_roots_;
    std::vector<IntVec> pos_coroots_;
    std::vector<IntVec> functionals_;
    std::map<IntVec, int> root_lookup_;
    Root theta_;
    IntVec theta_vee_;
    std::vector<RatVec> fund_coweights_;
    RatVec barycenter_;
    std::vector<WeylElt> simple_;
    std::vector<WeylElt> group_;
    std::vector<int> lengths_;
    std::map<IntVec, int> group_lookup_;
    int longest_index_ = 0;
};

using DatumPtr = std::shared_ptr<const RootDatum>;

bool is_negative(const IntVec& root);
IntVec negate(const IntVec& v);

// Sum of coroot coordinates; throws if x is not in the coroot lattice.
std::int64_t height(const RatVec& x);
// mu <= lambda iff lambda - mu is a nonnegative integer combination of simple coroots.
bool dominance_leq(const RatVec& mu, const RatVec& lambda);

RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const RatVec& a, const Rational& s);

}  // namespace mvcrys
