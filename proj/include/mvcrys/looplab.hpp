#pragma once

#include "mvcrys/gallery.hpp"
#include "mvcrys/laurent.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace mvcrys {

// Matrices live in SL_n; coweights are integer vectors in simple-coroot coordinates
// (length n-1), roots are in simple-root coordinates and may be negative.

LaurentSeries series_pow(const LaurentSeries& a, int m);

LaurentMatrix gen_x(int n, const IntVec& root, const LaurentSeries& p);
LaurentMatrix gen_x_simple(int n, int label, const LaurentSeries& p);
LaurentMatrix gen_y(int n, int label, const LaurentSeries& p);
// a^lambda
LaurentMatrix gen_torus(int n, const LaurentSeries& a, const IntVec& coweight);
LaurentMatrix gen_t(int n, const IntVec& coweight);
LaurentMatrix gen_sbar(int n, int label);
LaurentMatrix gen_wbar(int n, const Word& word);
// conj(word) sbar_label conj(word)^-1 for the root alpha = w(alpha_label)
LaurentMatrix gen_sbar_root(int n, const IntVec& root);
LaurentMatrix y_product(int n, const Word& word, const std::vector<LaurentSeries>& p);

IntVec coroot_of(const IntVec& root);  // type A: alpha^vee has the same coordinates
std::int64_t pair_a(const IntVec& root, const IntVec& coweight);  // <alpha, lambda> in type A

IntVec mu_plus(const LaurentMatrix& g);
IntVec mu_minus(const LaurentMatrix& g);
// Parameter of the G(O)-orbit, returned antidominant.
IntVec orbit_coweight(const LaurentMatrix& g);
// [u] == [v] in G(K)/G(O)
bool coset_equal(const LaurentMatrix& u, const LaurentMatrix& v);

// Random draws: nonzero integers with |x| <= 10^4, seeds derived per (seed, trial, attempt).
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t trial, std::uint64_t attempt = 0);
    std::int64_t nonzero();
    // a t^m (1 + b1 t + b2 t^2)
    LaurentSeries unit_times_tpow(int m);
    LaurentSeries monomial(int m);
    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

template <class T, class F>
std::vector<T> run_trials(int trials, Exec exec, F&& fn) {
    std::vector<T> out(trials);
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (int k = 0; k < trials; ++k) out[k] = fn(k);
    } else {
        for (int k = 0; k < trials; ++k) out[k] = fn(k);
    }
    return out;
}

struct CheckReport {
    std::string name;
    int trials = 0;
    int failures = 0;
    std::string first_failure;
    bool ok() const { return trials > 0 && failures == 0; }
};

// a^lambda x_alpha(b) = x_alpha(a^<alpha,lambda> b) a^lambda, the rank-one commutation rule,
// x_a(a) x_-a(-1/a) x_a(a) = a^alpha^vee sbar_alpha, and the two folding identities used
// when raising a gallery across a wall.
std::vector<CheckReport> generator_identity_checks(int n, int trials, std::uint64_t seed, Exec exec = Exec::parallel);

// SL_2: [x_-a(q^-1 t^-e) t^nu] == [x_a(q t^e) t^lambda], lambda = nu + k alpha^vee, e = <alpha, lambda+nu>/2.
bool rank_one_identity_check(std::int64_t nu, std::int64_t lambda, const LaurentSeries& q);
CheckReport rank_one_random_checks(int trials, std::uint64_t seed, Exec exec = Exec::parallel);

struct PointReport {
    IntVec mu_plus;
    IntVec mu_minus;
    IntVec orbit;
    std::string error;
};

struct YtildeReport {
    IntVec c;
    IntVec c_tilde;
    IntVec expected;  // sum_j c_j alpha_{i_j}^vee
    std::vector<PointReport> trials;
};

YtildeReport sample_ytilde(const DatumPtr& d, const Word& word, const IntVec& c, int trials, std::uint64_t seed,
                           Exec exec = Exec::parallel);

struct CellReport {
    IntVec weight;
    std::vector<LaurentMatrix> points;
    std::vector<PointReport> trials;
};

LaurentMatrix cell_point(const Gallery& g, TrialRng& rng);
CellReport sample_cell(const Gallery& g, int trials, std::uint64_t seed, Exec exec = Exec::parallel);

// Left multiplication by y_label(p) with val(p) = -k + eps.
std::vector<LaurentMatrix> crystal_op_sample(const std::vector<LaurentMatrix>& points, int label, int k, int eps,
                                             std::uint64_t seed);
PointReport point_report(const LaurentMatrix& g);

struct GaussFactors {
    LaurentMatrix upper;
    LaurentMatrix lower;  // unitriangular
};
// g = upper * lower
GaussFactors gauss_decompose(const LaurentMatrix& g);

// Recovers p with g = y_{i_1}(p_1) ... y_{i_N}(p_N) for a reduced word.
std::vector<LaurentSeries> factor_y(const LaurentMatrix& g, const Word& word);

LaurentMatrix counterexample_matrix();
LaurentMatrix counterexample_display();

// z_word(q): the unitriangular lower factor of y_word(q) wbar^-1.
LaurentMatrix z_map(int n, const Word& word, const std::vector<LaurentSeries>& q);
// q = z^-1(y(p)) and p = y^-1(z(q)) for a reduced word of w0.
std::vector<LaurentSeries> f_map(int n, const Word& word, const std::vector<LaurentSeries>& p);
std::vector<LaurentSeries> g_map(int n, const Word& word, const std::vector<LaurentSeries>& q);

using SeriesMap = std::function<std::vector<LaurentSeries>(const std::vector<LaurentSeries>&)>;

struct TropResult {
    bool ok = false;
    IntVec value;
    int attempts = 0;
    std::string failure;
};
// Valuations of map(p) for p_j = a_j t^{m_j}(1 + ...); all trials of an attempt must agree.
TropResult trop_eval(const SeriesMap& map, const IntVec& m, int trials, std::uint64_t seed, int max_attempts = 5);

struct LusztigResult {
    bool ok = false;
    IntVec n;        // f^trop(c_tilde)
    IntVec back;     // g^trop(n)
    std::string failure;
};
LusztigResult lusztig_from_string(const DatumPtr& d, const Word& word, const IntVec& c_tilde, int trials,
                                  std::uint64_t seed);

struct MorierGenoudRow {
    int node = 0;
    IntVec c_tilde_f;   // from the f-string (lowering to the lowest node)
    IntVec c_tilde_e;   // from the e-string (raising to the highest node)
    LusztigResult lusztig;  // on c_tilde_e
    IntVec predicted;   // <alpha_{i_j}, -w0 lambda> + c_tilde_f_j
    bool ok = false;
};
MorierGenoudRow morier_genoud_check(const CrystalGraph& g, int node, const Word& word, const RatVec& lambda,
                                    int trials, std::uint64_t seed);

IntVec to_int_coweight(const RatVec& x);

}  // namespace mvcrys
