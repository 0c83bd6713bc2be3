#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mvcrys/rootdata.hpp"

using namespace mvcrys;

namespace {

struct Shape {
    Series s;
    int r;
    std::size_t roots;
    std::size_t order;
    std::size_t w0_words;
};

// Root counts and group orders are the classical ones; w0 word counts for A3, B2 and G2
// are 16, 2 and 2.
const Shape kShapes[] = {
    {Series::A, 1, 1, 2, 1},   {Series::A, 2, 3, 6, 2},  {Series::A, 3, 6, 24, 16},
    {Series::B, 2, 4, 8, 2},   {Series::G, 2, 6, 12, 2}, {Series::C, 3, 9, 48, 42},
};

}  // namespace

TEST_CASE("root systems have the classical sizes") {
    for (const auto& s : kShapes) {
        auto d = RootDatum::build(s.s, s.r);
        CAPTURE(d->name());
        CHECK(d->positive_roots().size() == s.roots);
        CHECK(d->weyl_group().size() == s.order);
        CHECK(d->length(d->longest_element()) == static_cast<int>(s.roots));
        CHECK(d->reduced_words(d->longest_element()).size() == s.w0_words);
    }
}

TEST_CASE("unsupported data are rejected") {
    CHECK_THROWS(RootDatum::build(Series::A, 0));
    CHECK_THROWS(RootDatum::build(Series::G, 3));
    CHECK(parse_series("B") == Series::B);
}

TEST_CASE("Cartan entries and highest roots") {
    auto b2 = RootDatum::build(Series::B, 2);
    CHECK(b2->cartan(0, 1) == -2);
    CHECK(b2->cartan(1, 0) == -1);
    auto g2 = RootDatum::build(Series::G, 2);
    CHECK(g2->cartan(0, 1) == -1);
    CHECK(g2->cartan(1, 0) == -3);
    CHECK(g2->highest_root().c == IntVec{3, 2});
    auto a3 = RootDatum::build(Series::A, 3);
    CHECK(a3->highest_root().c == IntVec{1, 1, 1});
    CHECK(a3->highest_coroot() == IntVec{1, 1, 1});
}

TEST_CASE("fundamental coweights are dual to the simple roots") {
    for (const auto& s : kShapes) {
        auto d = RootDatum::build(s.s, s.r);
        for (int i = 0; i < d->rank(); ++i)
            for (int j = 0; j < d->rank(); ++j) {
                IntVec a(d->rank(), 0);
                a[j] = 1;
                CHECK(d->pair(a, d->fundamental_coweight(i)) == Rational(i == j ? 1 : 0));
            }
    }
    auto a2 = RootDatum::build(Series::A, 2);
    CHECK(a2->fundamental_coweight(0) == RatVec{Rational(2, 3), Rational(1, 3)});
}

TEST_CASE("Weyl group laws") {
    for (const auto& s : kShapes) {
        auto d = RootDatum::build(s.s, s.r);
        CAPTURE(d->name());
        const RatVec x = d->rho_vee();
        for (const auto& w : d->weyl_group()) {
            CHECK(d->compose(w, d->inverse(w)) == d->identity());
            CHECK(d->from_word(d->reduced_word(w)) == w);
            CHECK(static_cast<int>(d->reduced_word(w).size()) == d->length(w));
            // pairings are W-invariant
            for (const auto& a : d->positive_roots())
                CHECK(d->pair(d->act_root(w, a.c), d->act(w, x)) == d->pair(a.c, x));
            CHECK(d->dominant_conjugate(d->act(w, x)) == x);
        }
        for (int i = 0; i < d->rank(); ++i)
            CHECK(d->compose(d->simple_reflection(i), d->simple_reflection(i)) == d->identity());
    }
}

TEST_CASE("dominance and height") {
    auto a2 = RootDatum::build(Series::A, 2);
    RatVec theta{Rational(1), Rational(1)};
    CHECK(height(theta) == 2);
    CHECK(dominance_leq(RatVec{Rational(0), Rational(0)}, theta));
    CHECK(dominance_leq(RatVec{Rational(-1), Rational(1)}, theta));
    CHECK_FALSE(dominance_leq(theta, RatVec{Rational(0), Rational(0)}));
    CHECK_FALSE(dominance_leq(a2->fundamental_coweight(0), theta));
    CHECK_THROWS(height(a2->fundamental_coweight(0)));
    CHECK(a2->is_dominant(theta));
    CHECK_FALSE(a2->is_dominant(RatVec{Rational(-1), Rational(1)}));
}

TEST_CASE("rational helpers") {
    CHECK(floor_div(Rational(-3, 2)) == -2);
    CHECK(floor_div(Rational(7, 2)) == 3);
    CHECK(to_string(Rational(-3, 2)) == "-3/2");
    CHECK(parse_rat_list("1/2,1,-3") == RatVec{Rational(1, 2), Rational(1), Rational(-3)});
    CHECK(parse_int_list("2,1,3") == IntVec{2, 1, 3});
    CHECK(Rational(1, 3) < Rational(1, 2));
}
