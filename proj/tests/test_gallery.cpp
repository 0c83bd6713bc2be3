#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mvcrys/acceptance.hpp"
#include "mvcrys/export.hpp"
#include "mvcrys/gallery.hpp"

#include <set>

using namespace mvcrys;

namespace {

DatumPtr a(int r) { return RootDatum::build(Series::A, r); }

IntVec simple_coroot(int r, int label) {
    IntVec e(r, 0);
    e[label - 1] = 1;
    return e;
}

}  // namespace

TEST_CASE("A1, lambda = alpha^vee: three galleries with weights 1, 0, -1") {
    auto cr = enumerate_LS(make_type(a(1), RatVec{Rational(1)}));
    REQUIRE(cr.galleries.size() == 3);
    std::multiset<RatVec> weights;
    for (const auto& g : cr.galleries) weights.insert(weight(g));
    CHECK(weights == std::multiset<RatVec>{{Rational(-1)}, {Rational(0)}, {Rational(1)}});
    CHECK(weight(gamma_lambda(cr.type)) == RatVec{Rational(1)});
}

TEST_CASE("A2 theta: eight galleries, two of weight zero") {
    auto cr = enumerate_LS(make_type(a(2), RatVec{Rational(1), Rational(1)}));
    REQUIRE(cr.galleries.size() == 8);
    int zero = 0;
    for (const auto& g : cr.galleries) zero += weight(g) == RatVec{Rational(0), Rational(0)};
    CHECK(zero == 2);
    CHECK(dimension(gamma_lambda(cr.type)) == 3 + 1);
}

TEST_CASE("root operators invert each other and shift the weight by a coroot") {
    for (const auto& e : desk_suite()) {
        auto cr = enumerate_LS(make_type(e.datum, e.lambda));
        const int r = e.datum->rank();
        for (const auto& g : cr.galleries)
            for (int i = 1; i <= r; ++i) {
                auto m = crystal_maps(g, i);
                if (auto f = root_f(g, i)) {
                    CHECK(is_LS(*f));
                    CHECK(weight(*f) == sub(weight(g), to_rat(simple_coroot(r, i))));
                    auto back = root_e(*f, i);
                    REQUIRE(back.has_value());
                    CHECK(*back == g);
                } else {
                    CHECK(m.phi == 0);
                }
                if (!root_e(g, i)) CHECK(m.eps == 0);
                // phi - eps = <alpha_i, weight>
                CHECK(Rational(m.phi - m.eps) == e.datum->pair(simple_coroot(r, i), weight(g)));
            }
    }
}

TEST_CASE("serial and parallel enumeration agree node for node") {
    for (const auto& e : desk_suite()) {
        auto t = make_type(e.datum, e.lambda);
        auto s = enumerate_LS(t, 1000000, Exec::serial);
        auto p = enumerate_LS(t, 1000000, Exec::parallel);
        REQUIRE(s.galleries.size() == p.galleries.size());
        for (std::size_t k = 0; k < s.galleries.size(); ++k) CHECK(s.galleries[k] == p.galleries[k]);
        CHECK(s.graph.f == p.graph.f);
    }
}

TEST_CASE("the node cap is enforced") {
    CHECK_THROWS(enumerate_LS(make_type(a(2), RatVec{Rational(2), Rational(2)}), 5));
}

TEST_CASE("keys and JSON round-trip") {
    auto cr = enumerate_LS(make_type(RootDatum::build(Series::B, 2), RatVec{Rational(2), Rational(2)}));
    for (const auto& g : cr.galleries) {
        CHECK(gallery_from_key(cr.type, g.key()) == g);
        CHECK(gallery_from_json(cr.type, gallery_to_json(g)) == g);
    }
}

TEST_CASE("galleries are positively folded") {
    auto cr = enumerate_LS(make_type(RootDatum::build(Series::G, 2), RatVec{Rational(2), Rational(3)}));
    CHECK(cr.galleries.size() == 14);
    for (const auto& g : cr.galleries) CHECK(is_positively_folded(g));
}

TEST_CASE("frontier expansion matches single steps") {
    auto cr = enumerate_LS(make_type(a(3), RatVec{Rational(1), Rational(1), Rational(1)}));
    for (Exec ex : {Exec::serial, Exec::parallel}) {
        auto images = expand_frontier(cr.galleries, ex);
        REQUIRE(images.size() == cr.galleries.size());
        for (std::size_t k = 0; k < images.size(); ++k)
            for (int c = 0; c < 3; ++c) {
                auto f = root_f(cr.galleries[k], c + 1);
                CHECK(images[k][c].has_value() == f.has_value());
                if (f) CHECK(*images[k][c] == *f);
            }
    }
}
