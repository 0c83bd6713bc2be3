#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mvcrys/acceptance.hpp"
#include "mvcrys/trails.hpp"

#include <algorithm>

using namespace mvcrys;

TEST_CASE("wedge representations satisfy the sl_n relations") {
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k < n; ++k) {
            auto rep = build_wedge_rep(n, k);
            CAPTURE(n);
            CAPTURE(k);
            CHECK(check_commutators(rep).empty());
            // binomial(n, k)
            std::int64_t b = 1;
            for (int j = 1; j <= k; ++j) b = b * (n - k + j) / j;
            CHECK(rep.dim() == b);
        }
}

TEST_CASE("raising and lowering on Lambda^2 C^4") {
    auto rep = build_wedge_rep(4, 2);
    int v = rep.index.at({1, 3});
    auto up = apply_raise(rep, 2, SparseVec{{v, 1}});
    REQUIRE(up.size() == 1);
    CHECK(rep.basis[up.begin()->first] == std::vector<int>{1, 2});
    CHECK(apply_raise(rep, 1, SparseVec{{rep.index.at({1, 2}), 1}}).empty());
}

TEST_CASE("A2 word (1,2,1): c1 >= 0, c2 >= c3 >= 0") {
    auto sc = string_cone_inequalities(3, {1, 2, 1});
    std::vector<IntVec> want{{0, 0, 1}, {0, 1, -1}, {1, 0, 0}};
    CHECK(sc.rows == want);
}

TEST_CASE("A3 word (2,1,3,2,1,3): trail cone equals the listed relations") {
    auto sc = string_cone_inequalities(4, {2, 1, 3, 2, 1, 3});
    auto cmp = compare_cones(sc.rows, listed_a3_relations(), 6, -3, 3);
    CHECK(cmp.points == 117649);
    CHECK(cmp.mismatches == 0);
    // 740 from a direct count of the listed relations (tests/oracle/oracle.py)
    CHECK(cmp.inside_b == 740);
    CHECK(cmp.inside_a == 740);
    CHECK(in_string_cone({0, 0, 0, 0, 0, 0}, sc.rows));
    CHECK_FALSE(in_string_cone({0, 0, 0, 1, 1, 1}, sc.rows));
}

TEST_CASE("serial and parallel kernels agree") {
    auto s = string_cone_inequalities(4, {1, 2, 1, 3, 2, 1}, Exec::serial);
    auto p = string_cone_inequalities(4, {1, 2, 1, 3, 2, 1}, Exec::parallel);
    CHECK(s.rows == p.rows);
    CHECK(s.raw == p.raw);
    auto a = compare_cones(s.rows, listed_a3_relations(), 6, -2, 2, Exec::serial);
    auto b = compare_cones(s.rows, listed_a3_relations(), 6, -2, 2, Exec::parallel);
    CHECK(a.mismatches == b.mismatches);
    CHECK(a.inside_a == b.inside_a);
    CHECK(a.first_mismatch == b.first_mismatch);
}

TEST_CASE("every string of a suite crystal lies in the cone of its word") {
    for (const auto& e : desk_suite()) {
        if (e.datum->series() != Series::A) continue;
        auto g = enumerate_LS(make_type(e.datum, e.lambda)).graph;
        for (const auto& w : e.datum->reduced_words(e.datum->longest_element())) {
            auto rows = string_cone_inequalities(e.datum->rank() + 1, w).rows;
            for (std::size_t v = 0; v < g.size(); ++v)
                CHECK(in_string_cone(string_parameters(g, static_cast<int>(v), w).c, rows));
        }
    }
}

TEST_CASE("trails start and end at the right weights") {
    auto rep = build_wedge_rep(3, 1);
    const Word w{1, 2, 1};
    IntVec top = fundamental_weight_eps(3, 1);
    IntVec bottom = longest_weight_action(reflect_weight(top, 1));
    auto trails = enumerate_itrails(rep, top, bottom, w);
    REQUIRE_FALSE(trails.empty());
    for (const auto& t : trails) {
        CHECK(t.weights.front() == top);
        CHECK(t.weights.back() == bottom);
        CHECK(t.exponents.size() == w.size());
        CHECK(t.witness != 0);
    }
}
