#include <catch2/catch_amalgamated.hpp>

#include "alliance/constructions.hpp"
#include "alliance/corpus.hpp"
#include "alliance/solvers.hpp"
#include "test_support.hpp"

using namespace alliance;
using fixtures::fig1_tree;
using fixtures::fig3_tree;
using fixtures::path_tree;
using fixtures::star_tree;

TEST_CASE("smaller bipartition side") {
    CHECK(smaller_side_offensive(fig1_tree()) == vertex_set::of(10, {1, 3, 6, 8}));
    CHECK(smaller_side_offensive(path_tree(2)) == vertex_set::of(2, {0})); // tie
    CHECK(smaller_side_offensive(star_tree(5)) == vertex_set::of(5, {0}));
    CHECK_THROWS_AS(smaller_side_offensive(path_tree(1)), degenerate_instance);
}

TEST_CASE("edge partition by set membership") {
    tree f = fig3_tree();
    auto parts = edge_partition(f, vertex_set::of(8, {0, 3, 4}));
    CHECK(parts.e_s == std::vector<edge>{{3, 4}});
    CHECK(parts.e_b == std::vector<edge>{{0, 1}, {2, 3}, {3, 5}, {4, 6}, {4, 7}});
    CHECK(parts.e_y == std::vector<edge>{{1, 2}});
    CHECK(parts.k == 3);
    CHECK(parts.n == 8);

    auto all = edge_partition(f, vertex_set(8).complement());
    CHECK(all.e_s.size() == 7);
    CHECK(all.e_b.empty());
    CHECK(all.e_y.empty());

    auto none = edge_partition(f, vertex_set(8));
    CHECK(none.e_y.size() == 7);
}

TEST_CASE("edge partition covers every edge exactly once") {
    std::mt19937_64 gen(41);
    for (int round = 0; round < 200; ++round) {
        int n = 2 + int(gen() % 30);
        tree t = random_tree(n, gen());
        vertex_set s(n);
        for (int v = 0; v < n; ++v)
            if (gen() & 1) s.add(v);
        auto parts = edge_partition(t, s);
        CHECK(parts.e_s.size() + parts.e_b.size() + parts.e_y.size() == size_t(n - 1));
    }
}

TEST_CASE("certificate integers on the sharp instance") {
    auto rep = defensive_certificate(fig3_tree(), vertex_set::of(8, {0, 3, 4}));
    CHECK(rep.ineq_degree.lhs == 5);      // 2*1 + 3
    CHECK(rep.ineq_degree.rhs == 5);      // |E_B|
    CHECK(rep.ineq_domination.lhs == 5);  // |E_B|
    CHECK(rep.ineq_domination.rhs == 5);  // n - k
    CHECK(rep.ineq_star.lhs == 2);        // 2*|E_Y|
    CHECK(rep.ineq_star.rhs == 2);        // 4k - n - 2, tight here
    CHECK(rep.all_hold);
}

TEST_CASE("certificate on trivial alliances") {
    auto full = defensive_certificate(path_tree(3), vertex_set(3).complement());
    CHECK(full.ineq_degree.lhs == 7);
    CHECK(full.ineq_degree.rhs == 0);
    CHECK(full.ineq_domination.lhs == 0);
    CHECK(full.ineq_domination.rhs == 0);
    CHECK(full.ineq_star.lhs == 0);
    CHECK(full.ineq_star.rhs == 7);
    CHECK(full.all_hold);

    auto single = defensive_certificate(path_tree(2), vertex_set::of(2, {0}));
    CHECK(single.ineq_degree.lhs == 1);
    CHECK(single.ineq_degree.rhs == 1);
    CHECK(single.ineq_domination.lhs == 1);
    CHECK(single.ineq_domination.rhs == 1);
    CHECK(single.ineq_star.lhs == 0);
    CHECK(single.ineq_star.rhs == 0);
    CHECK(single.all_hold);
}

TEST_CASE("certificate rejects sets that are not global defensive") {
    tree p4 = path_tree(4);
    CHECK_THROWS_MATCHES(defensive_certificate(p4, vertex_set::of(4, {0})),
                         not_global_defensive,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("not dominating")));
    // {1} dominates 0,1,2 but not 3; {1,3} dominates but 1 fails defensive
    CHECK_THROWS_MATCHES(defensive_certificate(path_tree(3), vertex_set::of(3, {1})),
                         not_global_defensive,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("defensive condition")));
}

TEST_CASE("minimum cover of the induced forest") {
    tree f = fig3_tree();
    CHECK(min_vertex_cover_forest(f, vertex_set::of(8, {1, 2, 5, 6, 7})) ==
          vertex_set::of(8, {2}));
    CHECK(min_vertex_cover_forest(f, vertex_set::of(8, {0, 5, 6})).empty());
    // induced path 1-2-3 inside a 5-path: the middle vertex covers both edges
    CHECK(min_vertex_cover_forest(path_tree(5), vertex_set::of(5, {1, 2, 3})) ==
          vertex_set::of(5, {2}));
    CHECK(min_vertex_cover_forest(path_tree(5), vertex_set(5)).empty());
}

TEST_CASE("cover greedy is exact against brute force") {
    std::mt19937_64 gen(43);
    for (int round = 0; round < 300; ++round) {
        int n = 2 + int(gen() % 11); // up to 12 vertices
        tree t = random_tree(n, gen());
        std::set<int> y_ref;
        vertex_set y(n);
        for (int v = 0; v < n; ++v)
            if (gen() & 1) {
                y.add(v);
                y_ref.insert(v);
            }
        vertex_set cover = min_vertex_cover_forest(t, y);
        // covers every induced edge
        for (auto [u, v] : t.edges)
            if (y.contains(u) && y.contains(v))
                CHECK((cover.contains(u) || cover.contains(v)));
        // subset of y, and minimum
        for (int v : cover.to_vector()) CHECK(y.contains(v));
        CHECK(cover.count() == oracle::min_cover_brute(t, y_ref));
    }
}

TEST_CASE("augmenting the sharp instance adds exactly vertex 2") {
    vertex_set grown = augment_to_offensive(fig3_tree(), vertex_set::of(8, {0, 3, 4}));
    CHECK(grown == vertex_set::of(8, {0, 2, 3, 4}));
    CHECK(is_global_offensive(fig3_tree(), grown));
}

TEST_CASE("augment edge cases") {
    tree p3 = path_tree(3);
    vertex_set all = vertex_set(3).complement();
    CHECK(augment_to_offensive(p3, all) == all);

    tree e = path_tree(2);
    CHECK(augment_to_offensive(e, vertex_set::of(2, {0})) == vertex_set::of(2, {0}));

    CHECK_THROWS_AS(augment_to_offensive(path_tree(1), vertex_set::of(1, {0})),
                    degenerate_instance);
    CHECK_THROWS_AS(augment_to_offensive(p3, vertex_set::of(3, {0})),
                    not_global_defensive);
}

TEST_CASE("construction properties over random trees") {
    std::mt19937_64 gen(47);
    for (int round = 0; round < 150; ++round) {
        int n = 2 + int(gen() % 39); // 2..40
        tree t = random_tree(n, gen());
        vertex_set side = smaller_side_offensive(t);
        CHECK(is_global_offensive(t, side));
        CHECK(side.count() <= n / 2);
    }
}

TEST_CASE("certificate and augmentation hold for solver-found alliances") {
    std::mt19937_64 gen(53);
    for (int round = 0; round < 60; ++round) {
        int n = 2 + int(gen() % 11); // 2..12
        tree t = random_tree(n, gen());
        vertex_set s = gamma_a(t).witness;
        auto rep = defensive_certificate(t, s);
        CHECK(rep.all_hold);
        vertex_set grown = augment_to_offensive(t, s);
        CHECK(is_global_offensive(t, grown));
        int added = grown.count() - s.count();
        CHECK(added <= int(rep.partition.e_y.size()));
        long long star_rhs = 4LL * rep.partition.k - n - 2;
        CHECK(2 * added <= std::max(0LL, star_rhs));
        for (int v : s.to_vector()) CHECK(grown.contains(v));
    }
}
