#include "isf/forest.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace isf;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
HessenbergFunction H(std::vector<int> v) { return HessenbergFunction(std::move(v)); }
HessenbergFunction K(int n) { return H(std::vector<int>(n, n)); }

QPoly poly(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return QPoly(std::move(c));
}

std::set<std::pair<int, int>> edge_set(const IncreasingForest& F) {
    auto e = F.edges();
    return {e.begin(), e.end()};
}

}  // namespace

TEST_CASE("cycle notation with parentheses dropped") {
    CHECK(forget_cycles(Perm({1, 2, 3})) == std::vector<int>{1, 2, 3});
    CHECK(forget_cycles(Perm({6, 1, 7, 8, 9, 2, 5, 4, 3})) ==
          std::vector<int>{1, 6, 2, 3, 7, 5, 9, 4, 8});
    CHECK(forget_cycles(Perm({3, 1, 2})) == std::vector<int>{1, 3, 2});
}

TEST_CASE("m-inversions of a word") {
    CHECK(inv_m({1, 2, 3}, H({3, 3, 3})) == 0);
    CHECK(inv_m({2, 1}, H({2, 2})) == 1);
    CHECK(inv_m({2, 1}, H({1, 2})) == 0);
}

TEST_CASE("permutation weights") {
    CHECK(wt_perm(Perm({1, 2, 3}), H({3, 3, 3})) == 0);
    // the two 3-cycles of K_3 weigh 1 + q together
    QPoly sum;
    for (const auto& s : {Perm({2, 3, 1}), Perm({3, 1, 2})})
        sum += QPoly::monomial(wt_perm(s, K(3)));
    CHECK(sum == poly({1, 1}));
    for (const auto& s : enumerate_perms_leq(H({2, 3, 4, 4})))
        CHECK(wt_perm(s, H({2, 3, 4, 4})) == 0);
}

TEST_CASE("permutations below m") {
    CHECK(enumerate_perms_leq(H({1, 2, 3})).size() == 1);
    CHECK(enumerate_perms_leq(H({2, 3, 4, 4})).size() == 8);
    CHECK(enumerate_perms_leq(K(4)).size() == 24);
    CHECK(enumerate_perms_leq(H({})).size() == 1);
}

TEST_CASE("forest enumeration counts") {
    Graph g(4);  // chordal with natural PEO, not an indifference graph
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(1, 4);
    g.add_edge(2, 3);
    std::map<int, int> by_components;
    for (const auto& F : enumerate_forests(g))
        ++by_components[F.component_partition().length()];
    CHECK(by_components[1] == 2);
    CHECK(by_components[2] == 5);
    CHECK(enumerate_forests(Graph(5)).size() == 1);
    CHECK(enumerate_forests(graph_of(K(4))).size() == 24);
    CHECK(enumerate_forests(graph_of(K(5))).size() == 120);
}

TEST_CASE("forest statistics") {
    // inside K_9: trees on {1,2,4,6,8} and {3,5,7,9}
    IncreasingForest F({0, 1, 0, 2, 3, 1, 3, 4, 7});
    ForestStats st = forest_stats(F, graph_of(K(9)));
    CHECK(st.tree_weights == std::vector<int>{3, 1});
    CHECK(st.inversions == std::set<std::pair<int, int>>{
              {3, 4}, {3, 6}, {3, 8}, {5, 6}, {5, 8}, {7, 8}});
    CHECK(st.g_inversions == 6);
    CHECK(st.total == 10);

    // consecutive path: every edge has length 0
    IncreasingForest path({0, 1, 2, 3});
    CHECK(forest_stats(path, graph_of(K(4))).total == 0);

    // all forests of a path graph have weight 0
    for (const auto& Fp : enumerate_forests(graph_of(H({2, 3, 4, 4}))))
        CHECK(forest_stats(Fp, graph_of(H({2, 3, 4, 4}))).total == 0);

    CHECK_THROWS_AS(forest_stats(IncreasingForest({0, 1}), Graph(2)), std::exception);
}

TEST_CASE("per-cycle tree from rightmost smaller predecessor") {
    Perm sigma({6, 4, 7, 8, 3, 2, 9, 1, 5});  // cycles (16248)(3795)
    CHECK(edge_set(forest_from_permutation_simple(sigma)) ==
          std::set<std::pair<int, int>>{
              {1, 6}, {1, 2}, {2, 4}, {4, 8}, {3, 7}, {3, 5}, {7, 9}});
    CHECK(forest_from_permutation_simple(Perm({1, 2, 3})).edges().empty());
    // the n-cycle (1 2 ... n) maps to the consecutive path
    CHECK(forest_from_permutation_simple(Perm({2, 3, 4, 5, 1})) ==
          IncreasingForest({0, 1, 2, 3, 4}));
}

TEST_CASE("weight-preserving map to forests") {
    // cycle (13542): sigma(1)=3, sigma(3)=5, sigma(5)=4, sigma(4)=2, sigma(2)=1
    Perm sigma({3, 1, 5, 2, 4});
    HessenbergFunction m = H({3, 3, 5, 5, 5});
    CHECK(edge_set(forest_from_permutation(sigma, m)) ==
          std::set<std::pair<int, int>>{{1, 2}, {1, 3}, {3, 4}, {3, 5}});
    CHECK(forest_stats(forest_from_permutation(sigma, m), graph_of(m)).total ==
          wt_perm(sigma, m));
    CHECK(forest_from_permutation(Perm({1, 2}), H({2, 2})).edges().empty());
    CHECK_THROWS_AS(forest_from_permutation(Perm({2, 1}), H({1, 2})), std::exception);

    // bijection onto all forests of the complete graph, preserving weight
    for (int n = 1; n <= 5; ++n) {
        auto forests = enumerate_forests(graph_of(K(n)));
        std::set<IncreasingForest> image;
        for (const auto& s : enumerate_perms_leq(K(n))) {
            IncreasingForest F = forest_from_permutation(s, K(n));
            CHECK(image.insert(F).second);
            CHECK(forest_stats(F, graph_of(K(n))).total == wt_perm(s, K(n)));
            CHECK(F.component_partition() == s.cycle_partition());
        }
        CHECK(image.size() == forests.size());
    }
}

TEST_CASE("weighted forest sums of the worked examples") {
    SymFunc a = X_of(H({2, 3, 4, 4}), YBasis::Rho);
    CHECK(a.coeff(P({1, 1, 1, 1})) == QPoly(1));
    CHECK(a.coeff(P({2, 1, 1})) == QPoly(3));
    CHECK(a.coeff(P({2, 2})) == QPoly(1));
    CHECK(a.coeff(P({3, 1})) == QPoly(2));
    CHECK(a.coeff(P({4})) == QPoly(1));

    SymFunc b = X_of(H({2, 4, 4, 4}), YBasis::Rho);
    CHECK(b.coeff(P({1, 1, 1, 1})) == QPoly(1));
    CHECK(b.coeff(P({2, 1, 1})) == poly({3, 1}));
    CHECK(b.coeff(P({2, 2})) == QPoly(1));
    CHECK(b.coeff(P({3, 1})) == poly({2, 2}));
    CHECK(b.coeff(P({4})) == poly({1, 1}));

    SymFunc c = X_of(H({3, 4, 4, 5, 5}), YBasis::Rho);
    CHECK(c.coeff(P({1, 1, 1, 1, 1})) == QPoly(1));
    CHECK(c.coeff(P({2, 1, 1, 1})) == poly({4, 2}));
    CHECK(c.coeff(P({2, 2, 1})) == poly({3, 2}));
    CHECK(c.coeff(P({3, 1, 1})) == poly({3, 4, 1}));
    CHECK(c.coeff(P({3, 2})) == poly({2, 2}));
    CHECK(c.coeff(P({4, 1})) == poly({2, 4, 2}));
    CHECK(c.coeff(P({5})) == poly({1, 2, 1}));
}

TEST_CASE("forest-count coefficients") {
    auto cs = c_coefficients(H({2, 4, 4, 4}));
    CHECK(cs.at(P({4})) == poly({1, 1}));
    auto id = c_coefficients(H({1, 2, 3}));
    CHECK(id.size() == 1);
    CHECK(id.at(P({1, 1, 1})) == QPoly(1));
    CHECK(c_coefficients(H({3, 4, 4, 5, 5})).at(P({5})) == poly({1, 2, 1}));
}

TEST_CASE("complete graphs by recursion and closed form") {
    for (YBasis y : {YBasis::Rho, YBasis::QE}) {
        SymFunc x0 = X_complete_recursion(0, y);
        CHECK(x0.coeff(P({})) == QPoly(1));
        SymFunc x1 = X_complete_recursion(1, y);
        CHECK(x1.coeff(P({1})) == QPoly(1));
        for (int n = 0; n <= 6; ++n) {
            CHECK(X_complete_recursion(n, y) == X_complete_closed(n, y));
            CHECK(X_complete_recursion(n, y) == X_of(K(n), y));
        }
    }
    SymFunc x2 = X_complete_closed(2, YBasis::Rho);
    CHECK(x2.coeff(P({1, 1})) == QPoly(1));
    CHECK(x2.coeff(P({2})) == QPoly(1));
    CHECK(X_complete_closed(4, YBasis::Rho).coeff(P({4})) == q_factorial(3));
}

TEST_CASE("q-Stirling numbers") {
    CHECK(q_stirling(4, 4) == QPoly(1));
    CHECK(q_stirling(2, 1) == QPoly(1));
    CHECK(q_stirling(3, 2) == poly({2, 1}));
    CHECK_THROWS_AS(q_stirling(2, 3), std::exception);
}

TEST_CASE("weight generating function product formula") {
    CHECK(sum_of_weights(H({1, 2, 3})) == QPoly(1));
    CHECK(sum_of_weights(H({2, 3, 4, 4})) == QPoly(8));
    for (int n = 1; n <= 5; ++n) {
        QPoly expected(1);
        for (int j = 1; j <= n - 1; ++j) expected *= QPoly(1) + q_integer(j);
        CHECK(sum_of_weights(K(n)) == expected);
    }
}

TEST_CASE("vertical strips") {
    CHECK(X_vertical(H({2, 2}), {}, YBasis::Rho) == X_of(H({2, 2}), YBasis::Rho));
    CHECK(X_vertical(H({2, 2}), {1}, YBasis::Rho) ==
          X_of(H({2, 2}), YBasis::Rho) - X_of(H({1, 2}), YBasis::Rho));
    CHECK_THROWS_AS(X_vertical(H({1, 2}), {1}, YBasis::Rho), std::exception);

    // inclusion-exclusion coefficients at the forest level, small case
    auto cs = c_coefficients_vertical(H({2, 2}), {1});
    CHECK(cs.at(P({2})) == QPoly(1));
    CHECK(cs.count(P({1, 1})) == 0);

    auto tally = forest_tally_with_edges(H({2, 2}), {1});
    CHECK(tally.size() == 1);
    CHECK(tally.at(P({2})) == 1);
}
