#pragma once

#include "isf/graph.hpp"
#include "isf/symfunc.hpp"

#include <map>
#include <set>
#include <vector>

namespace isf {

/// Permutation of [n] in one-line notation: word()[i-1] = sigma(i).
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> word);

    int n() const { return static_cast<int>(word_.size()); }
    int operator()(int i) const { return word_[i - 1]; }
    const std::vector<int>& word() const { return word_; }

    /// Cycles, each starting at its least element, ordered by least element.
    std::vector<std::vector<int>> cycles() const;
    Partition cycle_partition() const;

    bool leq(const HessenbergFunction& m) const;  // sigma(i) <= m(i) pointwise

    bool operator==(const Perm& o) const { return word_ == o.word_; }

private:
    std::vector<int> word_;
};

/// Increasing spanning forest encoded by a parent map with parent(j) < j;
/// parent 0 marks a root. Roots are component minima by construction.
class IncreasingForest {
public:
    IncreasingForest() = default;
    explicit IncreasingForest(std::vector<int> parent);

    int n() const { return static_cast<int>(parent_.size()); }
    int parent(int j) const { return parent_[j - 1]; }
    const std::vector<int>& parents() const { return parent_; }

    /// Edges {parent(j), j}.
    std::vector<std::pair<int, int>> edges() const;
    /// Component index (0-based, ordered by increasing root) per vertex.
    std::vector<int> component_of() const;
    Partition component_partition() const;

    bool operator==(const IncreasingForest& o) const { return parent_ == o.parent_; }
    bool operator<(const IncreasingForest& o) const { return parent_ < o.parent_; }

private:
    std::vector<int> parent_;
};

struct ForestStats {
    std::vector<int> tree_weights;           // per component, by root order
    std::set<std::pair<int, int>> inversions;  // pairs {v, w}, v < w
    int g_inversions = 0;                    // inversions that are edges of g
    int total = 0;                           // g_inversions + sum of tree weights
};

/// Writes sigma in cycle notation and drops the parentheses.
std::vector<int> forget_cycles(const Perm& sigma);

/// Number of pairs i < j <= m(i) with i after j in the word w.
int inv_m(const std::vector<int>& w, const HessenbergFunction& m);

/// wt_m(sigma) = inv_m(forget_cycles(sigma)).
int wt_perm(const Perm& sigma, const HessenbergFunction& m);

/// All sigma with sigma(i) <= m(i) for every i.
std::vector<Perm> enumerate_perms_leq(const HessenbergFunction& m);

/// All increasing spanning forests of g (parent maps along edges of g).
std::vector<IncreasingForest> enumerate_forests(const Graph& g);

/// Edge lengths, inversions and the total weight of F inside g.
/// Throws if F uses an edge outside g.
ForestStats forest_stats(const IncreasingForest& F, const Graph& g);

/// Per-cycle tree where each element attaches to the rightmost smaller
/// element preceding it in the cycle word.
IncreasingForest forest_from_permutation_simple(const Perm& sigma);

/// The weight-preserving map: per cycle, the unique parent choice matching
/// the m-inversion counts. Requires sigma <= m.
IncreasingForest forest_from_permutation(const Perm& sigma, const HessenbergFunction& m);

enum class YBasis { Rho, QE };

/// X_y(m) = sum_{sigma <= m} q^{wt_m(sigma)} y_{lambda(sigma)}.
/// For y = rho the result is a rho-basis SymFunc; for y = qe an e-basis
/// SymFunc with the (q-1)^{n - l(lambda)} factors folded in.
SymFunc X_of(const HessenbergFunction& m, YBasis y);

/// The coefficients c_lambda(m) of X in the y basis.
std::map<Partition, QPoly, PartitionOrder> c_coefficients(const HessenbergFunction& m);

/// X(K_n) by the recursion X(K_n) = sum_i X(K_{n-i}) y_i prod_j [j]_q.
SymFunc X_complete_recursion(int n, YBasis y);

/// X(K_n) by the subset-sum closed form over I subset [n-1].
SymFunc X_complete_closed(int n, YBasis y);

/// q-Stirling number of the first kind from x(x-[1]_q)...(x-[n-1]_q).
QPoly q_stirling(int n, int k);

/// sum_{sigma <= m} q^{wt}; checked against prod_i (1 + [m(i)-i]_q).
QPoly sum_of_weights(const HessenbergFunction& m);

/// Vertical-strip recursion X_y(m,S) = X_y(m,S') - X_y(m',S'), computed both
/// by peeling S and by inclusion-exclusion over restrict(m, S'); throws if
/// the two disagree or S is invalid.
SymFunc X_vertical(const HessenbergFunction& m, const std::set<int>& S, YBasis y);

/// c_lambda(m, S) by inclusion-exclusion over subsets of S.
std::map<Partition, QPoly, PartitionOrder> c_coefficients_vertical(
    const HessenbergFunction& m, const std::set<int>& S);

/// Forests of G_m containing every edge {i, m(i)} for i in S, with their
/// partition tallies. Exploratory; no weight statistic is attached.
std::map<Partition, int, PartitionOrder> forest_tally_with_edges(
    const HessenbergFunction& m, const std::set<int>& S);

}  // namespace isf
