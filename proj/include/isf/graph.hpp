#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace isf {

/// Non-decreasing m:[n] -> [n] with m(i) >= i. Values are 1-based; the
/// boundary value m(0) is taken to be 0 throughout.
class HessenbergFunction {
public:
    HessenbergFunction() = default;  // n = 0
    explicit HessenbergFunction(std::vector<int> values);

    int n() const { return static_cast<int>(values_.size()); }
    /// m(i) for i in [0, n]; m(0) = 0.
    int operator()(int i) const;
    const std::vector<int>& values() const { return values_; }

    bool operator==(const HessenbergFunction& o) const { return values_ == o.values_; }
    bool operator<(const HessenbergFunction& o) const { return values_ < o.values_; }

    /// "2,4,4,4"
    std::string to_string() const;
    static HessenbergFunction parse(const std::string& s);

private:
    std::vector<int> values_;
};

/// Simple undirected graph on vertices 1..n.
class Graph {
public:
    explicit Graph(int n) : n_(n) {}
    Graph(int n, const std::set<std::pair<int, int>>& edges);

    int n() const { return n_; }
    const std::set<std::pair<int, int>>& edges() const { return edges_; }
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_;
    std::set<std::pair<int, int>> edges_;  // pairs (u, v) with u < v
};

/// Edges {i, j} with i < j <= m(i).
Graph graph_of(const HessenbergFunction& m);

/// True iff g satisfies the interval condition: an edge {i,j} forces all
/// {i,k} and {k,j} for i < k < j. Equivalent to g = graph_of(m) for some m.
bool is_indifference(const Graph& g);

/// Reads the Hessenberg function back off an indifference graph.
std::optional<HessenbergFunction> hessenberg_of(const Graph& g);

/// True iff the identity ordering 1..n is a perfect elimination ordering:
/// each vertex's earlier neighbours form a clique.
bool natural_peo_valid(const Graph& g);

/// All Hessenberg functions on [n], lexicographic by value vector.
std::vector<HessenbergFunction> enumerate_hessenberg(int n);

/// Ordered union: the second function's graph is shifted past the first.
HessenbergFunction concat(const HessenbergFunction& m1, const HessenbergFunction& m2);

/// A triple (m0, m1, m2) at position i subject to the modular-law relation
/// (1+q) f(m1) = q f(m0) + f(m2).
struct ModularTriple {
    HessenbergFunction m0, m1, m2;
    int kind;  // 1 or 2
    int position;
};

/// All modular triples on [n]: condition (1) -- m1(i-1) < m1(i) < m1(i+1)
/// and m1(m1(i)) = m1(m1(i)+1) (or m1(i) = n), with m_k(i) = m1(i) - 1 + k;
/// condition (2) -- m1(i+1) = m1(i)+1 and m1^{-1}(i) empty, with
/// m0(i) = m0(i+1) = m1(i) and m2(i) = m2(i+1) = m1(i+1). Candidates whose
/// m0 or m2 is not a valid Hessenberg function are discarded.
std::vector<ModularTriple> modular_triples(int n);

/// Re-checks the defining constraints of a triple's kind.
bool validate_triple(const ModularTriple& t);

/// Decoration: positions i with m(i) > max(m(i-1), i).
struct Decoration {
    HessenbergFunction m;
    std::set<int> S;
};

/// The set of positions usable in a decoration of m.
std::set<int> decoration_positions(const HessenbergFunction& m);

/// All decorations of m (every subset of the valid-position set).
std::vector<Decoration> enumerate_decorations(const HessenbergFunction& m);

bool is_valid_decoration(const HessenbergFunction& m, const std::set<int>& S);

/// m with every position of S' decremented; S' must be part of a valid
/// decoration so the result stays Hessenberg.
HessenbergFunction restrict(const HessenbergFunction& m, const std::set<int>& S_prime);

}  // namespace isf
