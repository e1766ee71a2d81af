#pragma once

#include "isf/graph.hpp"
#include "isf/symfunc.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace isf {

/// Color assignment kappa: [n] -> [n].
using Coloring = std::vector<int>;

/// Number of edges {i,j}, i < j, with kappa(i) < kappa(j).
int asc(const Coloring& kappa, const Graph& g);

/// Chromatic quasisymmetric function from the definition: sum over proper
/// colorings with n colors of q^{asc} x_kappa, read off as monomial
/// coefficients.
MonomialSym csf_oracle(const Graph& g);

/// Unicellular LLT polynomial from the definition: the same sum over all
/// colorings.
MonomialSym llt_oracle(const Graph& g);

/// Vertical-strip LLT by the recursion peeling S, dividing by (q-1) exactly
/// at every step. Propagates InexactDivision.
MonomialSym llt_vertical_oracle(const HessenbergFunction& m, const std::set<int>& S);

/// Number of proper colorings with colors in [k].
std::int64_t chromatic_count(const Graph& g, int k);

/// Orientation sum: over all 2^{|E|} orientations, q^{#left edges} on
/// e_{lambda(o)}, where lambda(o) collects the fiber sizes of the lowest
/// reaching vertex along left-oriented edges.
SymFunc orientation_sum(const Graph& g);

}  // namespace isf
