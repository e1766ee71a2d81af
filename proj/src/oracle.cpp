#include "isf/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace isf {

int asc(const Coloring& kappa, const Graph& g) {
    int count = 0;
    for (const auto& [i, j] : g.edges())
        if (kappa[i - 1] < kappa[j - 1]) ++count;
    return count;
}

namespace {

bool is_proper(const Coloring& kappa, const Graph& g) {
    for (const auto& [i, j] : g.edges())
        if (kappa[i - 1] == kappa[j - 1]) return false;
    return true;
}

// Accumulates q^{asc} x_kappa over colorings with n colors, reading the
// m_lambda coefficient off the colorings whose color-usage vector is weakly
// decreasing (the coefficient of the monomial x1^{l1} x2^{l2} ...).
MonomialSym coloring_sum(const Graph& g, bool proper_only) {
    int n = g.n();
    MonomialSym out(n, std::max(n, 1));
    if (n == 0) {
        out.add_term(Partition(), QPoly(1));
        return out;
    }
    // tally ascent counts per partition with integer counters, then build
    // the polynomials once
    std::map<Partition, std::vector<long long>, PartitionOrder> tally;
    Coloring kappa(n, 1);
    std::vector<int> usage(n + 1, 0);
    std::function<void(int)> rec = [&](int v) {
        if (v > n) {
            // accept only weakly decreasing usage vectors
            for (int c = 2; c <= n; ++c)
                if (usage[c] > usage[c - 1]) return;
            if (proper_only && !is_proper(kappa, g)) return;
            std::vector<int> parts;
            for (int c = 1; c <= n; ++c)
                if (usage[c] > 0) parts.push_back(usage[c]);
            auto& counts = tally[Partition(std::move(parts))];
            int a = asc(kappa, g);
            if (static_cast<int>(counts.size()) <= a) counts.resize(a + 1, 0);
            ++counts[a];
            return;
        }
        for (int c = 1; c <= n; ++c) {
            kappa[v - 1] = c;
            ++usage[c];
            rec(v + 1);
            --usage[c];
        }
    };
    rec(1);
    for (const auto& [lambda, counts] : tally) {
        std::vector<Rational> coeffs(counts.begin(), counts.end());
        out.add_term(lambda, QPoly(std::move(coeffs)));
    }
    return out;
}

}  // namespace

MonomialSym csf_oracle(const Graph& g) { return coloring_sum(g, true); }

MonomialSym llt_oracle(const Graph& g) { return coloring_sum(g, false); }

MonomialSym llt_vertical_oracle(const HessenbergFunction& m, const std::set<int>& S) {
    if (!is_valid_decoration(m, S))
        throw std::invalid_argument("llt_vertical_oracle: invalid decoration");
    if (S.empty()) return llt_oracle(graph_of(m));
    std::set<int> rest(S);
    int i = *rest.begin();
    rest.erase(rest.begin());
    MonomialSym a = llt_vertical_oracle(m, rest);
    MonomialSym b = llt_vertical_oracle(restrict(m, {i}), rest);
    QPoly qm1 = QPoly::variable() - QPoly(1);
    MonomialSym out(a.degree(), a.nvars());
    for (const auto& [l, c] : a.terms()) out.add_term(l, c);
    for (const auto& [l, c] : b.terms()) out.add_term(l, -c);
    return out.map_coeffs([&](const QPoly& c) { return exact_divide(c, qm1); });
}

std::int64_t chromatic_count(const Graph& g, int k) {
    int n = g.n();
    std::int64_t count = 0;
    Coloring kappa(n, 1);
    std::function<void(int)> rec = [&](int v) {
        if (v > n) {
            ++count;
            return;
        }
        for (int c = 1; c <= k; ++c) {
            kappa[v - 1] = c;
            bool ok = true;
            for (int u = 1; u < v; ++u)
                if (kappa[u - 1] == c && g.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (ok) rec(v + 1);
        }
    };
    rec(1);
    return count;
}

SymFunc orientation_sum(const Graph& g) {
    int n = g.n();
    std::vector<std::pair<int, int>> edges(g.edges().begin(), g.edges().end());
    SymFunc out(n, Basis::E);
    std::size_t m = edges.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        // bit set = edge {u,v} (u<v) oriented to the left, i.e. v -> u
        int left = 0;
        std::vector<std::vector<int>> down(n + 1);  // left-edge adjacency v -> u
        for (std::size_t e = 0; e < m; ++e)
            if (mask & (std::size_t{1} << e)) {
                ++left;
                down[edges[e].second].push_back(edges[e].first);
            }
        // lowest reaching vertex along left-oriented edges
        std::vector<int> lrv(n + 1, 0);
        std::function<int(int)> reach = [&](int v) -> int {
            if (lrv[v] != 0) return lrv[v];
            lrv[v] = v;  // cycle-free: edges strictly decrease
            int best = v;
            for (int u : down[v]) best = std::min(best, reach(u));
            return lrv[v] = best;
        };
        std::vector<int> fiber(n + 1, 0);
        for (int v = 1; v <= n; ++v) ++fiber[reach(v)];
        std::vector<int> parts;
        for (int i = 1; i <= n; ++i)
            if (fiber[i] > 0) parts.push_back(fiber[i]);
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        out.add_term(Partition(std::move(parts)), QPoly::monomial(left));
    }
    return out;
}

}  // namespace isf
