#include "isf/forest.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace isf {

Perm::Perm(std::vector<int> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size(), false);
    for (int v : word_) {
        if (v < 1 || v > n() || seen[v - 1])
            throw std::invalid_argument("not a permutation word");
        seen[v - 1] = true;
    }
}

std::vector<std::vector<int>> Perm::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> visited(word_.size(), false);
    for (int start = 1; start <= n(); ++start) {
        if (visited[start - 1]) continue;
        std::vector<int> cyc;
        int v = start;
        do {
            visited[v - 1] = true;
            cyc.push_back(v);
            v = word_[v - 1];
        } while (v != start);
        out.push_back(std::move(cyc));
    }
    return out;
}

Partition Perm::cycle_partition() const {
    std::vector<int> parts;
    for (const auto& c : cycles()) parts.push_back(static_cast<int>(c.size()));
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

bool Perm::leq(const HessenbergFunction& m) const {
    for (int i = 1; i <= n(); ++i)
        if (word_[i - 1] > m(i)) return false;
    return true;
}

IncreasingForest::IncreasingForest(std::vector<int> parent) : parent_(std::move(parent)) {
    for (int j = 1; j <= n(); ++j)
        if (parent_[j - 1] < 0 || parent_[j - 1] >= j)
            throw std::invalid_argument("parent map must satisfy parent(j) < j");
}

std::vector<std::pair<int, int>> IncreasingForest::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int j = 1; j <= n(); ++j)
        if (parent_[j - 1] != 0) out.emplace_back(parent_[j - 1], j);
    return out;
}

std::vector<int> IncreasingForest::component_of() const {
    std::vector<int> comp(n(), -1);
    int next = 0;
    for (int j = 1; j <= n(); ++j) {
        int p = parent_[j - 1];
        comp[j - 1] = (p == 0) ? next++ : comp[p - 1];
    }
    return comp;
}

Partition IncreasingForest::component_partition() const {
    auto comp = component_of();
    int k = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<int> sizes(k, 0);
    for (int c : comp) ++sizes[c];
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    return Partition(std::move(sizes));
}

std::vector<int> forget_cycles(const Perm& sigma) {
    std::vector<int> out;
    for (const auto& c : sigma.cycles()) out.insert(out.end(), c.begin(), c.end());
    return out;
}

int inv_m(const std::vector<int>& w, const HessenbergFunction& m) {
    int n = static_cast<int>(w.size());
    std::vector<int> pos(n + 1, 0);
    for (int idx = 0; idx < n; ++idx) pos[w[idx]] = idx;
    int count = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= m(i); ++j)
            if (pos[i] > pos[j]) ++count;
    return count;
}

int wt_perm(const Perm& sigma, const HessenbergFunction& m) {
    return inv_m(forget_cycles(sigma), m);
}

std::vector<Perm> enumerate_perms_leq(const HessenbergFunction& m) {
    int n = m.n();
    std::vector<Perm> out;
    std::vector<int> word(n, 0);
    std::vector<bool> used(n + 1, false);
    std::function<void(int)> rec = [&](int i) {
        if (i > n) {
            out.emplace_back(word);
            return;
        }
        for (int v = 1; v <= m(i); ++v) {
            if (used[v]) continue;
            used[v] = true;
            word[i - 1] = v;
            rec(i + 1);
            used[v] = false;
        }
    };
    rec(1);
    return out;
}

std::vector<IncreasingForest> enumerate_forests(const Graph& g) {
    int n = g.n();
    std::vector<IncreasingForest> out;
    std::vector<int> parent(n, 0);
    std::function<void(int)> rec = [&](int j) {
        if (j > n) {
            out.emplace_back(parent);
            return;
        }
        parent[j - 1] = 0;
        rec(j + 1);
        for (int i = 1; i < j; ++i) {
            if (!g.has_edge(i, j)) continue;
            parent[j - 1] = i;
            rec(j + 1);
        }
        parent[j - 1] = 0;
    };
    rec(1);
    return out;
}

ForestStats forest_stats(const IncreasingForest& F, const Graph& g) {
    if (F.n() != g.n()) throw std::invalid_argument("forest_stats: size mismatch");
    auto comp = F.component_of();
    int k = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    ForestStats s;
    s.tree_weights.assign(k, 0);
    for (auto [u, v] : F.edges()) {
        if (!g.has_edge(u, v))
            throw std::invalid_argument("forest edge not present in graph");
        // edge length counts same-tree vertices strictly between the endpoints
        int len = 0;
        for (int w = u + 1; w < v; ++w)
            if (comp[w - 1] == comp[v - 1]) ++len;
        s.tree_weights[comp[v - 1]] += len;
    }
    for (int v = 1; v <= F.n(); ++v)
        for (int w = v + 1; w <= F.n(); ++w)
            if (comp[v - 1] > comp[w - 1]) {
                s.inversions.insert({v, w});
                if (g.has_edge(v, w)) ++s.g_inversions;
            }
    s.total = s.g_inversions;
    for (int t : s.tree_weights) s.total += t;
    return s;
}

IncreasingForest forest_from_permutation_simple(const Perm& sigma) {
    std::vector<int> parent(sigma.n(), 0);
    for (const auto& cyc : sigma.cycles()) {
        for (std::size_t l = 1; l < cyc.size(); ++l) {
            for (std::size_t r = l; r-- > 0;) {
                if (cyc[r] < cyc[l]) {
                    parent[cyc[l] - 1] = cyc[r];
                    break;
                }
            }
        }
    }
    return IncreasingForest(std::move(parent));
}

IncreasingForest forest_from_permutation(const Perm& sigma, const HessenbergFunction& m) {
    if (!sigma.leq(m))
        throw std::invalid_argument("forest_from_permutation: sigma does not satisfy sigma <= m");
    std::vector<int> parent(sigma.n(), 0);
    for (const auto& cyc : sigma.cycles()) {
        int k = static_cast<int>(cyc.size());
        for (int l = 1; l < k; ++l) {
            int jl = cyc[l];
            // target = |{l' > l : j_{l'} < j_l <= m(j_{l'})}|   (1-based l')
            int target = 0;
            for (int lp = l + 1; lp < k; ++lp)
                if (cyc[lp] < jl && jl <= m(cyc[lp])) ++target;
            // smaller cycle elements in decreasing order; the candidate with
            // exactly `target` cycle elements strictly between it and j_l is
            // the parent
            std::vector<int> smaller;
            for (int x : cyc)
                if (x < jl) smaller.push_back(x);
            std::sort(smaller.begin(), smaller.end(), std::greater<int>());
            int found = 0, cnt = 0;
            for (int cand : smaller) {
                int between = 0;
                for (int x : cyc)
                    if (cand < x && x < jl) ++between;
                if (between == target) {
                    parent[jl - 1] = cand;
                    ++cnt;
                }
            }
            found = cnt;
            if (found != 1)
                throw std::logic_error("forest_from_permutation: parent not unique");
        }
    }
    return IncreasingForest(std::move(parent));
}

namespace {

SymFunc y_symfunc(int n, YBasis y,
                  const std::map<Partition, QPoly, PartitionOrder>& coeffs) {
    SymFunc out(n, y == YBasis::Rho ? Basis::Rho : Basis::E);
    QPoly qm1 = QPoly::variable() - QPoly(1);
    for (const auto& [lambda, c] : coeffs) {
        if (y == YBasis::Rho) {
            out.add_term(lambda, c);
        } else {
            out.add_term(lambda, c * qm1.pow(lambda.size() - lambda.length()));
        }
    }
    return out;
}

// y_lambda as a single SymFunc term with coefficient `coeff`.
SymFunc y_term(int n, YBasis y, const Partition& lambda, const QPoly& coeff) {
    std::map<Partition, QPoly, PartitionOrder> one;
    one.emplace(lambda, coeff);
    return y_symfunc(n, y, one);
}

}  // namespace

std::map<Partition, QPoly, PartitionOrder> c_coefficients(const HessenbergFunction& m) {
    std::map<Partition, QPoly, PartitionOrder> out;
    for (const auto& sigma : enumerate_perms_leq(m)) {
        int wt = wt_perm(sigma, m);
        out[sigma.cycle_partition()] += QPoly::monomial(wt);
    }
    for (const auto& [l, c] : out)
        if (!c.has_nonneg_integer_coeffs())
            throw std::logic_error("c_lambda must lie in N[q]");
    return out;
}

SymFunc X_of(const HessenbergFunction& m, YBasis y) {
    return y_symfunc(m.n(), y, c_coefficients(m));
}

SymFunc X_complete_recursion(int n, YBasis y) {
    Basis b = y == YBasis::Rho ? Basis::Rho : Basis::E;
    std::vector<SymFunc> X;
    SymFunc one(0, b);
    one.add_term(Partition(), QPoly(1));
    X.push_back(one);
    for (int k = 1; k <= n; ++k) {
        SymFunc acc(k, b);
        for (int i = 1; i <= k; ++i) {
            QPoly scale(1);
            for (int j = k - i + 1; j <= k - 1; ++j) scale *= q_integer(j);
            SymFunc yi = y_term(i, y, Partition({i}), QPoly(1));
            acc = acc + multiply(X[k - i], yi).scaled(scale);
        }
        X.push_back(std::move(acc));
    }
    return X[n];
}

SymFunc X_complete_closed(int n, YBasis y) {
    Basis b = y == YBasis::Rho ? Basis::Rho : Basis::E;
    SymFunc out(n, b);
    if (n == 0) {
        out.add_term(Partition(), QPoly(1));
        return out;
    }
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::set<int> I;
        QPoly prod(1);
        for (int j = 1; j <= n - 1; ++j)
            if (mask & (1u << (j - 1))) {
                I.insert(j);
                prod *= q_integer(j);
            }
        Partition lambda = lambda_of_subset(I, n);
        out = out + y_term(n, y, lambda, prod);
    }
    return out;
}

QPoly q_stirling(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("q_stirling: need 0 <= k <= n");
    // expand x (x - [1]_q) ... (x - [n-1]_q); coefficients of x^i
    std::vector<QPoly> coeffs{QPoly(1)};  // polynomial 1 in x
    for (int j = 0; j <= n - 1; ++j) {
        QPoly root = (j == 0) ? QPoly() : q_integer(j);
        std::vector<QPoly> next(coeffs.size() + 1);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] += coeffs[i];
            next[i] -= coeffs[i] * root;
        }
        coeffs = std::move(next);
    }
    QPoly c = k < static_cast<int>(coeffs.size()) ? coeffs[k] : QPoly();
    return (n - k) % 2 == 0 ? c : -c;
}

QPoly sum_of_weights(const HessenbergFunction& m) {
    QPoly total;
    for (const auto& sigma : enumerate_perms_leq(m))
        total += QPoly::monomial(wt_perm(sigma, m));
    QPoly product(1);
    for (int i = 1; i <= m.n(); ++i) {
        product *= QPoly(1) + q_integer(m(i) - i);
    }
    if (total != product)
        throw std::logic_error("sum_of_weights: enumeration disagrees with product formula");
    return total;
}

std::map<Partition, QPoly, PartitionOrder> c_coefficients_vertical(
    const HessenbergFunction& m, const std::set<int>& S) {
    std::map<Partition, QPoly, PartitionOrder> out;
    std::vector<int> elems(S.begin(), S.end());
    for (unsigned mask = 0; mask < (1u << elems.size()); ++mask) {
        std::set<int> sub;
        for (std::size_t b = 0; b < elems.size(); ++b)
            if (mask & (1u << b)) sub.insert(elems[b]);
        int sign = sub.size() % 2 == 0 ? 1 : -1;
        for (const auto& [l, c] : c_coefficients(restrict(m, sub)))
            out[l] += c.scaled(sign);
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

SymFunc X_vertical(const HessenbergFunction& m, const std::set<int>& S, YBasis y) {
    if (!is_valid_decoration(m, S))
        throw std::invalid_argument("X_vertical: S is not a valid decoration of m");
    // route 1: peel S recursively
    std::function<SymFunc(const HessenbergFunction&, std::set<int>)> rec =
        [&](const HessenbergFunction& mm, std::set<int> SS) -> SymFunc {
        if (SS.empty()) return X_of(mm, y);
        int i = *SS.begin();
        SS.erase(SS.begin());
        return rec(mm, SS) - rec(restrict(mm, {i}), SS);
    };
    SymFunc via_recursion = rec(m, S);
    // route 2: inclusion-exclusion on the coefficients
    SymFunc via_incl_excl = y_symfunc(m.n(), y, c_coefficients_vertical(m, S));
    if (!(via_recursion == via_incl_excl))
        throw std::logic_error("X_vertical: recursion and inclusion-exclusion disagree");
    return via_recursion;
}

std::map<Partition, int, PartitionOrder> forest_tally_with_edges(
    const HessenbergFunction& m, const std::set<int>& S) {
    std::map<Partition, int, PartitionOrder> tally;
    for (const auto& F : enumerate_forests(graph_of(m))) {
        bool ok = true;
        for (int i : S)
            if (F.parent(m(i)) != i) {
                ok = false;
                break;
            }
        if (ok) ++tally[F.component_partition()];
    }
    return tally;
}

}  // namespace isf
