#include "isf/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace isf {

namespace {

bool valid_hessenberg_values(const std::vector<int>& v) {
    int n = static_cast<int>(v.size());
    for (int i = 0; i < n; ++i) {
        if (v[i] < i + 1 || v[i] > n) return false;
        if (i > 0 && v[i] < v[i - 1]) return false;
    }
    return true;
}

}  // namespace

HessenbergFunction::HessenbergFunction(std::vector<int> values) : values_(std::move(values)) {
    if (!valid_hessenberg_values(values_))
        throw std::invalid_argument("not a valid Hessenberg function");
}

int HessenbergFunction::operator()(int i) const {
    if (i == 0) return 0;
    if (i < 1 || i > n()) throw std::out_of_range("HessenbergFunction index");
    return values_[i - 1];
}

std::string HessenbergFunction::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < n(); ++i) {
        if (i) os << ",";
        os << values_[i];
    }
    return os.str();
}

HessenbergFunction HessenbergFunction::parse(const std::string& s) {
    std::vector<int> vals;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty value in Hessenberg function");
        vals.push_back(std::stoi(tok));
    }
    return HessenbergFunction(std::move(vals));
}

Graph::Graph(int n, const std::set<std::pair<int, int>>& edges) : n_(n) {
    for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
    if (u == v || u < 1 || v < 1 || u > n_ || v > n_)
        throw std::invalid_argument("invalid edge");
    edges_.emplace(std::min(u, v), std::max(u, v));
}

bool Graph::has_edge(int u, int v) const {
    return edges_.count({std::min(u, v), std::max(u, v)}) > 0;
}

Graph graph_of(const HessenbergFunction& m) {
    Graph g(m.n());
    for (int i = 1; i <= m.n(); ++i)
        for (int j = i + 1; j <= m(i); ++j) g.add_edge(i, j);
    return g;
}

bool is_indifference(const Graph& g) {
    for (const auto& [i, j] : g.edges())
        for (int k = i + 1; k < j; ++k)
            if (!g.has_edge(i, k) || !g.has_edge(k, j)) return false;
    return true;
}

std::optional<HessenbergFunction> hessenberg_of(const Graph& g) {
    if (!is_indifference(g)) return std::nullopt;
    std::vector<int> vals(g.n());
    for (int i = 1; i <= g.n(); ++i) {
        int top = i;
        for (int j = i + 1; j <= g.n(); ++j)
            if (g.has_edge(i, j)) top = std::max(top, j);
        vals[i - 1] = top;
    }
    // interval condition makes this non-decreasing; the constructor re-checks
    return HessenbergFunction(std::move(vals));
}

bool natural_peo_valid(const Graph& g) {
    for (int j = 1; j <= g.n(); ++j) {
        std::vector<int> earlier;
        for (int i = 1; i < j; ++i)
            if (g.has_edge(i, j)) earlier.push_back(i);
        for (std::size_t a = 0; a < earlier.size(); ++a)
            for (std::size_t b = a + 1; b < earlier.size(); ++b)
                if (!g.has_edge(earlier[a], earlier[b])) return false;
    }
    return true;
}

std::vector<HessenbergFunction> enumerate_hessenberg(int n) {
    std::vector<HessenbergFunction> out;
    std::vector<int> vals(n);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            out.emplace_back(vals);
            return;
        }
        int lo = std::max(i + 1, i > 0 ? vals[i - 1] : 1);
        for (int v = lo; v <= n; ++v) {
            vals[i] = v;
            rec(i + 1);
        }
    };
    if (n == 0)
        out.emplace_back();
    else
        rec(0);
    return out;
}

HessenbergFunction concat(const HessenbergFunction& m1, const HessenbergFunction& m2) {
    std::vector<int> vals(m1.values());
    for (int v : m2.values()) vals.push_back(m1.n() + v);
    return HessenbergFunction(std::move(vals));
}

bool validate_triple(const ModularTriple& t) {
    int n = t.m1.n();
    int i = t.position;
    if (i < 1 || i > n - 1) return false;
    const auto& m1 = t.m1;
    if (t.kind == 1) {
        if (!(m1(i - 1) < m1(i) && m1(i) < m1(i + 1))) return false;
        bool clique_ok = m1(i) == n ||
                         (m1(i) + 1 <= n && m1(m1(i)) == m1(m1(i) + 1));
        if (!clique_ok) return false;
        for (int j = 1; j <= n; ++j) {
            int expect0 = (j == i) ? m1(i) - 1 : m1(j);
            int expect2 = (j == i) ? m1(i) + 1 : m1(j);
            if (t.m0(j) != expect0 || t.m2(j) != expect2) return false;
        }
        return true;
    }
    if (t.kind == 2) {
        if (m1(i + 1) != m1(i) + 1) return false;
        for (int j = 1; j <= n; ++j)
            if (m1(j) == i) return false;  // m1^{-1}(i) must be empty
        for (int j = 1; j <= n; ++j) {
            int expect0 = (j == i || j == i + 1) ? m1(i) : m1(j);
            int expect2 = (j == i || j == i + 1) ? m1(i + 1) : m1(j);
            if (t.m0(j) != expect0 || t.m2(j) != expect2) return false;
        }
        return true;
    }
    return false;
}

std::vector<ModularTriple> modular_triples(int n) {
    std::vector<ModularTriple> out;
    for (const auto& m1 : enumerate_hessenberg(n)) {
        for (int i = 1; i <= n - 1; ++i) {
            // condition (1)
            if (m1(i - 1) < m1(i) && m1(i) < m1(i + 1) &&
                (m1(i) == n || m1(m1(i)) == m1(m1(i) + 1))) {
                std::vector<int> v0(m1.values()), v2(m1.values());
                v0[i - 1] -= 1;
                v2[i - 1] += 1;
                if (valid_hessenberg_values(v0) && valid_hessenberg_values(v2)) {
                    ModularTriple t{HessenbergFunction(v0), m1, HessenbergFunction(v2), 1, i};
                    out.push_back(std::move(t));
                }
            }
            // condition (2)
            if (m1(i + 1) == m1(i) + 1) {
                bool preimage_empty = true;
                for (int j = 1; j <= n; ++j)
                    if (m1(j) == i) {
                        preimage_empty = false;
                        break;
                    }
                if (preimage_empty) {
                    std::vector<int> v0(m1.values()), v2(m1.values());
                    v0[i - 1] = v0[i] = m1(i);
                    v2[i - 1] = v2[i] = m1(i + 1);
                    if (valid_hessenberg_values(v0) && valid_hessenberg_values(v2)) {
                        ModularTriple t{HessenbergFunction(v0), m1, HessenbergFunction(v2),
                                        2, i};
                        out.push_back(std::move(t));
                    }
                }
            }
        }
    }
    return out;
}

std::set<int> decoration_positions(const HessenbergFunction& m) {
    std::set<int> out;
    for (int i = 1; i <= m.n() - 1; ++i)
        if (m(i) > std::max(m(i - 1), i)) out.insert(i);
    return out;
}

bool is_valid_decoration(const HessenbergFunction& m, const std::set<int>& S) {
    auto valid = decoration_positions(m);
    return std::includes(valid.begin(), valid.end(), S.begin(), S.end());
}

std::vector<Decoration> enumerate_decorations(const HessenbergFunction& m) {
    auto valid = decoration_positions(m);
    std::vector<int> pos(valid.begin(), valid.end());
    std::vector<Decoration> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << pos.size()); ++mask) {
        std::set<int> S;
        for (std::size_t b = 0; b < pos.size(); ++b)
            if (mask & (std::size_t{1} << b)) S.insert(pos[b]);
        out.push_back(Decoration{m, std::move(S)});
    }
    return out;
}

HessenbergFunction restrict(const HessenbergFunction& m, const std::set<int>& S_prime) {
    std::vector<int> vals(m.values());
    for (int i : S_prime) {
        if (i < 1 || i > m.n()) throw std::invalid_argument("restrict: position out of range");
        vals[i - 1] -= 1;
    }
    return HessenbergFunction(std::move(vals));  // constructor validates
}

}  // namespace isf
