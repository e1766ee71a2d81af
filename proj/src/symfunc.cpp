#include "isf/symfunc.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace isf {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::E: return "e";
        case Basis::H: return "h";
        case Basis::P: return "p";
        case Basis::Rho: return "rho";
    }
    return "?";
}

void SymFunc::add_term(const Partition& lambda, const QPoly& coeff) {
    if (lambda.size() != degree_)
        throw std::invalid_argument("SymFunc term size mismatch");
    if (coeff.is_zero()) return;
    auto it = terms_.find(lambda);
    if (it == terms_.end()) {
        terms_.emplace(lambda, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QPoly SymFunc::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? QPoly() : it->second;
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
    if (degree_ != o.degree_ || basis_ != o.basis_)
        throw std::invalid_argument("SymFunc addition: degree/basis mismatch");
    SymFunc r(*this);
    for (const auto& [l, c] : o.terms_) r.add_term(l, c);
    return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const {
    if (degree_ != o.degree_ || basis_ != o.basis_)
        throw std::invalid_argument("SymFunc subtraction: degree/basis mismatch");
    SymFunc r(*this);
    for (const auto& [l, c] : o.terms_) r.add_term(l, -c);
    return r;
}

SymFunc SymFunc::scaled(const QPoly& c) const {
    SymFunc r(degree_, basis_);
    for (const auto& [l, v] : terms_) r.add_term(l, v * c);
    return r;
}

bool SymFunc::operator==(const SymFunc& o) const {
    return degree_ == o.degree_ && basis_ == o.basis_ && terms_ == o.terms_;
}

SymFunc basis_unit(Basis basis, const Partition& lambda) {
    SymFunc f(lambda.size(), basis);
    f.add_term(lambda, QPoly(1));
    return f;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    if (f.basis() != g.basis())
        throw std::invalid_argument("SymFunc multiply: basis mismatch");
    SymFunc r(f.degree() + g.degree(), f.basis());
    for (const auto& [lf, cf] : f.terms())
        for (const auto& [lg, cg] : g.terms())
            r.add_term(merge_partitions(lf, lg), cf * cg);
    return r;
}

namespace {

// rho_k written in the h basis; index k, cached.
const SymFunc& rho_gen_in_h(int k) {
    static std::vector<SymFunc> cache;  // cache[k-1]
    while (static_cast<int>(cache.size()) < k) {
        int n = static_cast<int>(cache.size()) + 1;
        SymFunc r = basis_unit(Basis::H, Partition({n})).scaled(q_integer(n));
        for (int i = 1; i < n; ++i)
            r = r - multiply(cache[i - 1], basis_unit(Basis::H, Partition({n - i})));
        cache.push_back(std::move(r));
    }
    return cache[k - 1];
}

SymFunc expand_generator(Basis src, int k, Basis tgt);

// Generic product expansion of f's terms, each generator rewritten in tgt.
SymFunc rewrite(const SymFunc& f, Basis tgt) {
    SymFunc out(f.degree(), tgt);
    for (const auto& [lambda, c] : f.terms()) {
        SymFunc prod(0, tgt);
        prod.add_term(Partition(), QPoly(1));
        for (int part : lambda.parts())
            prod = multiply(prod, expand_generator(f.basis(), part, tgt));
        out = out + prod.scaled(c);
    }
    return out;
}

SymFunc expand_generator(Basis src, int k, Basis tgt) {
    static std::map<std::tuple<Basis, int, Basis>, SymFunc> cache;
    auto key = std::make_tuple(src, k, tgt);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    SymFunc result(k, tgt);
    if (src == tgt) {
        result = basis_unit(tgt, Partition({k}));
    } else if (src == Basis::Rho) {
        result = rewrite(rho_gen_in_h(k), tgt);
    } else if (src == Basis::H && tgt == Basis::P) {
        // n h_n = sum_{i=1}^n p_i h_{n-i}
        SymFunc acc(k, Basis::P);
        for (int i = 1; i <= k; ++i) {
            SymFunc tail = (i == k) ? basis_unit(Basis::P, Partition())
                                    : expand_generator(Basis::H, k - i, Basis::P);
            acc = acc + multiply(basis_unit(Basis::P, Partition({i})), tail);
        }
        result = acc.scaled(QPoly(Rational(1, k)));
    } else if (src == Basis::E && tgt == Basis::P) {
        // n e_n = sum_{i=1}^n (-1)^{i-1} p_i e_{n-i}
        SymFunc acc(k, Basis::P);
        for (int i = 1; i <= k; ++i) {
            SymFunc tail = (i == k) ? basis_unit(Basis::P, Partition())
                                    : expand_generator(Basis::E, k - i, Basis::P);
            acc = acc + multiply(basis_unit(Basis::P, Partition({i})), tail)
                            .scaled(QPoly(i % 2 == 1 ? 1 : -1));
        }
        result = acc.scaled(QPoly(Rational(1, k)));
    } else if (src == Basis::P && tgt == Basis::H) {
        // p_n = n h_n - sum_{i<n} p_i h_{n-i}
        SymFunc acc = basis_unit(Basis::H, Partition({k})).scaled(QPoly(k));
        for (int i = 1; i < k; ++i)
            acc = acc - multiply(expand_generator(Basis::P, i, Basis::H),
                                 basis_unit(Basis::H, Partition({k - i})));
        result = acc;
    } else if (src == Basis::P && tgt == Basis::E) {
        // p_n = (-1)^{n-1} (n e_n - sum_{i<n} (-1)^{i-1} p_i e_{n-i})
        SymFunc acc = basis_unit(Basis::E, Partition({k})).scaled(QPoly(k));
        for (int i = 1; i < k; ++i)
            acc = acc - multiply(expand_generator(Basis::P, i, Basis::E),
                                 basis_unit(Basis::E, Partition({k - i})))
                            .scaled(QPoly(i % 2 == 1 ? 1 : -1));
        result = acc.scaled(QPoly(k % 2 == 1 ? 1 : -1));
    } else {
        // h<->e routed through p
        result = rewrite(expand_generator(src, k, Basis::P), tgt);
    }
    cache.emplace(key, result);
    return result;
}

}  // namespace

SymFunc rho_to_h(const SymFunc& f) {
    if (f.basis() != Basis::Rho)
        throw std::invalid_argument("rho_to_h expects rho basis");
    return rewrite(f, Basis::H);
}

SymFunc rho_n_alt(int n) {
    if (n < 1) throw std::invalid_argument("rho_n_alt: n >= 1 required");
    SymFunc out(n, Basis::H);
    // iterate over compositions of n
    std::vector<int> comp;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            int sign = comp.size() % 2 == 1 ? 1 : -1;
            out.add_term(sort_to_partition(comp), q_integer(comp[0]).scaled(sign));
            return;
        }
        for (int p = 1; p <= remaining; ++p) {
            comp.push_back(p);
            rec(remaining - p);
            comp.pop_back();
        }
    };
    rec(n);
    return out;
}

SymFunc rho_n_via_hall_littlewood(int n) {
    if (n < 1) throw std::invalid_argument("rho_n_via_hall_littlewood: n >= 1 required");
    // P_n = sum_{r=0}^{n-1} (-q)^r s_{n-r,1^r} with the hook identity
    // s_{(a,1^b)} = sum_{j=0}^{b} (-1)^j h_{a+j} e_{b-j}.
    SymFunc pn(n, Basis::P);
    for (int r = 0; r < n; ++r) {
        int a = n - r, b = r;
        SymFunc hook(n, Basis::P);
        for (int j = 0; j <= b; ++j) {
            SymFunc term = expand_generator(Basis::H, a + j, Basis::P);
            if (b - j > 0)
                term = multiply(term, expand_generator(Basis::E, b - j, Basis::P));
            hook = hook + term.scaled(QPoly(j % 2 == 0 ? 1 : -1));
        }
        QPoly minus_q_pow = QPoly::monomial(r, r % 2 == 0 ? 1 : -1);
        pn = pn + hook.scaled(minus_q_pow);
    }
    // rho_n = q^{n-1} P_n(1/q), coefficient-wise reversal at degree n-1
    SymFunc rho(n, Basis::P);
    for (const auto& [lambda, c] : pn.terms())
        rho.add_term(lambda, c.reverse_and_scale(n - 1));
    return convert(rho, Basis::H);
}

SymFunc convert(const SymFunc& f, Basis target) {
    if (target == Basis::Rho)
        throw std::invalid_argument("conversion into the rho basis is not supported");
    if (f.basis() == target) return f;
    return rewrite(f, target);
}

SymFunc omega(const SymFunc& f) {
    switch (f.basis()) {
        case Basis::E:
        case Basis::H: {
            SymFunc out(f.degree(), f.basis() == Basis::E ? Basis::H : Basis::E);
            for (const auto& [l, c] : f.terms()) out.add_term(l, c);
            return out;
        }
        case Basis::P: {
            SymFunc out(f.degree(), Basis::P);
            for (const auto& [l, c] : f.terms()) {
                int sign = (l.size() - l.length()) % 2 == 0 ? 1 : -1;
                out.add_term(l, c.scaled(sign));
            }
            return out;
        }
        case Basis::Rho:
            throw std::invalid_argument("omega on rho basis: convert first");
    }
    throw std::logic_error("unreachable");
}

SymFunc plethysm_qminus1(const SymFunc& f) {
    if (f.basis() != Basis::P)
        throw std::invalid_argument("plethysm_qminus1 expects p basis");
    SymFunc out(f.degree(), Basis::P);
    for (const auto& [l, c] : f.terms()) {
        QPoly scale(1);
        for (int part : l.parts())
            scale *= QPoly::monomial(part) - QPoly(1);  // q^k - 1
        out.add_term(l, c * scale);
    }
    return out;
}

void MVPoly::add_term(const std::vector<int>& expo, const QPoly& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(expo);
    if (it == terms_.end()) {
        terms_.emplace(expo, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MVPoly MVPoly::operator+(const MVPoly& o) const {
    MVPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MVPoly MVPoly::operator*(const MVPoly& o) const {
    MVPoly r(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            std::vector<int> e(ea);
            for (int i = 0; i < nvars_; ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

bool MVPoly::operator==(const MVPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

MVPoly MVPoly::constant(int nvars, const QPoly& c) {
    MVPoly r(nvars);
    r.add_term(std::vector<int>(nvars, 0), c);
    return r;
}

MVPoly MVPoly::generator(Basis basis, int k, int nvars) {
    MVPoly r(nvars);
    std::vector<int> expo(nvars, 0);
    switch (basis) {
        case Basis::P:
            for (int i = 0; i < nvars; ++i) {
                expo.assign(nvars, 0);
                expo[i] = k;
                r.add_term(expo, QPoly(1));
            }
            break;
        case Basis::E: {
            // k-subsets
            std::function<void(int, int)> rec = [&](int start, int left) {
                if (left == 0) {
                    r.add_term(expo, QPoly(1));
                    return;
                }
                for (int i = start; i <= nvars - left; ++i) {
                    expo[i] = 1;
                    rec(i + 1, left - 1);
                    expo[i] = 0;
                }
            };
            rec(0, k);
            break;
        }
        case Basis::H: {
            // multisets of size k
            std::function<void(int, int)> rec = [&](int start, int left) {
                if (left == 0) {
                    r.add_term(expo, QPoly(1));
                    return;
                }
                if (start == nvars) return;
                for (int take = left; take >= 0; --take) {
                    expo[start] += take;
                    rec(start + 1, left - take);
                    expo[start] -= take;
                }
            };
            rec(0, k);
            break;
        }
        case Basis::Rho:
            throw std::invalid_argument("no direct monomial expansion for rho");
    }
    return r;
}

void MonomialSym::add_term(const Partition& lambda, const QPoly& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(lambda);
    if (it == terms_.end()) {
        terms_.emplace(lambda, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QPoly MonomialSym::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? QPoly() : it->second;
}

bool MonomialSym::operator==(const MonomialSym& o) const {
    return degree_ == o.degree_ && terms_ == o.terms_;
}

MonomialSym MonomialSym::map_coeffs(const std::function<QPoly(const QPoly&)>& f) const {
    MonomialSym out(degree_, nvars_);
    for (const auto& [l, c] : terms_) out.add_term(l, f(c));
    return out;
}

MonomialSym MonomialSym::from_mvpoly(const MVPoly& p, int degree) {
    MonomialSym out(degree, p.nvars());
    for (const auto& [expo, c] : p.terms()) {
        bool decreasing = true;
        for (std::size_t i = 1; i < expo.size(); ++i)
            if (expo[i] > expo[i - 1]) {
                decreasing = false;
                break;
            }
        if (!decreasing) continue;
        std::vector<int> parts;
        for (int e : expo)
            if (e > 0) parts.push_back(e);
        out.add_term(Partition(std::move(parts)), c);
    }
    return out;
}

MVPoly MonomialSym::to_mvpoly(int nvars) const {
    MVPoly out(nvars);
    for (const auto& [l, c] : terms_) {
        if (l.length() > nvars)
            throw std::invalid_argument("MonomialSym::to_mvpoly: too few variables");
        std::vector<int> expo(nvars, 0);
        std::copy(l.parts().begin(), l.parts().end(), expo.begin());
        std::sort(expo.begin(), expo.end());
        do {
            out.add_term(expo, c);
        } while (std::next_permutation(expo.begin(), expo.end()));
    }
    return out;
}

namespace {

// Cached dense expansion of a whole basis element lambda in nvars variables.
const MVPoly& lambda_expansion(Basis basis, const Partition& lambda, int nvars) {
    using Key = std::tuple<Basis, std::vector<int>, int>;
    static std::map<Key, MVPoly> cache;
    Key key{basis, lambda.parts(), nvars};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    MVPoly prod = MVPoly::constant(nvars, QPoly(1));
    for (int part : lambda.parts())
        prod = prod * MVPoly::generator(basis, part, nvars);
    return cache.emplace(key, std::move(prod)).first->second;
}

}  // namespace

MonomialSym monomial_expand(const SymFunc& f) {
    if (f.basis() == Basis::Rho)
        throw std::invalid_argument("monomial_expand: convert rho first");
    int n = f.degree();
    int nvars = std::max(n, 1);
    MonomialSym out(n, nvars);
    for (const auto& [lambda, c] : f.terms()) {
        const MVPoly& exp = lambda_expansion(f.basis(), lambda, nvars);
        MonomialSym expanded = MonomialSym::from_mvpoly(exp, n);
        for (const auto& [t, tc] : expanded.terms()) out.add_term(t, tc * c);
    }
    return out;
}

void XQPoly::add_term(std::size_t xpower, const QPoly& c) {
    if (c.is_zero()) return;
    if (coeffs_.size() <= xpower) coeffs_.resize(xpower + 1);
    coeffs_[xpower] += c;
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational XQPoly::eval(const Rational& xv, const Rational& qv) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * xv + it->eval(qv);
    return acc;
}

XQPoly specialize_epsilon(const SymFunc& f) {
    if (f.basis() != Basis::P)
        throw std::invalid_argument("specialize_epsilon expects p basis");
    XQPoly out;
    for (const auto& [l, c] : f.terms()) out.add_term(l.length(), c);
    return out;
}

}  // namespace isf
