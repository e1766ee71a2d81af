#pragma once

#include "isf/partition.hpp"
#include "isf/qpoly.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace isf {

enum class Basis { E, H, P, Rho };

std::string basis_name(Basis b);

/// Homogeneous symmetric function of a fixed degree, stored as a QPoly-linear
/// combination of partition-indexed elements of one multiplicative basis.
/// Zero coefficients are never stored.
class SymFunc {
public:
    SymFunc(int degree, Basis basis) : degree_(degree), basis_(basis) {}

    int degree() const { return degree_; }
    Basis basis() const { return basis_; }
    const std::map<Partition, QPoly, PartitionOrder>& terms() const { return terms_; }

    void add_term(const Partition& lambda, const QPoly& coeff);
    QPoly coeff(const Partition& lambda) const;

    SymFunc operator+(const SymFunc& o) const;
    SymFunc operator-(const SymFunc& o) const;
    SymFunc scaled(const QPoly& c) const;
    bool operator==(const SymFunc& o) const;

private:
    int degree_;
    Basis basis_;
    std::map<Partition, QPoly, PartitionOrder> terms_;
};

/// Single term: coefficient 1 on lambda in the given basis.
SymFunc basis_unit(Basis basis, const Partition& lambda);

/// Product of two symmetric functions in the same multiplicative basis:
/// term partitions concatenate (sorted), coefficients multiply.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

/// Expands every rho_lambda in h's via the recurrence
/// rho_n = [n]_q h_n - sum_{i<n} rho_i h_{n-i}.
SymFunc rho_to_h(const SymFunc& f);

/// rho_n by the signed composition sum rho_n = sum_{alpha |= n}
/// (-1)^{l(alpha)-1} [alpha_1]_q h_{lambda(alpha)}.
SymFunc rho_n_alt(int n);

/// rho_n as q^{n-1} P_n(1/q) where P_n = sum_r (-q)^r s_{n-r,1^r}, hooks
/// expanded by s_{(a,1^b)} = sum_j (-1)^j h_{a+j} e_{b-j}. Returned in the
/// h basis.
SymFunc rho_n_via_hall_littlewood(int n);

/// Exact change of basis; target must be E, H or P (source may also be Rho,
/// which is routed through H).
SymFunc convert(const SymFunc& f, Basis target);

/// omega involution: swaps e and h labels; scales p_lambda by
/// (-1)^{|lambda| - l(lambda)}. Rho input must be converted first.
SymFunc omega(const SymFunc& f);

/// Plethysm by (q-1)X on the p basis: p_k -> (q^k - 1) p_k.
SymFunc plethysm_qminus1(const SymFunc& f);

/// Dense polynomial in a fixed number of commuting variables with QPoly
/// coefficients, keyed by exponent vector. Internal workhorse of the
/// monomial expansion; also used by tests that need honest products.
class MVPoly {
public:
    explicit MVPoly(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    const std::map<std::vector<int>, QPoly>& terms() const { return terms_; }

    void add_term(const std::vector<int>& expo, const QPoly& coeff);
    MVPoly operator+(const MVPoly& o) const;
    MVPoly operator*(const MVPoly& o) const;
    bool operator==(const MVPoly& o) const;

    static MVPoly constant(int nvars, const QPoly& c);
    /// e_k, h_k or p_k written out in nvars variables.
    static MVPoly generator(Basis basis, int k, int nvars);

private:
    int nvars_;
    std::map<std::vector<int>, QPoly> terms_;
};

/// Degree-n symmetric polynomial in n variables, stored by coefficients of
/// monomial symmetric functions. Canonical equality oracle: two degree-n
/// symmetric functions are equal iff their MonomialSym forms agree.
class MonomialSym {
public:
    MonomialSym(int degree, int nvars) : degree_(degree), nvars_(nvars) {}

    int degree() const { return degree_; }
    int nvars() const { return nvars_; }
    const std::map<Partition, QPoly, PartitionOrder>& terms() const { return terms_; }

    void add_term(const Partition& lambda, const QPoly& coeff);
    QPoly coeff(const Partition& lambda) const;
    bool operator==(const MonomialSym& o) const;

    /// Applies f coefficient-wise.
    MonomialSym map_coeffs(const std::function<QPoly(const QPoly&)>& f) const;

    /// Reads the weakly-decreasing-exponent terms of a dense polynomial.
    static MonomialSym from_mvpoly(const MVPoly& p, int degree);
    /// Symmetrizes back into nvars variables (for products in a larger ring).
    MVPoly to_mvpoly(int nvars) const;

private:
    int degree_;
    int nvars_;
    std::map<Partition, QPoly, PartitionOrder> terms_;
};

/// Expands f (basis e, h or p) in degree(f) variables and reads off monomial
/// coefficients.
MonomialSym monomial_expand(const SymFunc& f);

/// Polynomial in x with QPoly coefficients; the image of the specialization
/// epsilon(p_n) = x.
class XQPoly {
public:
    XQPoly() = default;

    const std::vector<QPoly>& coeffs() const { return coeffs_; }
    void add_term(std::size_t xpower, const QPoly& c);
    bool operator==(const XQPoly& o) const { return coeffs_ == o.coeffs_; }
    /// Value at (x = xv, q = qv).
    Rational eval(const Rational& xv, const Rational& qv) const;

private:
    std::vector<QPoly> coeffs_;  // index = power of x
};

/// epsilon: a p-basis term (lambda, c) contributes c x^{l(lambda)}.
XQPoly specialize_epsilon(const SymFunc& f);

}  // namespace isf
