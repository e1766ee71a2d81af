#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace isf {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Univariate polynomial in q with exact rational coefficients.
///
/// Coefficient i is the coefficient of q^i. The representation is always
/// canonical: no trailing zeros, and the zero polynomial is the empty vector.
class QPoly {
public:
    QPoly() = default;
    QPoly(long constant);
    QPoly(const Rational& constant);
    explicit QPoly(std::vector<Rational> coeffs);

    static QPoly variable();  // the monomial q
    static QPoly monomial(std::size_t power, const Rational& c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t i) const;

    QPoly operator-() const;
    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const QPoly& o) const { return coeffs_ != o.coeffs_; }

    QPoly scaled(const Rational& c) const;
    QPoly pow(std::size_t e) const;
    Rational eval(const Rational& x) const;

    /// Substitutes q -> q+1 and expands.
    QPoly shift_plus_one() const;

    /// q^n * p(1/q): reverses the coefficient vector into length n+1.
    /// Throws if degree > n.
    QPoly reverse_and_scale(std::size_t n) const;

    bool has_nonneg_integer_coeffs() const;

    std::string to_string() const;  // human-readable, e.g. "q^2 + 2q + 3"

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Raised by QPoly division when the divisor does not divide exactly.
class InexactDivision : public std::runtime_error {
public:
    InexactDivision(QPoly remainder);
    const QPoly& remainder() const { return remainder_; }

private:
    QPoly remainder_;
};

/// Exact quotient p/d in Q[q]; throws InexactDivision with the nonzero
/// remainder when d does not divide p.
QPoly exact_divide(const QPoly& p, const QPoly& d);

/// [j]_q = 1 + q + ... + q^{j-1}; zero for j = 0.
QPoly q_integer(unsigned j);

/// n!_q = [1]_q [2]_q ... [n]_q.
QPoly q_factorial(unsigned n);

/// Gaussian binomial coefficient, via C(n,k) = C(n-1,k-1) + q^k C(n-1,k).
/// Zero when k < 0 or k > n.
QPoly q_binomial(unsigned n, long k);

}  // namespace isf
