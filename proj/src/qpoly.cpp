#include "isf/qpoly.hpp"

#include <sstream>

namespace isf {

QPoly::QPoly(long constant) {
    if (constant != 0) coeffs_.push_back(Rational(constant));
}

QPoly::QPoly(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::variable() { return monomial(1); }

QPoly QPoly::monomial(std::size_t power, const Rational& c) {
    QPoly p;
    if (c == 0) return p;
    p.coeffs_.assign(power + 1, Rational(0));
    p.coeffs_[power] = c;
    return p;
}

Rational QPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::operator-() const {
    QPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly r(*this);
    r += o;
    return r;
}

QPoly QPoly::operator-(const QPoly& o) const {
    QPoly r(*this);
    r -= o;
    return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& o) {
    *this = *this * o;
    return *this;
}

QPoly QPoly::scaled(const Rational& c) const {
    if (c == 0) return {};
    QPoly r(*this);
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

QPoly QPoly::pow(std::size_t e) const {
    QPoly r(1);
    for (std::size_t i = 0; i < e; ++i) r *= *this;
    return r;
}

Rational QPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly QPoly::shift_plus_one() const {
    // Horner in the polynomial ring at q+1.
    QPoly qp1(std::vector<Rational>{Rational(1), Rational(1)});
    QPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * qp1 + QPoly(*it);
    return acc;
}

QPoly QPoly::reverse_and_scale(std::size_t n) const {
    if (degree() > static_cast<long>(n))
        throw std::invalid_argument("reverse_and_scale: degree exceeds n");
    std::vector<Rational> out(n + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[n - i] = coeffs_[i];
    return QPoly(std::move(out));
}

bool QPoly::has_nonneg_integer_coeffs() const {
    for (const auto& c : coeffs_)
        if (c < 0 || denominator(c) != 1) return false;
    return true;
}

std::string QPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        Rational c = coeffs_[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rational a = c < 0 ? Rational(-c) : c;
        if (a != 1 || i == 0) os << a.str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

InexactDivision::InexactDivision(QPoly remainder)
    : std::runtime_error("inexact polynomial division, remainder " + remainder.to_string()),
      remainder_(std::move(remainder)) {}

QPoly exact_divide(const QPoly& p, const QPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
    if (p.is_zero()) return {};
    std::vector<Rational> rem(p.coeffs());
    long dd = d.degree();
    Rational lead = d.coeff(dd);
    long qd = static_cast<long>(rem.size()) - 1 - dd;
    if (qd < 0) throw InexactDivision(p);
    std::vector<Rational> quot(qd + 1, Rational(0));
    for (long i = qd; i >= 0; --i) {
        Rational c = rem[i + dd] / lead;
        quot[i] = c;
        if (c == 0) continue;
        for (long j = 0; j <= dd; ++j) rem[i + j] -= c * d.coeff(j);
    }
    QPoly r(std::move(rem));
    if (!r.is_zero()) throw InexactDivision(r);
    return QPoly(std::move(quot));
}

QPoly q_integer(unsigned j) {
    return QPoly(std::vector<Rational>(j, Rational(1)));
}

QPoly q_factorial(unsigned n) {
    QPoly r(1);
    for (unsigned i = 1; i <= n; ++i) r *= q_integer(i);
    return r;
}

QPoly q_binomial(unsigned n, long k) {
    if (k < 0 || k > static_cast<long>(n)) return {};
    // Pascal recurrence, one row at a time.
    std::vector<QPoly> row{QPoly(1)};
    for (unsigned m = 1; m <= n; ++m) {
        std::vector<QPoly> next(m + 1);
        next[0] = QPoly(1);
        next[m] = QPoly(1);
        for (unsigned j = 1; j < m; ++j)
            next[j] = row[j - 1] + QPoly::monomial(j) * row[j];
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

}  // namespace isf
