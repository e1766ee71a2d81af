#include "isf/symfunc.hpp"

#include <doctest.h>

using namespace isf;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

QPoly poly(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return QPoly(std::move(c));
}

SymFunc rho2_in_h() {
    SymFunc f(2, Basis::H);
    f.add_term(P({2}), q_integer(2));
    f.add_term(P({1, 1}), QPoly(-1));
    return f;
}

SymFunc rho3_in_h() {
    SymFunc f(3, Basis::H);
    f.add_term(P({3}), q_integer(3));
    f.add_term(P({2, 1}), -poly({2, 1}));
    f.add_term(P({1, 1, 1}), QPoly(1));
    return f;
}

}  // namespace

TEST_CASE("basis units") {
    SymFunc h21 = basis_unit(Basis::H, P({2, 1}));
    CHECK(h21.degree() == 3);
    CHECK(h21.coeff(P({2, 1})) == QPoly(1));
    CHECK(basis_unit(Basis::Rho, P({3})).basis() == Basis::Rho);
    SymFunc one = basis_unit(Basis::P, P({}));
    CHECK(one.degree() == 0);
    CHECK(one.coeff(P({})) == QPoly(1));
}

TEST_CASE("products concatenate partitions") {
    CHECK(multiply(basis_unit(Basis::H, P({2})), basis_unit(Basis::H, P({1}))) ==
          basis_unit(Basis::H, P({2, 1})));
    CHECK(multiply(basis_unit(Basis::Rho, P({1})), basis_unit(Basis::Rho, P({1}))) ==
          basis_unit(Basis::Rho, P({1, 1})));
    SymFunc prod = multiply(rho2_in_h(), basis_unit(Basis::H, P({1})));
    SymFunc expected(3, Basis::H);
    expected.add_term(P({2, 1}), q_integer(2));
    expected.add_term(P({1, 1, 1}), QPoly(-1));
    CHECK(prod == expected);
}

TEST_CASE("rho in the h basis, three routes") {
    CHECK(rho_to_h(basis_unit(Basis::Rho, P({1}))) == basis_unit(Basis::H, P({1})));
    CHECK(rho_to_h(basis_unit(Basis::Rho, P({2}))) == rho2_in_h());
    CHECK(rho_to_h(basis_unit(Basis::Rho, P({3}))) == rho3_in_h());
    CHECK(rho_n_alt(1) == basis_unit(Basis::H, P({1})));
    CHECK(rho_n_alt(2) == rho2_in_h());
    CHECK(rho_n_alt(3) == rho3_in_h());
    CHECK(rho_n_via_hall_littlewood(1) == basis_unit(Basis::H, P({1})));
    CHECK(rho_n_via_hall_littlewood(2) == rho2_in_h());
    CHECK(rho_n_via_hall_littlewood(3) == rho3_in_h());
    for (int n = 4; n <= 8; ++n) {
        SymFunc a = rho_to_h(basis_unit(Basis::Rho, P({n})));
        CHECK(a == rho_n_alt(n));
        CHECK(a == rho_n_via_hall_littlewood(n));
    }
}

TEST_CASE("conversions via Newton recurrences") {
    SymFunc h2p = convert(basis_unit(Basis::H, P({2})), Basis::P);
    CHECK(h2p.coeff(P({1, 1})) == QPoly(Rational(1, 2)));
    CHECK(h2p.coeff(P({2})) == QPoly(Rational(1, 2)));
    SymFunc e2p = convert(basis_unit(Basis::E, P({2})), Basis::P);
    CHECK(e2p.coeff(P({1, 1})) == QPoly(Rational(1, 2)));
    CHECK(e2p.coeff(P({2})) == QPoly(Rational(-1, 2)));
    // round trips
    for (int n = 1; n <= 5; ++n)
        for (const auto& l : enumerate_partitions(n)) {
            SymFunc h = basis_unit(Basis::H, l);
            CHECK(convert(convert(h, Basis::P), Basis::H) == h);
            SymFunc e = basis_unit(Basis::E, l);
            CHECK(convert(convert(e, Basis::P), Basis::E) == e);
            CHECK(convert(convert(e, Basis::H), Basis::E) == e);
        }
}

TEST_CASE("omega") {
    CHECK(omega(basis_unit(Basis::E, P({2, 1}))) == basis_unit(Basis::H, P({2, 1})));
    CHECK(omega(basis_unit(Basis::P, P({3}))) == basis_unit(Basis::P, P({3})));
    CHECK(omega(basis_unit(Basis::P, P({2, 2}))) == basis_unit(Basis::P, P({2, 2})));
    CHECK(omega(basis_unit(Basis::P, P({2}))) ==
          basis_unit(Basis::P, P({2})).scaled(QPoly(-1)));
    // involution, and consistency across bases
    for (int n = 1; n <= 5; ++n)
        for (const auto& l : enumerate_partitions(n)) {
            SymFunc e = basis_unit(Basis::E, l);
            CHECK(omega(omega(e)) == e);
            CHECK(convert(omega(e), Basis::P) == omega(convert(e, Basis::P)));
        }
}

TEST_CASE("monomial expansion") {
    MonomialSym e2 = monomial_expand(basis_unit(Basis::E, P({2})));
    CHECK(e2.coeff(P({1, 1})) == QPoly(1));
    CHECK(e2.coeff(P({2})) == QPoly());
    MonomialSym h2 = monomial_expand(basis_unit(Basis::H, P({2})));
    CHECK(h2.coeff(P({1, 1})) == QPoly(1));
    CHECK(h2.coeff(P({2})) == QPoly(1));
    MonomialSym p2 = monomial_expand(basis_unit(Basis::P, P({2})));
    CHECK(p2.coeff(P({2})) == QPoly(1));
    CHECK(p2.coeff(P({1, 1})) == QPoly());
    // expansion separates distinct functions and respects conversion
    for (int n = 1; n <= 4; ++n)
        for (const auto& l : enumerate_partitions(n)) {
            SymFunc e = basis_unit(Basis::E, l);
            CHECK(monomial_expand(e) == monomial_expand(convert(e, Basis::P)));
        }
}

TEST_CASE("plethysm by (q-1)X on the p basis") {
    QPoly qm1 = QPoly::variable() - QPoly(1);
    CHECK(plethysm_qminus1(basis_unit(Basis::P, P({1}))) ==
          basis_unit(Basis::P, P({1})).scaled(qm1));
    CHECK(plethysm_qminus1(basis_unit(Basis::P, P({2}))) ==
          basis_unit(Basis::P, P({2})).scaled(poly({-1, 0, 1})));
    CHECK(plethysm_qminus1(basis_unit(Basis::P, P({2, 1}))) ==
          basis_unit(Basis::P, P({2, 1})).scaled(poly({-1, 0, 1}) * qm1));
}

TEST_CASE("epsilon specialization") {
    CHECK(specialize_epsilon(SymFunc(4, Basis::P)) == XQPoly());
    XQPoly x = specialize_epsilon(basis_unit(Basis::P, P({4})));
    CHECK(x.eval(5, 1) == 5);
    SymFunc f(4, Basis::P);
    f.add_term(P({1, 1, 1, 1}), QPoly(1));
    f.add_term(P({2, 1, 1}), QPoly(-4));
    f.add_term(P({2, 2}), QPoly(1));
    f.add_term(P({3, 1}), QPoly(4));
    f.add_term(P({4}), QPoly(-2));
    // x^4 - 4x^3 + 5x^2 - 2x
    for (long k = 0; k <= 6; ++k)
        CHECK(specialize_epsilon(f).eval(k, 1) ==
              k * k * k * k - 4 * k * k * k + 5 * k * k - 2 * k);
}

TEST_CASE("dense polynomials agree with basis products") {
    // (e_1)^2 = e_{1,1} expanded honestly
    MVPoly e1 = MVPoly::generator(Basis::E, 1, 3);
    MVPoly prod = e1 * e1;
    MonomialSym lhs = MonomialSym::from_mvpoly(prod, 2);
    MonomialSym rhs = monomial_expand(basis_unit(Basis::E, P({1, 1})));
    CHECK(lhs.coeff(P({2})) == rhs.coeff(P({2})));
    CHECK(lhs.coeff(P({1, 1})) == rhs.coeff(P({1, 1})));
    // symmetrization round trip
    MonomialSym h3 = monomial_expand(basis_unit(Basis::H, P({3})));
    CHECK(MonomialSym::from_mvpoly(h3.to_mvpoly(3), 3) == h3);
}
