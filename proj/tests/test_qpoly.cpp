#include "isf/qpoly.hpp"

#include <doctest.h>

using namespace isf;

namespace {

QPoly poly(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return QPoly(std::move(c));
}

}  // namespace

TEST_CASE("canonical form strips trailing zeros") {
    CHECK(QPoly(std::vector<Rational>{}) == QPoly());
    CHECK(QPoly(std::vector<Rational>{0, 0}) == QPoly());
    CHECK(poly({1, 2}) - poly({0, 2}) == QPoly(1));
    CHECK(QPoly().is_zero());
    CHECK(QPoly().degree() == -1);
}

TEST_CASE("arithmetic") {
    QPoly q = QPoly::variable();
    CHECK(q * q + q + QPoly(1) == poly({1, 1, 1}));
    CHECK((q - QPoly(1)) * (q + QPoly(1)) == poly({-1, 0, 1}));
    CHECK(poly({1, 1}).pow(2) == poly({1, 2, 1}));
    CHECK(poly({1, 1}).pow(0) == QPoly(1));
    CHECK(-poly({1, -2}) == poly({-1, 2}));
    CHECK(poly({3, 5}).eval(2) == 13);
    CHECK(poly({1, 2, 1}).scaled(Rational(1, 2)) == QPoly(std::vector<Rational>{
              Rational(1, 2), 1, Rational(1, 2)}));
}

TEST_CASE("q-integers") {
    CHECK(q_integer(0) == QPoly());
    CHECK(q_integer(1) == QPoly(1));
    CHECK(q_integer(3) == poly({1, 1, 1}));
}

TEST_CASE("q-factorials") {
    CHECK(q_factorial(0) == QPoly(1));
    CHECK(q_factorial(2) == poly({1, 1}));
    CHECK(q_factorial(3) == poly({1, 2, 2, 1}));
}

TEST_CASE("q-binomials") {
    CHECK(q_binomial(4, 0) == QPoly(1));
    CHECK(q_binomial(2, 1) == poly({1, 1}));
    CHECK(q_binomial(4, 2) == poly({1, 1, 2, 1, 1}));
    CHECK(q_binomial(3, 5) == QPoly());
    CHECK(q_binomial(3, -1) == QPoly());
    // ratio of factorials, checked by exact division
    for (unsigned n = 0; n <= 8; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(q_binomial(n, k) * q_factorial(k) * q_factorial(n - k) ==
                  q_factorial(n));
}

TEST_CASE("shift q -> q+1") {
    CHECK(QPoly().shift_plus_one() == QPoly());
    CHECK(QPoly::variable().shift_plus_one() == poly({1, 1}));
    CHECK(poly({1, 1, 1}).shift_plus_one() == poly({3, 3, 1}));
}

TEST_CASE("coefficient reversal q^n p(1/q)") {
    CHECK(QPoly(1).reverse_and_scale(2) == QPoly::monomial(2));
    CHECK(poly({1, 1}).reverse_and_scale(1) == poly({1, 1}));
    CHECK(poly({3, 2, 1}).reverse_and_scale(2) == poly({1, 2, 3}));
    CHECK_THROWS_AS(poly({1, 1, 1}).reverse_and_scale(1), std::exception);
}

TEST_CASE("exact division") {
    QPoly qm1 = QPoly::variable() - QPoly(1);
    CHECK(exact_divide(poly({-1, 0, 1}), qm1) == poly({1, 1}));
    CHECK(exact_divide(QPoly(), qm1) == QPoly());
    try {
        exact_divide(poly({1, 0, 1}), qm1);
        FAIL("expected a remainder");
    } catch (const InexactDivision& e) {
        CHECK(e.remainder() == QPoly(2));
    }
}

TEST_CASE("nonnegative integer coefficient test") {
    CHECK(QPoly().has_nonneg_integer_coeffs());
    CHECK(poly({3, 1}).has_nonneg_integer_coeffs());
    CHECK_FALSE(poly({-1, 1}).has_nonneg_integer_coeffs());
    CHECK_FALSE(QPoly(Rational(1, 2)).has_nonneg_integer_coeffs());
}
