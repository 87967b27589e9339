#include "apolar/errors.hpp"
#include "apolar/form.hpp"

#include <doctest.h>

#include <random>

using namespace apolar;

namespace {
const FieldSpec Q = FieldSpec::rationals();
}

TEST_CASE("parse fixed forms") {
    Form f = parse_form("X^4 + X*Y^3", 2, Q);
    CHECK(f.degree() == 4);
    CHECK(f.terms().size() == 2);
    CHECK(f.coefficient({4, 0}) == Scalar::one(Q));
    CHECK(f.coefficient({1, 3}) == Scalar::one(Q));

    Form g = parse_form("X1^2*X2 - 3*X3^3", 3, Q);
    CHECK(g.degree() == 3);
    CHECK(g.terms().size() == 2);
    CHECK(g.coefficient({0, 0, 3}) == Scalar(Q, -3));
    // round-trip
    CHECK(parse_form(to_string(g), 3, Q) == g);
}

TEST_CASE("parse rejects bad input") {
    CHECK_THROWS_AS(parse_form("0", 2, Q), ParseError);
    CHECK_THROWS_AS(parse_form("X^2 + Y", 2, Q), ParseError);   // inhomogeneous
    CHECK_THROWS_AS(parse_form("X3", 2, Q), ParseError);        // index out of range
    CHECK_THROWS_AS(parse_form("X^2 + + Y^2", 2, Q), ParseError);
    CHECK_THROWS_AS(parse_form("2*", 2, Q), ParseError);
    CHECK_THROWS_AS(parse_form("X^2 - X^2", 2, Q), ParseError);  // cancels to zero
}

TEST_CASE("parse accepts aliases, case and rational coefficients") {
    Form f = parse_form("1/2*X*Y - z^2", 3, Q);
    CHECK(f.coefficient({1, 1, 0}) == Scalar(Q, BigRational(1, 2)));
    CHECK(f.coefficient({0, 0, 2}) == Scalar(Q, -1));
}

TEST_CASE("multiply fixed operators") {
    Form x = parse_form("X", 2, Q), y = parse_form("Y", 2, Q);
    CHECK(multiply(x, x) == parse_form("X^2", 2, Q));
    CHECK(multiply(x + y, x - y) == parse_form("X^2 - Y^2", 2, Q));
    CHECK(multiply(parse_form("X^2*Y", 3, Q), parse_form("X^3", 3, Q)) ==
          parse_form("X^5*Y", 3, Q));
}

TEST_CASE("monomial basis sizes and order") {
    auto b = monomial_basis(2, 1);
    REQUIRE(b.size() == 2);
    CHECK(b[0] == Exponents{1, 0});
    CHECK(b[1] == Exponents{0, 1});
    CHECK(monomial_basis(3, 2).size() == 6);
    CHECK(monomial_basis(3, 4).size() == 15);

    for (int r = 1; r <= 5; ++r) {
        for (int d = 0; d <= 12; ++d) {
            auto basis = monomial_basis(r, d);
            CHECK(basis.size() == static_cast<std::size_t>(binomial(d + r - 1, r - 1)));
            GradedLexGreater gt;
            for (std::size_t i = 0; i + 1 < basis.size(); ++i) CHECK(gt(basis[i], basis[i + 1]));
        }
    }
}

namespace {

Form random_form(std::mt19937_64& rng, int r, int d, FieldSpec field) {
    std::uniform_int_distribution<long> val(-9, 9);
    Form f(r, d, field);
    for (const Exponents& e : monomial_basis(r, d)) f.add_term(e, Scalar(field, val(rng)));
    return f;
}

}  // namespace

TEST_CASE("print/parse round-trip on random forms") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 80; ++it) {
        int r = 2 + static_cast<int>(rng() % 4);  // exercises alias and X_i spellings
        int d = 1 + static_cast<int>(rng() % 5);
        Form f = random_form(rng, r, d, Q);
        if (f.is_zero()) continue;
        CHECK(parse_form(to_string(f), r, Q) == f);
    }
}

TEST_CASE("multiply is commutative and associative on random operators") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 40; ++it) {
        Form a = random_form(rng, 3, 1 + static_cast<int>(rng() % 3), Q);
        Form b = random_form(rng, 3, 1 + static_cast<int>(rng() % 3), Q);
        Form c = random_form(rng, 3, 1 + static_cast<int>(rng() % 2), Q);
        CHECK(multiply(a, b) == multiply(b, a));
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
}
