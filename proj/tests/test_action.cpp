#include "apolar/action.hpp"
#include "apolar/errors.hpp"
#include "apolar/paperbook.hpp"

#include <doctest.h>

#include <random>

using namespace apolar;

namespace {
const FieldSpec Q = FieldSpec::rationals();

Form random_form(std::mt19937_64& rng, int r, int d, FieldSpec field) {
    std::uniform_int_distribution<long> val(-9, 9);
    Form f(r, d, field);
    for (const Exponents& e : monomial_basis(r, d)) f.add_term(e, Scalar(field, val(rng)));
    return f;
}
}  // namespace

TEST_CASE("apply fixed examples") {
    Form x2 = parse_form("X^2", 2, Q);  // as operator x²
    Form x4 = parse_form("X^4", 2, Q);
    CHECK(apply(x2, x4, ActionKind::Differentiation) == parse_form("12*X^2", 2, Q));
    CHECK(apply(x2, x4, ActionKind::Contraction) == parse_form("X^2", 2, Q));

    Form x2y = parse_form("X^2*Y", 2, Q);
    Form xy3 = parse_form("X*Y^3", 2, Q);
    CHECK(apply(x2y, xy3, ActionKind::Differentiation).is_zero());
}

TEST_CASE("compressed quartic pencil kernel element at lambda=1") {
    auto [f, g] = compressed_quartic_pair(Q, 1, 1);
    Form member = f + g;  // λ = 1
    Form q = parse_form("Y^2 - Z^2", 3, Q);
    CHECK(apply(q, member, ActionKind::Differentiation).is_zero());
}

TEST_CASE("differentiation rejected in small characteristic") {
    FieldSpec f3 = FieldSpec::gf(3);
    Form f = parse_form("X^4", 2, f3);
    Form x = parse_form("X", 2, f3);
    CHECK_THROWS_AS(apply(x, f, ActionKind::Differentiation), ConfigError);
    CHECK(apply(x, f, ActionKind::Contraction) == parse_form("X^3", 2, f3));
}

TEST_CASE("catalecticant fixed ranks") {
    Form x4 = parse_form("X^4", 2, Q);
    Form xy3 = parse_form("X*Y^3", 2, Q);
    CHECK(rank(catalecticant(x4, 2, ActionKind::Differentiation).matrix) == 1);
    CHECK(rank(catalecticant(xy3, 1, ActionKind::Differentiation).matrix) == 2);
    CHECK(rank(catalecticant(xy3, 0, ActionKind::Differentiation).matrix) == 1);
}

TEST_CASE("catalecticant symmetry and action rank agreement on random forms") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 30; ++it) {
        int r = 2 + static_cast<int>(rng() % 2);
        int d = 2 + static_cast<int>(rng() % 4);
        Form f = random_form(rng, r, d, Q);
        if (f.is_zero()) continue;
        for (int u = 0; u <= d; ++u) {
            std::size_t rd = rank(catalecticant(f, u, ActionKind::Differentiation).matrix);
            CHECK(rd == rank(catalecticant(f, d - u, ActionKind::Differentiation).matrix));
            CHECK(rd == rank(catalecticant(f, u, ActionKind::Contraction).matrix));
        }
    }
}

TEST_CASE("apply is bilinear") {
    std::mt19937_64 rng(19);
    for (ActionKind action : {ActionKind::Differentiation, ActionKind::Contraction}) {
        for (int it = 0; it < 20; ++it) {
            Form h1 = random_form(rng, 3, 2, Q), h2 = random_form(rng, 3, 2, Q);
            Form f1 = random_form(rng, 3, 5, Q), f2 = random_form(rng, 3, 5, Q);
            CHECK(apply(h1 + h2, f1, action) == apply(h1, f1, action) + apply(h2, f1, action));
            CHECK(apply(h1, f1 + f2, action) == apply(h1, f1, action) + apply(h1, f2, action));
        }
    }
}

TEST_CASE("form space construction checks independence") {
    Form x4 = parse_form("X^4", 2, Q);
    CHECK_THROWS_AS(FormSpace({x4, x4.scaled(Scalar(Q, 2))}), DependentFormsError);
    CHECK(FormSpace({x4, parse_form("X*Y^3", 2, Q)}).dim() == 2);
}

TEST_CASE("derivative space fixed examples") {
    FormSpace w({parse_form("X^4", 2, Q), parse_form("X*Y^3", 2, Q)});
    CHECK(derivative_space(w, 1, ActionKind::Differentiation).size() == 3);
    CHECK(derivative_space(w, 0, ActionKind::Differentiation).size() == 2);

    FormSpace single({parse_form("X^4", 2, Q)});
    CHECK(derivative_space(single, 0, ActionKind::Differentiation).size() == 1);

    FormSpace wz({parse_form("X*Z^3", 3, Q), parse_form("Y*Z^3", 3, Q)});
    // first partials: {Z³, XZ², YZ²}
    CHECK(derivative_space(wz, 1, ActionKind::Differentiation).size() == 3);
}

TEST_CASE("annihilator component fixed examples") {
    FormSpace w({parse_form("X^4", 2, Q), parse_form("X*Y^3", 2, Q)});
    auto a3 = annihilator_component_forms(w, 3, ActionKind::Differentiation);
    REQUIRE(a3.size() == 1);
    CHECK(a3[0].terms().size() == 1);
    CHECK(a3[0].terms().begin()->first == Exponents{2, 1});  // x²y

    CHECK(annihilator_component(w, 1, ActionKind::Differentiation).empty());

    FormSpace xz({parse_form("X*Z^3", 3, Q)});
    auto a1 = annihilator_component_forms(xz, 1, ActionKind::Differentiation);
    REQUIRE(a1.size() == 1);
    CHECK(a1[0].terms().begin()->first == Exponents{0, 1, 0});  // y

    // components above the socle degree are all of R_u
    CHECK(annihilator_component(w, 5, ActionKind::Differentiation).size() ==
          monomial_basis(2, 5).size());
}

TEST_CASE("rank-nullity bridge between annihilator and derivative space") {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 15; ++it) {
        Form f = random_form(rng, 3, 4, Q);
        Form g = random_form(rng, 3, 4, Q);
        if (f.is_zero() || g.is_zero()) continue;
        FormSpace w = [&]() {
            try {
                return FormSpace({f, g});
            } catch (const DependentFormsError&) {
                return FormSpace({f});
            }
        }();
        // dim (Ann W)_u = dim R_u − H(A)_u, and H(A)_u = dim R_{j−u}∘W.
        for (int u = 0; u <= 4; ++u) {
            CHECK(annihilator_component(w, u, ActionKind::Differentiation).size() +
                      derivative_space(w, 4 - u, ActionKind::Differentiation).size() ==
                  monomial_basis(3, u).size());
        }
    }
}
