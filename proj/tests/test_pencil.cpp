#include "apolar/errors.hpp"
#include "apolar/paperbook.hpp"
#include "apolar/pencil.hpp"

#include <doctest.h>

#include <random>

using namespace apolar;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const ActionKind kDiff = ActionKind::Differentiation;

Form random_form(std::mt19937_64& rng, int r, int d, FieldSpec field) {
    std::uniform_int_distribution<long> val(-9, 9);
    Form f(r, d, field);
    for (const Exponents& e : monomial_basis(r, d)) f.add_term(e, Scalar(field, val(rng)));
    return f;
}
}  // namespace

TEST_CASE("pencil_member endpoints and a finite lambda") {
    Form f = parse_form("X^4", 2, Q), g = parse_form("Y^4", 2, Q);
    CHECK(pencil_member(f, g, Lambda::finite(Scalar::zero(Q))) == f);
    CHECK(pencil_member(f, g, Lambda::at_infinity()) == g);
    CHECK(pencil_member(f, g, Lambda::finite(Scalar(Q, 2))) ==
          parse_form("X^4 + 2*Y^4", 2, Q));
}

TEST_CASE("quartic binary pencil full sweep") {
    auto [f, g] = quartic_binary_pair(Q);
    SweepOptions opts;
    opts.seed = 1;
    PencilReport rep = sweep(f, g, opts);

    CHECK(rep.h_f == HilbertSeq({1, 1, 1, 1, 1}, 2));
    CHECK(rep.h_g == HilbertSeq({1, 2, 2, 2, 1}, 2));
    CHECK(rep.h_a == HilbertSeq({1, 2, 3, 3, 2}, 2));
    CHECK(rep.h_gen == HilbertSeq({1, 2, 3, 2, 1}, 2));
    CHECK(rep.d == std::vector<long>{1, 1, 0, 0, 0});
    CHECK(rep.socle == std::vector<long>{0, 0, 0, 0, 2});
    CHECK(rep.level_ok);
    CHECK(rep.theorem1.ok);
    CHECK(rep.theorem2_ok);
    CHECK(rep.sampled_only);

    // only the endpoints drop below the generic value
    REQUIRE(rep.special_fibers.size() == 2);
    CHECK(!rep.special_fibers[0].lambda.infinity);
    CHECK(rep.special_fibers[0].lambda.value.is_zero());
    CHECK(rep.special_fibers[1].lambda.infinity);
}

TEST_CASE("theorem2 bound fixed values") {
    auto b = theorem2_bound(HilbertSeq({1, 3, 6, 6, 2}, 3));
    CHECK(b[2] == 4);

    b = theorem2_bound(HilbertSeq({1, 2, 3, 3, 2}, 2));
    REQUIRE(b.size() == 5);
    CHECK(b[3] == 2);
}

TEST_CASE("corollary on first partials, generic and degenerate") {
    {
        auto [f, g] = partials_pair_generic(Q);
        SweepOptions opts;
        opts.seed = 2;
        PencilReport rep = sweep(f, g, opts);
        CHECK(rep.corollary.hypotheses_met);
        CHECK(rep.corollary.required == 3);
        CHECK(rep.corollary.generic_partial_count == 3);
        CHECK(rep.corollary.ok);
    }
    {
        auto [f, g] = partials_pair_degenerate(Q);
        SweepOptions opts;
        opts.seed = 2;
        PencilReport rep = sweep(f, g, opts);
        // H(A)_{j-1} = 3 < 2r − 2 = 4: hypotheses fail, verdict vacuous
        CHECK(!rep.corollary.hypotheses_met);
        CHECK(rep.corollary.ok);
        for (const PencilPoint& p : rep.points) CHECK(p.h[3] == 2);
    }
}

TEST_CASE("ghms decomposition of the quartic binary pair") {
    auto [f, g] = quartic_binary_pair(Q);
    FormSpace w({f, g});
    GhmsResult res = ghms_decomposition(w, 0, kDiff);
    CHECK(res.h_b == HilbertSeq({1, 1, 1, 1, 1}, 2));
    CHECK(res.h_c == HilbertSeq({0, 1, 2, 2, 1}, 2));
    CHECK(res.o_seq_ok);

    CHECK_THROWS(ghms_decomposition(FormSpace({f}), 0, kDiff));
}

TEST_CASE("exhaustive sweeps over GF(101) satisfy the bounds") {
    FieldSpec field = FieldSpec::gf(101);
    std::mt19937_64 rng(53);
    int done = 0;
    while (done < 6) {
        int r = 2 + static_cast<int>(rng() % 2);
        int d = 3 + static_cast<int>(rng() % 2);
        Form f = random_form(rng, r, d, field);
        Form g = random_form(rng, r, d, field);
        if (f.is_zero() || g.is_zero()) continue;
        try {
            FormSpace w({f, g});
        } catch (const DependentFormsError&) {
            continue;
        }
        SweepOptions opts;
        PencilReport rep = sweep(f, g, opts);
        ++done;
        CHECK(rep.exhaustive);
        CHECK(rep.points.size() == 102);
        CHECK(rep.theorem1.ok);
        CHECK(rep.theorem2_ok);
        CHECK(rep.level_ok);

        // every fiber Hilbert function is symmetric and capped by H_gen
        for (const PencilPoint& p : rep.points) {
            CHECK(symmetry_check(p.h));
            CHECK(p.h.termwise_le(rep.h_gen));
        }
        for (std::size_t i = 0; i < rep.theorem2_bounds.size(); ++i)
            CHECK(rep.theorem2_bounds[i] <= rep.h_gen[i]);
    }
}

TEST_CASE("sampling over the rationals rejects impossible configurations") {
    auto [f, g] = quartic_binary_pair(Q);
    SweepOptions opts;
    opts.exhaustive = true;
    CHECK_THROWS_AS(sweep(f, g, opts), ConfigError);
}
