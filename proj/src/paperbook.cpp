#include "apolar/paperbook.hpp"

#include "apolar/errors.hpp"

#include <random>
#include <sstream>

namespace apolar {

namespace {

Form form_of(const std::string& text, int r, FieldSpec field) {
    return parse_form(text, r, field);
}

Form power(const Form& base, int n) {
    Form out = base;
    for (int k = 1; k < n; ++k) out = multiply(out, base);
    return out;
}

Form linear_form(const std::vector<std::int64_t>& coeffs, FieldSpec field) {
    int r = static_cast<int>(coeffs.size());
    Form l(r, 1, field);
    for (int k = 0; k < r; ++k) {
        Exponents e(r, 0);
        e[k] = 1;
        l.add_term(e, Scalar(field, coeffs[k]));
    }
    return l;
}

constexpr int kMaxRedraws = 16;

}  // namespace

std::pair<Form, Form> quartic_binary_pair(FieldSpec field) {
    return {form_of("X^4", 2, field), form_of("X*Y^3", 2, field)};
}

std::pair<Form, Form> partials_pair_generic(FieldSpec field) {
    Form f = form_of("X^4+Y^4", 3, field);
    Form g = power(form_of("X+Y", 3, field), 4) + form_of("Z^4", 3, field);
    return {f, g};
}

std::pair<Form, Form> partials_pair_degenerate(FieldSpec field) {
    return {form_of("X*Z^3", 3, field), form_of("Y*Z^3", 3, field)};
}

std::pair<Form, Form> compressed_quartic_pair(FieldSpec field, std::int64_t a, std::int64_t b) {
    std::ostringstream fs, gs;
    fs << "X^3*Y + X^2*Z^2 + " << a << "*X*Z^3 + " << b << "*Y*Z^3";
    gs << "X^3*Z + X^2*Y^2 + X^2*Y*Z + " << 3 * a << "*X*Y^2*Z + " << b << "*Y^3*Z";
    return {form_of(fs.str(), 3, field), form_of(gs.str(), 3, field)};
}

std::pair<Form, Form> no_minimum_pair(FieldSpec field, std::uint64_t seed) {
    Form g = form_of("X^8 + Y^4*Z^4", 3, field);
    const HilbertSeq expected({1, 3, 5, 5, 5, 5, 5, 3, 1}, 3);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> coeff(-9, 9);
    for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
        Form f(3, 8, field);
        for (int i = 0; i < 5; ++i) {
            std::vector<std::int64_t> c(3);
            do {
                for (auto& x : c) x = coeff(rng);
            } while (c[0] == 0 && c[1] == 0 && c[2] == 0);
            f = f + power(linear_form(c, field), 8);
        }
        if (!f.is_zero() && hilbert_of_form(f, ActionKind::Differentiation) == expected)
            return {f, g};
    }
    throw SelfCheckError("no_minimum_pair: could not draw general enough linear forms");
}

std::pair<Form, Form> sextic_pencil_conic(FieldSpec field, std::uint64_t seed) {
    const HilbertSeq expected_f({1, 3, 5, 7, 5, 3, 1}, 3);
    const HilbertSeq expected_a({1, 3, 6, 8, 6, 4, 2}, 3);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> tval(-20, 20);
    std::uniform_int_distribution<std::int64_t> coeff(-9, 9);
    for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
        // Seven distinct points on the rational normal conic (1, t, t²):
        // gives H_Z = (1,3,5,7,7,…), hence H_F = (1,3,5,7,5,3,1).
        std::vector<std::int64_t> ts;
        while (ts.size() < 7) {
            std::int64_t t = tval(rng);
            bool fresh = true;
            for (std::int64_t s : ts) fresh = fresh && s != t;
            if (fresh) ts.push_back(t);
        }
        Form f(3, 6, field);
        for (std::int64_t t : ts) f = f + power(linear_form({1, t, t * t}, field), 6);
        std::vector<std::int64_t> lc(3);
        do {
            for (auto& x : lc) x = coeff(rng);
        } while (lc[0] == 0 || lc[1] == 0 || lc[2] == 0);
        Form g = power(linear_form(lc, field), 6);
        if (f.is_zero()) continue;
        if (hilbert_of_form(f, ActionKind::Differentiation) != expected_f) continue;
        FormSpace w({f, g});
        if (hilbert_of_space(w, ActionKind::Differentiation) == expected_a) return {f, g};
    }
    throw SelfCheckError("sextic_pencil_conic: could not draw general enough forms");
}

std::pair<Form, Form> sextic_pencil_binary(FieldSpec field, std::uint64_t seed) {
    const HilbertSeq expected_fg({1, 2, 3, 4, 3, 2, 1}, 3);
    // The planes <X,Y> and <X+Y,Z> meet in the line L = X+Y, so L^u lies in
    // both derivative spaces and d = (1,1,1,1,0,0,0); the sum of the two
    // inverse systems can therefore never reach (1,3,6,8,...).
    const HilbertSeq expected_a({1, 3, 5, 7, 6, 4, 2}, 3);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> coeff(-9, 9);
    Form xy = form_of("X+Y", 3, field);
    for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
        // F general in K[X,Y]_6, G general in K[X+Y,Z]_6.
        Form f(3, 6, field);
        for (int k = 0; k <= 6; ++k) {
            Exponents e = {k, 6 - k, 0};
            f.add_term(e, Scalar(field, coeff(rng)));
        }
        Form g(3, 6, field);
        for (int k = 0; k <= 6; ++k) {
            Form term = k == 0 ? form_of("Z^6", 3, field)
                               : (k == 6 ? power(xy, 6)
                                         : multiply(power(xy, k), power(form_of("Z", 3, field),
                                                                        6 - k)));
            g = g + term.scaled(Scalar(field, coeff(rng)));
        }
        if (f.is_zero() || g.is_zero()) continue;
        if (hilbert_of_form(f, ActionKind::Differentiation) != expected_fg) continue;
        if (hilbert_of_form(g, ActionKind::Differentiation) != expected_fg) continue;
        FormSpace w({f, g});
        if (hilbert_of_space(w, ActionKind::Differentiation) == expected_a) return {f, g};
    }
    throw SelfCheckError("sextic_pencil_binary: could not draw general enough forms");
}

namespace {

struct CaseRunner {
    const PaperbookConfig& config;
    std::vector<CaseResult> results;

    SweepOptions sweep_options() const {
        SweepOptions o;
        o.samples = config.samples;
        o.seed = config.seed;
        o.exhaustive = config.exhaustive;
        o.action = config.action;
        return o;
    }

    template <typename Fn>
    void run(const std::string& name, Fn&& body) {
        CaseResult r;
        r.name = name;
        try {
            std::string detail;
            bool ok = body(detail);
            r.status = ok ? CaseStatus::Pass : CaseStatus::Fail;
            r.detail = detail;
        } catch (const ConfigError& e) {
            r.status = CaseStatus::Skipped;
            r.detail = e.what();
        } catch (const std::exception& e) {
            r.status = CaseStatus::Fail;
            r.detail = e.what();
        }
        results.push_back(std::move(r));
    }
};

bool expect(bool cond, const std::string& msg, std::string& detail) {
    if (!cond && detail.empty()) detail = msg;
    return cond;
}

bool seq_is(const HilbertSeq& got, std::vector<long> want, const std::string& label,
            std::string& detail) {
    if (got.values == want) return true;
    if (detail.empty()) detail = label + " = (" + got.to_string() + ")";
    return false;
}

}  // namespace

std::vector<CaseResult> run_paperbook(const PaperbookConfig& config) {
    CaseRunner runner{config, {}};
    const FieldSpec field = config.field;
    const ActionKind action = config.action;

    runner.run("quartic-binary-pencil", [&](std::string& detail) {
        auto [f, g] = quartic_binary_pair(field);
        PencilReport rep = sweep(f, g, runner.sweep_options());
        bool ok = seq_is(rep.h_f, {1, 1, 1, 1, 1}, "H_F", detail) &&
                  seq_is(rep.h_g, {1, 2, 2, 2, 1}, "H_G", detail) &&
                  seq_is(rep.h_a, {1, 2, 3, 3, 2}, "H(A)", detail) &&
                  seq_is(rep.h_gen, {1, 2, 3, 2, 1}, "H_gen", detail);
        // Special fibers must be exactly λ=0 and λ=∞.
        ok = ok && expect(rep.special_fibers.size() == 2, "special fiber count", detail);
        if (ok) {
            bool zero = false, inf = false;
            for (const PencilPoint& p : rep.special_fibers) {
                if (p.lambda.infinity) inf = true;
                else if (p.lambda.value.is_zero()) zero = true;
            }
            ok = expect(zero && inf, "special fibers are {0, inf}", detail);
        }
        FormSpace w({f, g});
        std::vector<Operator> ann3 = annihilator_component_forms(w, 3, action);
        ok = ok && expect(ann3.size() == 1, "(Ann W)_3 dimension", detail);
        if (ok) {
            Exponents x2y = {2, 1};
            ok = expect(ann3[0].terms().size() == 1 &&
                            ann3[0].terms().begin()->first == x2y,
                        "(Ann W)_3 spanned by x^2*y", detail);
        }
        return ok;
    });

    runner.run("first-partials-generic", [&](std::string& detail) {
        auto [f, g] = partials_pair_generic(field);
        PencilReport rep = sweep(f, g, runner.sweep_options());
        bool ok = expect(rep.corollary.hypotheses_met, "corollary hypotheses", detail) &&
                  expect(rep.corollary.generic_partial_count == 3, "generic partial count", detail) &&
                  expect(rep.corollary.ok, "corollary verdict", detail);
        // λ=0 is the only non-∞ fiber short of 3 first partials.
        const int j = rep.h_a.socle_degree();
        for (const PencilPoint& p : rep.points) {
            if (p.lambda.infinity) continue;
            bool deficient = p.h[j - 1] < 3;
            bool is_zero = p.lambda.value.is_zero();
            ok = ok && expect(deficient == is_zero, "deficient fiber set", detail);
        }
        return ok;
    });

    runner.run("first-partials-degenerate", [&](std::string& detail) {
        auto [f, g] = partials_pair_degenerate(field);
        PencilReport rep = sweep(f, g, runner.sweep_options());
        bool ok = expect(!rep.corollary.hypotheses_met, "hypotheses should fail", detail) &&
                  expect(rep.corollary.ok, "vacuous verdict", detail) &&
                  expect(rep.corollary.generic_partial_count == 2, "generic partial count", detail);
        const int j = rep.h_a.socle_degree();
        for (const PencilPoint& p : rep.points)
            ok = ok && expect(p.h[j - 1] == 2, "every fiber has 2 first partials", detail);
        ok = ok && expect(rep.t[3] == 1, "t_3", detail);
        return ok;
    });

    runner.run("no-minimum-fiber", [&](std::string& detail) {
        auto [f, g] = no_minimum_pair(field, config.seed);
        PencilReport rep = sweep(f, g, runner.sweep_options());
        bool ok = seq_is(rep.h_f, {1, 3, 5, 5, 5, 5, 5, 3, 1}, "H_F", detail) &&
                  seq_is(rep.h_g, {1, 3, 4, 5, 6, 5, 4, 3, 1}, "H_G", detail) &&
                  seq_is(rep.h_a, {1, 3, 6, 10, 11, 10, 9, 6, 2}, "H(A)", detail) &&
                  seq_is(rep.h_gen, {1, 3, 6, 10, 11, 10, 6, 3, 1}, "H_gen", detail);
        ok = ok && expect(rep.h_a == hplus_sum(rep.h_f, rep.h_g), "H(A) = H_F +_h H_G", detail);
        ok = ok && expect(!rep.h_f.termwise_le(rep.h_g) && !rep.h_g.termwise_le(rep.h_f),
                          "H_F, H_G incomparable", detail);
        for (const PencilPoint& p : rep.points) {
            bool minimum = true;
            for (const PencilPoint& q : rep.points) minimum = minimum && p.h.termwise_le(q.h);
            ok = ok && expect(!minimum, "no termwise-minimum fiber", detail);
        }
        return ok;
    });

    runner.run("ghms-rejection", [&](std::string& detail) {
        // Candidate H=(1,3,6,8,4,2) with socle degree 5 violates
        // H ≤ compressed(3,5,1) +_h (1,1,1,1,1,1).
        HilbertSeq candidate({1, 3, 6, 8, 4, 2}, 3);
        HilbertSeq cap = hplus_sum(compressed_bound(3, 5, 1), HilbertSeq({1, 1, 1, 1, 1, 1}, 3));
        bool ok = seq_is(cap, {1, 3, 6, 7, 4, 2}, "GHMS cap", detail);
        int flagged = -1;
        for (std::size_t i = 0; i < candidate.values.size(); ++i) {
            if (candidate.values[i] > cap.values[i]) {
                flagged = static_cast<int>(i);
                break;
            }
        }
        return ok && expect(flagged == 3, "violation flagged at index 3", detail);
    });

    runner.run("sextic-conic-plus-power", [&](std::string& detail) {
        auto [f, g] = sextic_pencil_conic(field, config.seed);
        PencilReport rep = sweep(f, g, runner.sweep_options());
        bool ok = seq_is(rep.h_a, {1, 3, 6, 8, 6, 4, 2}, "H(A)", detail) &&
                  seq_is(rep.h_gen, {1, 3, 6, 8, 6, 3, 1}, "H_gen", detail);
        bool has_power_fiber = false;
        for (const PencilPoint& p : rep.points)
            has_power_fiber = has_power_fiber || p.h.values == std::vector<long>(7, 1);
        ok = ok && expect(has_power_fiber, "fiber with H=(1,1,1,1,1,1,1)", detail);
        return ok;
    });

    runner.run("sextic-two-binary", [&](std::string& detail) {
        auto [f, g] = sextic_pencil_binary(field, config.seed);
        PencilReport rep = sweep(f, g, runner.sweep_options());
        bool ok = seq_is(rep.h_a, {1, 3, 5, 7, 6, 4, 2}, "H(A)", detail) &&
                  seq_is(rep.h_gen, {1, 3, 5, 7, 5, 3, 1}, "H_gen", detail);
        for (const PencilPoint& p : rep.points)
            ok = ok && expect(p.h.values != std::vector<long>(7, 1),
                              "no fiber with H=(1,1,1,1,1,1,1)", detail);
        return ok;
    });

    runner.run("compressed-not-compressed", [&](std::string& detail) {
        if (action != ActionKind::Differentiation) {
            throw ConfigError("membership identity (y^2-lambda*z^2) requires the "
                              "differentiation action");
        }
        auto [f, g] = compressed_quartic_pair(field, 1, 1);
        PencilReport rep = sweep(f, g, runner.sweep_options());
        bool ok = seq_is(rep.h_a, {1, 3, 6, 6, 2}, "H(A)", detail) &&
                  expect(rep.h_a == compressed_bound(3, 4, 2), "H(A) compressed", detail) &&
                  seq_is(rep.h_gen, {1, 3, 5, 3, 1}, "H_gen", detail) &&
                  expect(rep.h_gen != compressed_bound(3, 4, 1), "H_gen not compressed", detail);
        // (y² − λz²)∘(F + λG) = 0 at three sampled λ.
        int checked = 0;
        for (const PencilPoint& p : rep.points) {
            if (p.lambda.infinity || p.lambda.value.is_zero()) continue;
            Operator q(3, 2, field);
            q.add_term({0, 2, 0}, Scalar::one(field));
            q.add_term({0, 0, 2}, -p.lambda.value);
            ok = ok && expect(apply(q, p.member, ActionKind::Differentiation).is_zero(),
                              "membership (y^2-lambda*z^2)", detail);
            if (++checked == 3) break;
        }
        ok = ok && expect(checked == 3, "three sampled lambdas", detail);
        std::vector<long> t2 = theorem2_bound(rep.h_a);
        ok = ok && expect(t2[2] == 4, "theorem-2 bound at u=i=2", detail) &&
             expect(t2[2] <= rep.h_gen[2] && rep.h_gen[2] == 5, "bound below H_gen", detail);
        return ok;
    });

    return runner.results;
}

}  // namespace apolar
