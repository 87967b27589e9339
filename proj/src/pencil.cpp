#include "apolar/pencil.hpp"

#include "apolar/errors.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace apolar {

Form pencil_member(const Form& f, const Form& g, const Lambda& lambda) {
    if (lambda.infinity) return g;
    if (lambda.value.is_zero()) return f;
    return f + g.scaled(lambda.value);
}

namespace {

std::vector<Lambda> sample_lambdas(const FieldSpec& field, const SweepOptions& opts,
                                   bool exhaustive) {
    std::vector<Lambda> lambdas;
    if (exhaustive) {
        for (std::int64_t v = 0; v < field.p; ++v)
            lambdas.push_back(Lambda::finite(Scalar(field, v)));
        lambdas.push_back(Lambda::at_infinity());
        return lambdas;
    }
    if (field.kind == FieldKind::PrimeField) {
        if (static_cast<std::int64_t>(opts.samples) + 2 > field.p + 1) {
            throw ConfigError("field " + field.to_string() + " too small for " +
                              std::to_string(opts.samples) + " samples plus endpoints");
        }
        if (field.p <= 2 * static_cast<std::int64_t>(opts.samples)) {
            throw ConfigError("pencil sampling over " + field.to_string() + " requires p > 2*" +
                              std::to_string(opts.samples));
        }
    }
    lambdas.push_back(Lambda::finite(Scalar::zero(field)));
    lambdas.push_back(Lambda::at_infinity());
    std::mt19937_64 rng(opts.seed);
    std::set<BigRational> used;
    while (used.size() < opts.samples) {
        Scalar v(field);
        if (field.kind == FieldKind::PrimeField) {
            std::uniform_int_distribution<std::int64_t> dist(1, field.p - 1);
            v = Scalar(field, dist(rng));
        } else {
            // Small integers keep coefficient growth in the Bareiss runs tame.
            std::uniform_int_distribution<std::int64_t> dist(-10000, 10000);
            std::int64_t x = dist(rng);
            if (x == 0) continue;
            v = Scalar(field, x);
        }
        if (used.insert(v.value()).second) lambdas.push_back(Lambda::finite(v));
    }
    return lambdas;
}

bool lambda_less(const Lambda& a, const Lambda& b) {
    if (a.infinity != b.infinity) return !a.infinity;  // ∞ sorts last
    if (a.infinity) return false;
    return a.value.value() < b.value.value();
}

bool is_endpoint(const Lambda& l) { return l.infinity || l.value.is_zero(); }

}  // namespace

PencilReport sweep(const Form& f, const Form& g, const SweepOptions& opts) {
    FormSpace w({f, g});  // throws DependentFormsError if dependent
    const FieldSpec field = f.field();
    const int j = f.degree();

    bool exhaustive = false;
    if (field.kind == FieldKind::PrimeField) {
        exhaustive = opts.exhaustive.value_or(field.p <= 257);
    } else if (opts.exhaustive.value_or(false)) {
        throw ConfigError("exhaustive sweep requires a finite field");
    }

    PencilReport report;
    report.action = opts.action;
    report.seed = opts.seed;
    report.samples = opts.samples;
    report.exhaustive = exhaustive;
    report.sampled_only = field.kind == FieldKind::Rationals;

    report.h_f = hilbert_of_form(f, opts.action);
    report.h_g = hilbert_of_form(g, opts.action);
    report.h_a = hilbert_of_space(w, opts.action);
    report.d = overlap_dimension(f, g, opts.action);
    report.t = t_dimension(f, g, opts.action);
    report.socle = socle_type(w, opts.action);
    report.level_ok = check_level_condition(w, opts.action);

    std::vector<Lambda> lambdas = sample_lambdas(field, opts, exhaustive);
    std::sort(lambdas.begin(), lambdas.end(), lambda_less);
    for (const Lambda& l : lambdas) {
        Form member = pencil_member(f, g, l);
        report.points.push_back({l, member, hilbert_of_form(member, opts.action)});
    }

    report.h_gen = report.points.front().h;
    for (const PencilPoint& p : report.points) report.h_gen = termwise_max(report.h_gen, p.h);

    std::size_t attained = 0, deficient_samples = 0;
    for (const PencilPoint& p : report.points) {
        if (p.h == report.h_gen) {
            ++attained;
        } else {
            report.special_fibers.push_back(p);
            if (!is_endpoint(p.lambda)) ++deficient_samples;
        }
    }
    if (!exhaustive) report.genericity_warning = deficient_samples > 2;
    if (field.kind == FieldKind::PrimeField && attained * 2 < report.points.size()) {
        // Most rational points of P¹ miss the max: over a small field the
        // Zariski-generic value may not be attained at all.
        report.small_field_caveat = true;
    }

    report.theorem1 = verify_theorem1(report);
    report.theorem2_bounds = theorem2_bound(report.h_a);
    report.theorem2_ok = true;
    for (int i = 0; i <= j; ++i)
        if (report.theorem2_bounds[i] > report.h_gen[i]) report.theorem2_ok = false;
    report.corollary = verify_corollary_partials(report);
    return report;
}

Theorem1Verdict verify_theorem1(const PencilReport& report) {
    Theorem1Verdict verdict;
    const int j = report.h_a.socle_degree();
    for (int u = 1; u < j; ++u) {
        const int i = j - u;
        Theorem1Margin m;
        m.u = u;
        m.i = i;
        m.lower_margin = report.h_gen[i] - (report.h_a[u] - report.d[i]);
        long upper = report.h_a[u] - report.t[i];
        long min_margin = upper;  // any fiber has H_i ≥ 0
        for (const PencilPoint& p : report.points) {
            if (is_endpoint(p.lambda)) continue;
            min_margin = std::min(min_margin, upper - p.h[i]);
        }
        m.upper_margin_min = min_margin;
        if (m.lower_margin < 0 || m.upper_margin_min < 0) verdict.ok = false;
        verdict.margins.push_back(m);
    }
    return verdict;
}

std::vector<long> theorem2_bound(const HilbertSeq& h_a) {
    const int j = h_a.socle_degree();
    std::vector<long> bounds(j + 1, 0);
    for (int u = 1; 2 * u <= j; ++u) {
        const int i = j - u;
        BigRational delta_prime(2 * h_a[u] - 2 - h_a[i], 3);
        long bound;
        if (delta_prime >= 0) {
            BigInt num = numerator(delta_prime), den = denominator(delta_prime);
            BigInt ceil = (num + den - 1) / den;
            bound = h_a[u] - static_cast<long>(ceil);
        } else {
            bound = h_a[u];
        }
        bounds[i] = std::max(bounds[i], bound);
    }
    return bounds;
}

CorollaryVerdict verify_corollary_partials(const PencilReport& report) {
    CorollaryVerdict v;
    const int j = report.h_a.socle_degree();
    const long r = report.h_a.r;
    v.required = r;
    v.generic_partial_count = report.h_gen[j - 1];
    v.hypotheses_met = report.h_a[j - 1] >= 2 * r - 2 && report.h_a[1] == r;
    v.ok = !v.hypotheses_met || v.generic_partial_count == r;
    return v;
}

GhmsResult ghms_decomposition(const FormSpace& w, std::size_t v_index, ActionKind action) {
    if (w.dim() != 2) throw DimensionMismatchError("ghms_decomposition: need dim W = 2");
    if (v_index >= w.dim()) throw DimensionMismatchError("ghms_decomposition: bad generator index");
    GhmsResult out;
    FormSpace v({w.generators()[v_index]});
    out.h_b = hilbert_of_space(v, action);
    HilbertSeq h_a = hilbert_of_space(w, action);
    out.h_c = h_a;
    for (std::size_t i = 0; i < out.h_c.values.size(); ++i) {
        out.h_c.values[i] -= out.h_b.values[i];
        if (out.h_c.values[i] < 0) {
            throw SelfCheckError("ghms_decomposition: negative entry in H(C) at degree " +
                                 std::to_string(i));
        }
    }
    std::vector<long> rev(out.h_c.values.rbegin(), out.h_c.values.rend());
    while (!rev.empty() && rev.back() == 0) rev.pop_back();
    out.o_seq_ok = is_o_sequence(HilbertSeq(rev, w.vars())).ok;
    return out;
}

}  // namespace apolar
