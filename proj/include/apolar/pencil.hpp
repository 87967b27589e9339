#pragma once

#include "apolar/hilbert.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace apolar {

// A point of P¹ = K ∪ {∞} indexing the pencil F + λG (∞ ↦ G).
struct Lambda {
    bool infinity = false;
    Scalar value;

    static Lambda at_infinity() { return Lambda{true, Scalar()}; }
    static Lambda finite(Scalar v) { return Lambda{false, std::move(v)}; }

    std::string to_string() const { return infinity ? "inf" : value.to_string(); }
};

Form pencil_member(const Form& f, const Form& g, const Lambda& lambda);

struct PencilPoint {
    Lambda lambda;
    Form member;
    HilbertSeq h;
};

struct Theorem1Margin {
    int u = 0, i = 0;
    long lower_margin = 0;      // (H_gen)_i − (H(A)_u − d_i), ≥ 0 when the bound holds
    long upper_margin_min = 0;  // min over λ∉{0,∞} of (H(A)_u − t_i) − (H_λ)_i
};

struct Theorem1Verdict {
    bool ok = true;
    std::vector<Theorem1Margin> margins;
};

struct CorollaryVerdict {
    bool hypotheses_met = false;
    long generic_partial_count = 0;
    long required = 0;  // r
    bool ok = true;     // vacuously true when hypotheses fail
};

struct SweepOptions {
    std::size_t samples = 8;
    std::uint64_t seed = 0;
    // Exhaustive sweep of all p+1 fibers; only meaningful over GF(p).
    // Defaults to true for p ≤ 257.
    std::optional<bool> exhaustive;
    ActionKind action = ActionKind::Differentiation;
};

struct PencilReport {
    HilbertSeq h_f, h_g, h_a;
    std::vector<long> d, t;  // overlap profile, indices 0..j
    HilbertSeq h_gen;
    std::vector<PencilPoint> points;          // sorted: finite λ ascending, then ∞
    std::vector<PencilPoint> special_fibers;  // points with H strictly below H_gen somewhere
    Theorem1Verdict theorem1;
    std::vector<long> theorem2_bounds;
    bool theorem2_ok = true;  // bounds ≤ H_gen termwise
    CorollaryVerdict corollary;
    std::vector<long> socle;
    bool level_ok = false;

    bool sampled_only = false;        // over ℚ: special fibers only among samples
    bool genericity_warning = false;  // more than 2 non-endpoint samples below H_gen
    bool small_field_caveat = false;  // finite field, most fibers below the max
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    bool exhaustive = false;
    ActionKind action = ActionKind::Differentiation;

    bool all_verdicts_pass() const {
        return theorem1.ok && theorem2_ok && corollary.ok && level_ok;
    }
};

// Full pencil analysis. Over GF(p) with an exhaustive sweep all p+1 fibers are
// computed; otherwise 0, ∞ and `samples` seeded distinct λ. Throws
// ConfigError when the field is too small for the requested sample count.
PencilReport sweep(const Form& f, const Form& g, const SweepOptions& opts);

// Theorem: H(A)_u − d_i ≤ H(A_λgen)_i ≤ H(A)_u − t_i for 0<u<j, i=j−u; the
// upper bound for every λ ∉ {0,∞}.
Theorem1Verdict verify_theorem1(const PencilReport& report);

// Lower bound for H(A_λgen)_i from H(A) alone: for u ≤ i=j−u, with
// δ′_u=(2H(A)_u−2−H(A)_i)/3, bound = H(A)_u − ⌈δ′_u⌉ if δ′_u ≥ 0 else H(A)_u.
// Entries without an admissible u are 0.
std::vector<long> theorem2_bound(const HilbertSeq& h_a);

CorollaryVerdict verify_corollary_partials(const PencilReport& report);

struct GhmsResult {
    HilbertSeq h_b, h_c;
    bool o_seq_ok = false;
};

// H(A) = H(B_V) + H(C) with V spanned by generator `v_index`; the reversed
// nonzero tail of H(C) must be an O-sequence.
GhmsResult ghms_decomposition(const FormSpace& w, std::size_t v_index, ActionKind action);

}  // namespace apolar
