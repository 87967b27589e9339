#pragma once

#include "apolar/action.hpp"

#include <optional>
#include <string>
#include <vector>

namespace apolar {

// Finite sequence (h_0, …, h_j) with the ambient variable count r kept for
// the dim R_i caps.
struct HilbertSeq {
    std::vector<long> values;
    int r = 0;

    HilbertSeq() = default;
    HilbertSeq(std::vector<long> v, int r) : values(std::move(v)), r(r) {}

    int socle_degree() const { return static_cast<int>(values.size()) - 1; }
    long operator[](std::size_t i) const { return i < values.size() ? values[i] : 0; }

    bool operator==(const HilbertSeq& o) const { return values == o.values; }
    bool operator!=(const HilbertSeq& o) const { return !(*this == o); }

    // Termwise h ≤ o; requires equal length.
    bool termwise_le(const HilbertSeq& o) const;

    std::string to_string() const;  // "1 2 3 3 2"
};

HilbertSeq termwise_max(const HilbertSeq& a, const HilbertSeq& b);

// (H_F)_{j−u} = rank Cat_u(F); symmetric by catalecticant symmetry.
HilbertSeq hilbert_of_form(const Form& f, ActionKind action);

// H(R/Ann W)_{j−u} = dim R_u∘W.
HilbertSeq hilbert_of_space(const FormSpace& w, ActionKind action);

// Overlap d_i = dim ⟨R_u∘F⟩∩⟨R_u∘G⟩ = (H_F)_i + (H_G)_i − H(A)_i, i = j−u.
// Both routes are computed and must agree (SelfCheckError otherwise).
std::vector<long> overlap_dimension(const Form& f, const Form& g, ActionKind action);

// t_i = dim ((Ann F)_u∘G) ∩ ((Ann G)_u∘F), i = j−u.
std::vector<long> t_dimension(const Form& f, const Form& g, ActionKind action);

// (H1 +_h H2)_i = min(dim R_i, (H1)_i + (H2)_i).
HilbertSeq hplus_sum(const HilbertSeq& h1, const HilbertSeq& h2);

struct OSequenceVerdict {
    bool ok = true;
    int first_violation = -1;  // index of the offending entry when !ok
};

// Macaulay growth: h_{d+1} ≤ h_d^⟨d⟩ via the d-th binomial representation.
// Empty and (1) are valid; a nonempty sequence must start with 1.
OSequenceVerdict is_o_sequence(const HilbertSeq& h);

// Growth cap h^⟨d⟩ for h = value in degree d ≥ 1.
long macaulay_growth_bound(long value, int d);

bool symmetry_check(const HilbertSeq& h);

// Maximum Hilbert function for (embedding dim r, type t, socle degree j):
// min(dim R_i, t·dim R_{j−i}).
HilbertSeq compressed_bound(int r, int j, int t);

// Per-degree generator counts of the dual module M = R∘W:
// dim M_i − dim R_1∘M_{i+1}. A type-t level algebra gives (0,…,0,t).
std::vector<long> socle_type(const FormSpace& w, ActionKind action);

// Checks I_i = I_j : R_{j−i} for every 0 < i ≤ j, computing the colon space
// by exact linear algebra and comparing with (Ann W)_i.
bool check_level_condition(const FormSpace& w, ActionKind action);

}  // namespace apolar
