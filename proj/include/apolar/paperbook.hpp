#pragma once

#include "apolar/pencil.hpp"

#include <string>
#include <utility>
#include <vector>

namespace apolar {

// The golden regression suite: each case pins published sequences as literals
// and recomputes them from scratch. Any drift is a failure.

struct PaperbookConfig {
    FieldSpec field = FieldSpec::rationals();
    ActionKind action = ActionKind::Differentiation;
    std::size_t samples = 8;
    std::uint64_t seed = 0;
    std::optional<bool> exhaustive;
};

enum class CaseStatus { Pass, Fail, Skipped };

struct CaseResult {
    std::string name;
    CaseStatus status = CaseStatus::Pass;
    std::string detail;
};

// Fixed form pairs.
std::pair<Form, Form> quartic_binary_pair(FieldSpec field);          // X⁴, XY³ (r=2)
std::pair<Form, Form> partials_pair_generic(FieldSpec field);        // X⁴+Y⁴, (X+Y)⁴+Z⁴
std::pair<Form, Form> partials_pair_degenerate(FieldSpec field);     // XZ³, YZ³
std::pair<Form, Form> compressed_quartic_pair(FieldSpec field,       // a,b parameters
                                              std::int64_t a = 1, std::int64_t b = 1);

// Seeded "general enough" constructions, validated against the expected
// Hilbert functions with bounded redraws.
std::pair<Form, Form> no_minimum_pair(FieldSpec field, std::uint64_t seed);    // degree 8, r=3
std::pair<Form, Form> sextic_pencil_conic(FieldSpec field, std::uint64_t seed); // H_F=(1,3,5,7,5,3,1), G=L⁶
std::pair<Form, Form> sextic_pencil_binary(FieldSpec field, std::uint64_t seed);// H_F=H_G=(1,2,3,4,3,2,1)

std::vector<CaseResult> run_paperbook(const PaperbookConfig& config);

}  // namespace apolar
