#pragma once

#include "apolar/pencil.hpp"

#include <json.hpp>

namespace apolar {

using OrderedJson = nlohmann::ordered_json;

// Stable document, field order fixed:
// H_F, H_G, H_A, d, t, H_gen, special_lambdas, verdicts, sampling.
OrderedJson report_to_json(const PencilReport& report);

OrderedJson hilbert_to_json(const HilbertSeq& h);

}  // namespace apolar
