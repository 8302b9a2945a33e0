#pragma once

// JSON forms of the library's values. Writers are deterministic; every
// reader inverts its writer exactly.
//
//   polynomial    [{"c": "p/q", "e": [n1, ..., nk]}, ...] in canonical order
//   presentation  {"n": int, "k": int, "relations": [polynomial, ...]}
//   verdict       {"kind", "complete", "solutions", "log"}
//   theorem       {"conclusion", "rule", "trace", "note"}

#include <json.hpp>

#include "grasscoh/homsearch.hpp"
#include "grasscoh/slices.hpp"
#include "grasscoh/solver.hpp"
#include "grasscoh/theorems.hpp"

namespace grasscoh {

using Json = nlohmann::ordered_json;

Json to_json(const Polynomial& p);
/// nvars is needed for the zero polynomial; otherwise it must match.
Polynomial polynomial_from_json(const Json& j, std::size_t nvars);

Json to_json(const Presentation& pres);
Presentation presentation_from_json(const Json& j);

Json to_json(const ConstraintSystem& sys);
ConstraintSystem constraint_system_from_json(const Json& j);

Json to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

Json to_json(const TheoremVerdict& v);
TheoremVerdict theorem_verdict_from_json(const Json& j);

Json to_json(const HilbertCertificate& c);

/// Two-space indentation, trailing newline.
std::string dump(const Json& j);

}  // namespace grasscoh
