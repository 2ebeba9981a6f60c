#pragma once

#include <string>

#include "json.hpp"

#include "tsallisq/axioms.hpp"
#include "tsallisq/quantum.hpp"
#include "tsallisq/werner.hpp"

namespace tsq {

using nlohmann::json;

// Shortest decimal form with the given significant digits (printf %g rules),
// rendered through std::to_chars so the bytes are locale-independent and
// identical across runs. Machine-readable output (JSON, CSV) carries 12
// significant digits; tables carry 6.
std::string format_sig(double v, int digits);
double round_sig(double v, int digits = 12);

// Bipartite state file: {"dA", "dB", "re", "im"} with re/im as
// (dA*dB) x (dA*dB) nested arrays in the k = a*dB + b index convention.
json state_to_json(const BipartiteState& s);
BipartiteState state_from_json(const json& j);

// Shared-basis ensemble file: {"dA", "dB", "weights", "p_a", "p_b"} plus
// optional {"basis_a", "basis_b"} as {"re", "im"} blocks (identity bases
// when absent).
json ensemble_to_json(const SeparableEnsemble& e);
SeparableEnsemble ensemble_from_json(const json& j);

// Probability vectors and joint tables are plain (nested) arrays.
ProbDist dist_from_json(const json& j);
JointDist joint_from_json(const json& j);

json to_json(const ConditionalEntropyReport& r);
json to_json(const PptVerdict& v);
json to_json(const ThresholdPoint& p);
json to_json(const CriterionTable& t);
json to_json(const AxiomReport& r);
json to_json(const PositivitySummary& s);

}  // namespace tsq
