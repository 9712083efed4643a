#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "braidvar/deodhar.hpp"
#include "braidvar/ruling.hpp"
#include "braidvar/scalar.hpp"
#include "braidvar/variety.hpp"
#include "braidvar/weave.hpp"

namespace braidvar::cli {

using nlohmann::json;

json braid_json(const BraidWord& b);
BraidWord braid_from_json(const json& j);

json ruling_json(const NormalRuling& r);
NormalRuling ruling_from_json(const json& j);

json sequence_json(const DistinguishedSequence& s);

json morphism_json(const Morphism& m);
Morphism morphism_from_json(const json& j);

json report_json(const CountReport& r);
CountReport report_from_json(const json& j);

// Scalars travel as strings in the printed grammar.
json scalars_json(const std::vector<Scalar>& v);
std::vector<Scalar> scalars_from_json(const json& j);

}  // namespace braidvar::cli
