#pragma once

#include "nilcoh/cocycle.hpp"
#include "nilcoh/group.hpp"
#include "nilcoh/report.hpp"
#include "nilcoh/simplicity.hpp"

#include <json.hpp>

#include <string>

namespace nilcoh {

using Json = nlohmann::ordered_json;

// Wire formats. Integers travel as decimal strings so that arbitrary
// precision survives JSON; rationals as "p/q" in lowest terms.

Json element_to_json(const GroupElement& r);
GroupElement element_from_json(const Json& j);

Json exponent_to_json(const CircleExponent& x);
CircleExponent exponent_from_json(const Json& j);

Json params_to_json(const CocycleParams& params);
CocycleParams params_from_json(const Json& j);
CocycleParams load_params_file(const std::string& path);

Json matrix_to_json(const IntegerMatrix& m);
IntegerMatrix matrix_from_json(const Json& j);
IntegerMatrix load_matrix_file(const std::string& path);

Json lattice_to_json(const LatticeBasis& basis);

Json certificate_to_json(const SimplicityCertificate& cert);
SimplicityCertificate certificate_from_json(const Json& j);

Json report_to_json(const Report& report);

Json parse_json_text(const std::string& text, const std::string& what);
Json load_json_file(const std::string& path);

}  // namespace nilcoh
