#pragma once

#include <string>

#include <json.hpp>

#include "qqo/channel.hpp"
#include "qqo/positivity.hpp"
#include "qqo/purity.hpp"
#include "qqo/qmap.hpp"

namespace qqo {

using Json = nlohmann::ordered_json;

/// OperatorConfig: {"b": [3], "B1": [3][3], "B2": [3][3], "T": [3][3][3]},
/// T indexed [m][l][i], every field optional (zeros). Throws
/// Error(ParseError) naming the line/column or the offending field.
DeltaCoefficients parse_operator_config(const std::string& text);
DeltaCoefficients load_operator_config(const std::string& path);
Json operator_config_json(const DeltaCoefficients& d);

/// {"a": [3], "b": [3], "c": [3], "A": [3], "B": [3], "Gamma": [3],
///  "d": [3], "e": [3], "g": [3]}, every field optional.
QuadraticMapCoeffs parse_qmap_json(const std::string& text);
Json qmap_json(const QuadraticMapCoeffs& v);

Json certificate_json(const CertificateReport& r);
Json sphere_oracle_json(const SphereOracleResult& r);
Json positivity_json(const PositivityVerdict& p);

}  // namespace qqo
