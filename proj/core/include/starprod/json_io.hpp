#pragma once

#include "starprod/cocycle.hpp"
#include "starprod/equivalence.hpp"
#include "starprod/matrix.hpp"
#include "starprod/modefield.hpp"
#include "starprod/report.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace starprod {

/// JSON wire formats.
///
/// Complex scalar:   {"re": <double>, "im": <double>}
/// Cocycle:          {"m": <int>, "theta": [[complex]], "beta": {"<k0>,<k1>,...": complex}}
///   theta is m x m and must be antisymmetric; beta keys are comma-joined
///   exponent multi-indices of length m with a vanishing constant term.
/// Mode field:       {"m": <int>, "modes": [{"freq": ["n/d", ...], "coeff": complex}]}
/// Gauge:            {"m": <int>, "beta": {...}} with the same beta encoding.
///
/// Loading throws InputError for malformed documents (wrong types, bad
/// rationals, ragged arrays) and ValidationError for well-formed documents
/// describing invalid objects (non-antisymmetric theta, constant term in
/// beta, degree cap exceeded).

nlohmann::json complex_to_json(const Complex& z);
Complex complex_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json cocycle_to_json(const StarCocycle& cocycle);
StarCocycle cocycle_from_json(const nlohmann::json& j);

nlohmann::json modefield_to_json(const ModeField& field);
ModeField modefield_from_json(const nlohmann::json& j);

nlohmann::json gauge_to_json(const GaugeCochain& gauge);
GaugeCochain gauge_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const Report& report);

/// File helpers; InputError when the file cannot be read or parsed.
nlohmann::json load_json_file(const std::string& path);
StarCocycle load_cocycle(const std::string& path);
ModeField load_modefield(const std::string& path);
GaugeCochain load_gauge(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace starprod
