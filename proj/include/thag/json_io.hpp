#pragma once

#include "thag/bischur.hpp"
#include "thag/closed_forms.hpp"
#include "thag/intpoly.hpp"
#include "thag/positivity.hpp"

#include <json.hpp>

namespace thag {

// [{"t": k, "terms": [{"lambda": [...], "mu": [...], "coeff": c}]}, ...],
// t ascending, terms by descending (lambda, mu); ordering is bit-exact for
// golden files.
nlohmann::ordered_json graded_to_json(const GradedBiSchur& g);
GradedBiSchur graded_from_json(const nlohmann::json& j);

// {"coeffs": [c0, c1, ...]} ascending, empty array for zero.
nlohmann::ordered_json intpoly_to_json(const IntPoly& p);
IntPoly intpoly_from_json(const nlohmann::json& j);

nlohmann::ordered_json witness_to_json(const PositivityWitness& w);
// [{"n":..,"i":..,"j":..,"variant":"p"|"q","positive":..}, ...] with
// "witness" and "classification" present on failing entries only.
nlohmann::ordered_json ilc_report_to_json(const IlcReport& r);

nlohmann::ordered_json series_report_to_json(const SeriesReport& r);

} // namespace thag
