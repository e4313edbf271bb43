#pragma once

// Machine-readable reports. Node and column labels are 1-based; vectors of a
// refined grid chain are written in original tick units (e.g. 2.5).

#include "maxmin/conformism.hpp"
#include "maxmin/robustness.hpp"
#include "maxmin/solver.hpp"
#include "maxmin/spectral.hpp"

#include <nlohmann/json.hpp>

namespace maxmin::io {

using nlohmann::json;

json eigen_to_json(const Matrix<Tick>& a, const GreatestEigenvector<Tick>& g, const Aggregates<Tick>& agg);

json orbit_to_json(const OrbitSummary<Tick>& o);
OrbitSummary<Tick> orbit_from_json(const json& j);

json conformism_to_json(const ConformismReport<Tick>& r);
ConformismReport<Tick> conformism_from_json(const json& j);

json solve_to_json(const SolveReport<Tick>& r);
SolveReport<Tick> solve_from_json(const json& j);

json robustness_to_json(const RobustnessReport<Tick>& r);
RobustnessReport<Tick> robustness_from_json(const json& j);

/// Refined-chain vector in original units: integers when exact, else decimals.
json refined_to_json(const Vector<Tick>& v, Tick factor);
Vector<Tick> refined_from_json(const json& j, Tick top, Tick factor);

}  // namespace maxmin::io
