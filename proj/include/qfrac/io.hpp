#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qfrac/inference.hpp"
#include "qfrac/measure.hpp"
#include "qfrac/state.hpp"
#include "qfrac/worlds.hpp"

namespace qfrac {

// Lossless decimal rendering (17 significant digits, '.' decimal point).
std::string format_double(double x);

// State schema: {"field": "real"|"complex"|"quaternion",
//                "basis": [labels], "coeffs": [[components...]]}
StateVector state_from_json(const nlohmann::json& j);
nlohmann::json state_to_json(const StateVector& v);

// Partition schema: {"outcome": [basis labels], ...}. Falls back to one
// singleton group per basis label when absent.
OrthogonalPartition partition_from_json(const nlohmann::json& j,
                                        const std::vector<std::string>& basis);

// Scenario schema: {"hypotheses": [{"name", "prior", "fractions": {label: f}}],
//                   "observed": [labels]}
struct Scenario {
    std::vector<Hypothesis> hypotheses;
    std::vector<std::string> observed;
};
Scenario scenario_from_json(const nlohmann::json& j);

nlohmann::json fractions_to_json(const FractionTable& t);
std::string fractions_to_csv(const FractionTable& t);

nlohmann::json distribution_to_json(const FrequencyDistribution& d);
// One row per count n: n, frequency, fraction. Header row included.
std::string distribution_to_csv(const FrequencyDistribution& d);

nlohmann::json branch_tree_to_json(const BranchTree& t);

nlohmann::json pythagorean_report_to_json(const PythagoreanReport& r);
std::string pythagorean_report_to_csv(const PythagoreanReport& r);

nlohmann::json credence_to_json(const CredenceTable& t);
nlohmann::json comparison_to_json(const ModelComparison& c);
std::string comparison_to_csv(const ModelComparison& c);
nlohmann::json half_life_to_json(const HalfLifeReport& r);
nlohmann::json gleason_to_json(const GleasonReport& r);

}  // namespace qfrac
