#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfrac/worlds.hpp"

namespace qfrac {

// A branching hypothesis: the fraction of all worlds it occupies and the
// per-measurement world fractions it assigns.
struct Hypothesis {
    std::string name;
    double prior_fraction = 0;
    FractionTable per_trial_fractions;
};

void validate_hypotheses(const std::vector<Hypothesis>& hs);

struct CredenceTable {
    std::map<std::string, double> entries;

    double at(const std::string& name) const;
};

// Posterior credence as a fraction of worlds: among all worlds consistent
// with the observed sequence, the fraction lying in each hypothesis' branch.
CredenceTable update_credence(const std::vector<Hypothesis>& hypotheses,
                              const std::vector<std::string>& observed);

// Fraction of ALL worlds (not conditioned on the observation) that produce
// the observation yet lie outside the decided hypothesis.
double misled_fraction(const std::vector<Hypothesis>& hypotheses,
                       const std::vector<std::string>& observed, const std::string& decided);

// The Alice/Bob pair: in half of all worlds Alice prepares |up> (every later
// measurement is up), in the other half |up>+|down> (fifty-fifty per trial).
std::vector<Hypothesis> alice_bob_pair();

struct CertaintyReport {
    CredenceTable posterior;
    bool certain = false;            // one hypothesis holds all consistent worlds
    std::string certain_hypothesis;  // set when certain
};

// Alice/Bob inference on an up/down sequence: a single "down" pins Bob to
// the |up>+|down> branch with certainty.
CertaintyReport first_down_certainty(const std::vector<std::string>& observed);

struct ModelSupport {
    std::string model;  // "EQM", "CQM", "NBC"
    double per_trial = 0;
    double window = 0;
    double support = 0;  // world fraction / probability inside the window
};

struct ScenarioComparison {
    double scenario_frequency = 0;
    std::vector<ModelSupport> supports;  // ordered by decreasing support
};

struct ModelComparison {
    long long N = 0;
    std::vector<ScenarioComparison> scenarios;
};

// Support of EQM world fractions (0.75), CQM probabilities (0.75) and NBC
// counting (0.5) for observed up-frequencies: mass within +-window of the
// scenario frequency under each model's distribution. Without an explicit
// window each model uses 2 of its own sigmas.
ModelComparison model_compare(const std::vector<double>& scenarios, long long N,
                              std::optional<double> window = std::nullopt);

struct HalfLifeReport {
    long long n_atoms = 0;
    double target = 0;
    double sigma = 0;
    double within_3sigma = 0;     // fraction of worlds with decay count within 3 sigma
    double all_decayed = 0;       // target^n_atoms
    FractionTable single_atom;    // {decayed, intact} for one atom
};

// Each atom branches independently with decay fraction = target.
HalfLifeReport half_life_report(double fraction_decayed_target, long long n_atoms);

}  // namespace qfrac
