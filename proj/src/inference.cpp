#include "qfrac/inference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qfrac {

void validate_hypotheses(const std::vector<Hypothesis>& hs) {
    if (hs.size() < 2) throw std::invalid_argument("hypotheses: need at least two");
    double prior_sum = 0;
    for (const auto& h : hs) {
        if (h.prior_fraction < 0 || h.prior_fraction > 1)
            throw std::invalid_argument("hypothesis \"" + h.name + "\": prior outside [0,1]");
        validate_fractions(h.per_trial_fractions);
        prior_sum += h.prior_fraction;
    }
    if (std::abs(prior_sum - 1.0) > 1e-12)
        throw std::invalid_argument("hypotheses: priors must sum to 1");
}

double CredenceTable::at(const std::string& name) const {
    auto it = entries.find(name);
    if (it == entries.end())
        throw std::invalid_argument("credence: unknown hypothesis \"" + name + "\"");
    return it->second;
}

namespace {

// prior * product of per-trial fractions along the observed sequence: the
// absolute fraction of worlds in this hypothesis showing the observation.
double consistent_fraction(const Hypothesis& h, const std::vector<std::string>& observed) {
    double f = h.prior_fraction;
    for (const auto& o : observed) f *= h.per_trial_fractions.at(o);
    return f;
}

}  // namespace

CredenceTable update_credence(const std::vector<Hypothesis>& hypotheses,
                              const std::vector<std::string>& observed) {
    validate_hypotheses(hypotheses);
    CredenceTable t;
    double total = 0;
    for (const auto& h : hypotheses) {
        double f = consistent_fraction(h, observed);
        t.entries[h.name] = f;
        total += f;
    }
    if (total == 0)
        throw std::invalid_argument("credence: observation has zero fraction under all hypotheses");
    for (auto& [_, f] : t.entries) f /= total;
    return t;
}

double misled_fraction(const std::vector<Hypothesis>& hypotheses,
                       const std::vector<std::string>& observed, const std::string& decided) {
    validate_hypotheses(hypotheses);
    bool found = false;
    double misled = 0, total = 0;
    for (const auto& h : hypotheses) {
        double f = consistent_fraction(h, observed);
        total += f;
        if (h.name == decided)
            found = true;
        else
            misled += f;
    }
    if (!found) throw std::invalid_argument("misled: unknown hypothesis \"" + decided + "\"");
    if (total == 0)
        throw std::invalid_argument("misled: observation has zero fraction under all hypotheses");
    return misled;
}

std::vector<Hypothesis> alice_bob_pair() {
    Hypothesis a_up{"A_up", 0.5, FractionTable{{{"up", 1.0}, {"down", 0.0}}}};
    Hypothesis a_down{"A_down", 0.5, FractionTable{{{"up", 0.5}, {"down", 0.5}}}};
    return {a_up, a_down};
}

CertaintyReport first_down_certainty(const std::vector<std::string>& observed) {
    CertaintyReport rep;
    rep.posterior = update_credence(alice_bob_pair(), observed);
    for (const auto& [name, f] : rep.posterior.entries) {
        if (f == 1.0) {
            rep.certain = true;
            rep.certain_hypothesis = name;
        }
    }
    return rep;
}

ModelComparison model_compare(const std::vector<double>& scenarios, long long N,
                              std::optional<double> window) {
    ModelComparison cmp;
    cmp.N = N;
    const std::vector<std::pair<std::string, double>> models = {
        {"EQM", 0.75}, {"CQM", 0.75}, {"NBC", 0.5}};
    for (double s : scenarios) {
        if (s < 0 || s > 1)
            throw std::invalid_argument("compare: scenario frequency outside [0,1]");
        ScenarioComparison row;
        row.scenario_frequency = s;
        for (const auto& [name, p] : models) {
            FrequencyDistribution dist =
                name == "NBC" ? nbc_distribution(2, N) : repeat_distribution(p, N);
            double w = window ? *window : 2.0 * dist.sigma();
            double support = 0;
            for (long long n = 0; n <= N; ++n) {
                double freq = static_cast<double>(n) / static_cast<double>(N);
                if (std::abs(freq - s) <= w) support += dist.mass[n];
            }
            row.supports.push_back({name, p, w, support});
        }
        std::stable_sort(row.supports.begin(), row.supports.end(),
                         [](const ModelSupport& a, const ModelSupport& b) {
                             return a.support > b.support;
                         });
        cmp.scenarios.push_back(std::move(row));
    }
    return cmp;
}

HalfLifeReport half_life_report(double fraction_decayed_target, long long n_atoms) {
    if (!(fraction_decayed_target > 0) || !(fraction_decayed_target < 1))
        throw std::invalid_argument("half life: target must be strictly between 0 and 1");
    if (n_atoms < 1) throw std::invalid_argument("half life: need at least one atom");
    HalfLifeReport rep;
    rep.n_atoms = n_atoms;
    rep.target = fraction_decayed_target;
    FrequencyDistribution dist = repeat_distribution(fraction_decayed_target, n_atoms);
    rep.sigma = dist.sigma();
    rep.within_3sigma = 1.0 - tail_fraction(dist, 3.0);
    rep.all_decayed = std::pow(fraction_decayed_target, static_cast<double>(n_atoms));
    rep.single_atom.entries = {{"decayed", fraction_decayed_target},
                               {"intact", 1.0 - fraction_decayed_target}};
    return rep;
}

}  // namespace qfrac
