#include "qfrac/io.hpp"

#include <cstdio>
#include <sstream>

namespace qfrac {

using nlohmann::json;

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

const json& require(const json& j, const char* key, const char* ctx) {
    if (!j.contains(key))
        throw std::invalid_argument(std::string(ctx) + ": missing field \"" + key + "\"");
    return j.at(key);
}

}  // namespace

StateVector state_from_json(const json& j) {
    FieldKind field = field_from_name(require(j, "field", "state").get<std::string>());
    const int d = ray_dim(field);
    auto basis = require(j, "basis", "state").get<std::vector<std::string>>();
    const json& jc = require(j, "coeffs", "state");
    if (!jc.is_array() || jc.size() != basis.size())
        throw std::invalid_argument("state.coeffs: expected one component list per basis label");
    std::vector<Scalar> coeffs;
    for (const auto& row : jc) {
        if (!row.is_array() || static_cast<int>(row.size()) != d)
            throw std::invalid_argument("state.coeffs: expected " + std::to_string(d) +
                                        " components for " + field_name(field) + " field");
        Scalar s = Scalar::zero(field);
        for (int i = 0; i < d; ++i) s.c[i] = row.at(i).get<double>();
        coeffs.push_back(s);
    }
    return StateVector(field, std::move(basis), std::move(coeffs));
}

json state_to_json(const StateVector& v) {
    const int d = ray_dim(v.field);
    json jc = json::array();
    for (const auto& c : v.coeffs) {
        json row = json::array();
        for (int i = 0; i < d; ++i) row.push_back(c.c[i]);
        jc.push_back(row);
    }
    return {{"field", field_name(v.field)}, {"basis", v.basis}, {"coeffs", jc}};
}

OrthogonalPartition partition_from_json(const json& j, const std::vector<std::string>& basis) {
    if (j.is_null()) return OrthogonalPartition::discrete(basis);
    if (!j.is_object()) throw std::invalid_argument("partition: expected an object");
    OrthogonalPartition p;
    for (const auto& [outcome, labels] : j.items())
        p.groups[outcome] = labels.get<std::vector<std::string>>();
    validate_partition(p, basis);
    return p;
}

Scenario scenario_from_json(const json& j) {
    Scenario s;
    for (const auto& jh : require(j, "hypotheses", "scenario")) {
        Hypothesis h;
        h.name = require(jh, "name", "hypothesis").get<std::string>();
        h.prior_fraction = require(jh, "prior", "hypothesis").get<double>();
        for (const auto& [label, f] : require(jh, "fractions", "hypothesis").items())
            h.per_trial_fractions.entries[label] = f.get<double>();
        s.hypotheses.push_back(std::move(h));
    }
    s.observed = require(j, "observed", "scenario").get<std::vector<std::string>>();
    validate_hypotheses(s.hypotheses);
    return s;
}

json fractions_to_json(const FractionTable& t) {
    json j = json::object();
    for (const auto& [label, f] : t.entries) j[label] = f;
    return j;
}

std::string fractions_to_csv(const FractionTable& t) {
    std::ostringstream out;
    out << "outcome,fraction\n";
    for (const auto& [label, f] : t.entries) out << label << "," << format_double(f) << "\n";
    return out.str();
}

json distribution_to_json(const FrequencyDistribution& d) {
    json rows = json::array();
    for (long long n = 0; n <= d.N; ++n)
        rows.push_back({{"n", n},
                        {"frequency", static_cast<double>(n) / static_cast<double>(d.N)},
                        {"fraction", d.mass[n]}});
    return {{"N", d.N}, {"p", d.p}, {"sigma", d.sigma()}, {"rows", rows}};
}

std::string distribution_to_csv(const FrequencyDistribution& d) {
    std::ostringstream out;
    out << "n,frequency,fraction\n";
    for (long long n = 0; n <= d.N; ++n)
        out << n << "," << format_double(static_cast<double>(n) / static_cast<double>(d.N)) << ","
            << format_double(d.mass[n]) << "\n";
    return out.str();
}

json branch_tree_to_json(const BranchTree& t) {
    json leaves = json::object();
    for (const auto& [seq, f] : t.leaves()) {
        std::string key;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (i) key += "/";
            key += seq[i];
        }
        leaves[key] = f;
    }
    json j = {{"depth", t.depth}, {"leaves", leaves}};
    if (t.merged) {
        json m = json::object();
        for (const auto& [label, f] : *t.merged) m[label] = f;
        j["merged"] = m;
    }
    return j;
}

json pythagorean_report_to_json(const PythagoreanReport& r) {
    json outcomes = json::object();
    for (const auto& [label, f] : r.factors) {
        json o = {{"analytic", f.analytic}};
        if (f.mc.n_samples > 0 || f.analytic == 0.0) {
            o["mc_value"] = f.mc.value;
            o["mc_std_error"] = f.mc.std_error;
            o["n"] = f.mc.n_samples;
        }
        outcomes[label] = o;
    }
    return {{"outcomes", outcomes},
            {"analytic_sum", r.analytic_sum},
            {"deviation", r.deviation},
            {"region_measure", r.region_measure},
            {"projected_measure_sum", r.projected_sum}};
}

std::string pythagorean_report_to_csv(const PythagoreanReport& r) {
    std::ostringstream out;
    out << "outcome,analytic,mc_value,mc_std_error,n\n";
    for (const auto& [label, f] : r.factors)
        out << label << "," << format_double(f.analytic) << "," << format_double(f.mc.value) << ","
            << format_double(f.mc.std_error) << "," << f.mc.n_samples << "\n";
    return out.str();
}

json credence_to_json(const CredenceTable& t) {
    json j = json::object();
    for (const auto& [name, f] : t.entries) j[name] = f;
    return j;
}

json comparison_to_json(const ModelComparison& c) {
    json rows = json::array();
    for (const auto& row : c.scenarios) {
        json supports = json::array();
        for (const auto& s : row.supports)
            supports.push_back({{"model", s.model},
                                {"per_trial", s.per_trial},
                                {"window", s.window},
                                {"support", s.support}});
        rows.push_back({{"scenario_frequency", row.scenario_frequency}, {"supports", supports}});
    }
    return {{"N", c.N}, {"scenarios", rows}};
}

std::string comparison_to_csv(const ModelComparison& c) {
    std::ostringstream out;
    out << "scenario_frequency,model,per_trial,window,support\n";
    for (const auto& row : c.scenarios)
        for (const auto& s : row.supports)
            out << format_double(row.scenario_frequency) << "," << s.model << ","
                << format_double(s.per_trial) << "," << format_double(s.window) << ","
                << format_double(s.support) << "\n";
    return out.str();
}

json half_life_to_json(const HalfLifeReport& r) {
    return {{"n_atoms", r.n_atoms},
            {"target", r.target},
            {"sigma", r.sigma},
            {"within_3sigma", r.within_3sigma},
            {"all_decayed", r.all_decayed},
            {"single_atom", fractions_to_json(r.single_atom)}};
}

json gleason_to_json(const GleasonReport& r) {
    return {{"field", field_name(r.field)},
            {"coarse_fraction", r.coarse_fraction},
            {"fine_fraction", r.fine_fraction},
            {"shift", r.shift},
            {"depends_on_refinement", r.depends_on_refinement}};
}

}  // namespace qfrac
