// Command-line front end for the world-fraction library: reads state and
// scenario files, dispatches to the library, and emits JSON/CSV reports.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qfrac/inference.hpp"
#include "qfrac/io.hpp"
#include "qfrac/measure.hpp"
#include "qfrac/worlds.hpp"

using nlohmann::json;

namespace {

// Default seed, fixed so README transcripts reproduce exactly.
constexpr std::uint64_t kDefaultSeed = 1729;

struct Options {
    std::string input;
    std::string output;
    std::string format = "json";
    std::uint64_t seed = kDefaultSeed;
    long long samples = 100000;
    std::string region = "annulus:1:2";
    std::string field = "complex";
    std::string labels;
    std::string coeffs;
};

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("input: cannot open \"" + path + "\"");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("input \"" + path + "\": " + e.what());
    }
    return j;
}

qfrac::RegionSpec parse_region(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    try {
        if (parts.size() == 2 && parts[0] == "ball")
            return qfrac::RegionSpec::ball(std::stod(parts[1]));
        if (parts.size() == 3 && parts[0] == "annulus")
            return qfrac::RegionSpec::annulus(std::stod(parts[1]), std::stod(parts[2]));
        if (parts.size() >= 3 && parts[0] == "box") {
            std::array<double, 4> lo{}, hi{};
            std::size_t n = (parts.size() - 1) / 2;
            for (std::size_t i = 0; i < n; ++i) {
                lo[i] = std::stod(parts[1 + 2 * i]);
                hi[i] = std::stod(parts[2 + 2 * i]);
            }
            return qfrac::RegionSpec::box(lo, hi);
        }
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("region: expected ball:R, annulus:RIN:ROUT or box:LO:HI[:LO:HI...], got \"" +
                                s + "\"");
}

qfrac::StateVector inline_state(const Options& opt) {
    qfrac::FieldKind field = qfrac::field_from_name(opt.field);
    const int d = qfrac::ray_dim(field);
    std::vector<std::string> labels;
    std::stringstream ls(opt.labels);
    std::string tok;
    while (std::getline(ls, tok, ',')) labels.push_back(tok);
    std::vector<qfrac::Scalar> coeffs;
    std::stringstream cs(opt.coeffs);
    while (std::getline(cs, tok, ';')) {
        qfrac::Scalar s = qfrac::Scalar::zero(field);
        std::stringstream comp(tok);
        std::string num;
        int i = 0;
        while (std::getline(comp, num, ',')) {
            if (i >= d)
                throw std::invalid_argument("coeffs: more than " + std::to_string(d) +
                                            " components for " + opt.field + " field");
            s.c[i++] = std::stod(num);
        }
        coeffs.push_back(s);
    }
    return qfrac::StateVector(field, std::move(labels), std::move(coeffs));
}

// State + partition, from --input or inline flags.
std::pair<qfrac::StateVector, qfrac::OrthogonalPartition> load_state(const Options& opt) {
    if (!opt.input.empty()) {
        json j = load_json(opt.input);
        qfrac::StateVector v = qfrac::state_from_json(j);
        qfrac::OrthogonalPartition p = qfrac::partition_from_json(
            j.contains("partition") ? j.at("partition") : json(), v.basis);
        return {std::move(v), std::move(p)};
    }
    if (opt.labels.empty() || opt.coeffs.empty())
        throw std::invalid_argument("state: provide --input or both --labels and --coeffs");
    qfrac::StateVector v = inline_state(opt);
    auto p = qfrac::OrthogonalPartition::discrete(v.basis);
    return {std::move(v), std::move(p)};
}

void emit(const Options& opt, const json& j, const std::string& csv) {
    std::string text = opt.format == "csv" ? csv : j.dump(2) + "\n";
    if (opt.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.output);
        if (!out) throw std::invalid_argument("output: cannot open \"" + opt.output + "\"");
        out << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"World-fraction calculus for branching quantum measurements"};
    app.require_subcommand(1);

    Options opt;
    double fraction = 0.75;
    long long trials = 100;
    double ksigma = 3.0;
    int steps = 1;
    std::string merge_count_of;
    std::string decided;
    std::string outcome;
    std::string scenario_list = "0.0,0.5,0.75";
    std::optional<double> window;
    double target = 0.5;
    long long atoms = 100;
    double window_flag = -1;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--input", opt.input, "Input JSON file");
        c->add_option("--output", opt.output, "Write the report here instead of stdout");
        c->add_option("--format", opt.format, "Report format")
            ->check(CLI::IsMember({"json", "csv"}));
    };
    auto add_state = [&](CLI::App* c) {
        c->add_option("--field", opt.field, "Scalar field for inline states")
            ->check(CLI::IsMember({"real", "complex", "quaternion"}));
        c->add_option("--labels", opt.labels, "Inline basis labels, comma separated");
        c->add_option("--coeffs", opt.coeffs,
                      "Inline coefficients: components comma separated, coefficients ';' separated");
    };
    auto add_mc = [&](CLI::App* c) {
        c->add_option("--seed", opt.seed, "RNG seed (fixed default for reproducibility)");
        c->add_option("--samples", opt.samples, "Monte Carlo sample count")
            ->check(CLI::Range(1000LL, 1000000000LL));
        c->add_option("--region", opt.region, "Sampling region: ball:R, annulus:RIN:ROUT, box:...");
    };

    auto* c_factor = app.add_subcommand("factor", "Analytic and Monte Carlo projection factors");
    add_common(c_factor);
    add_state(c_factor);
    add_mc(c_factor);
    c_factor->add_option("--outcome", outcome, "Restrict the report to one outcome");

    auto* c_pyth = app.add_subcommand("pythagoras", "Check that projection factors sum to 1");
    add_common(c_pyth);
    add_state(c_pyth);
    add_mc(c_pyth);

    auto* c_frac = app.add_subcommand("fractions", "World fractions of a measured state");
    add_common(c_frac);
    add_state(c_frac);

    auto* c_rep = app.add_subcommand("repeat", "World-fraction distribution over N repeats");
    add_common(c_rep);
    c_rep->add_option("--fraction", fraction, "Per-trial up fraction")->check(CLI::Range(0.0, 1.0));
    c_rep->add_option("--trials", trials, "Number of repeats")->check(CLI::Range(1LL, 1000000LL));
    c_rep->add_option("--ksigma", ksigma, "Width of the maverick band in sigmas");

    auto* c_tree = app.add_subcommand("tree", "Branch tree of repeated measurements");
    add_common(c_tree);
    add_state(c_tree);
    c_tree->add_option("--steps", steps, "Number of measurement steps")->check(CLI::Range(1, 20));
    c_tree->add_option("--merge-count-of", merge_count_of,
                       "Coarse-grain leaves by the count of this outcome");

    auto* c_infer = app.add_subcommand("infer", "Credence update from an observed sequence");
    add_common(c_infer);
    c_infer->add_option("--decided", decided, "Also report the misled world fraction");

    auto* c_cmp = app.add_subcommand("compare", "EQM/CQM/NBC support for observed frequencies");
    add_common(c_cmp);
    c_cmp->add_option("--scenarios", scenario_list, "Observed up-frequencies, comma separated");
    c_cmp->add_option("--trials", trials, "Number of repeats")->check(CLI::Range(1LL, 1000000LL));
    c_cmp->add_option("--window", window_flag, "Frequency window; defaults to 2 model sigmas");

    auto* c_half = app.add_subcommand("halflife", "Decay statistics across worlds");
    add_common(c_half);
    c_half->add_option("--target", target, "Per-atom decay fraction");
    c_half->add_option("--atoms", atoms, "Number of atoms")->check(CLI::Range(1LL, 1000000LL));

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_factor->parsed()) {
            auto [v, p] = load_state(opt);
            auto region = parse_region(opt.region);
            auto outcomes = outcome.empty() ? p.outcomes() : std::vector<std::string>{outcome};
            json jout = json::object();
            std::ostringstream csv;
            csv << "outcome,analytic,mc_value,mc_std_error,n\n";
            std::uint64_t stream = 0;
            for (const auto& o : outcomes) {
                double analytic = qfrac::projection_factor_analytic(v, p, o);
                auto mc =
                    qfrac::projection_factor_mc(v, p, o, region, opt.samples, opt.seed + stream++);
                jout[o] = {{"analytic", analytic},
                           {"mc_value", mc.value},
                           {"mc_std_error", mc.std_error},
                           {"n", mc.n_samples}};
                csv << o << "," << qfrac::format_double(analytic) << ","
                    << qfrac::format_double(mc.value) << "," << qfrac::format_double(mc.std_error)
                    << "," << mc.n_samples << "\n";
            }
            emit(opt, jout, csv.str());
        } else if (c_pyth->parsed()) {
            auto [v, p] = load_state(opt);
            auto region = parse_region(opt.region);
            auto rep = qfrac::pythagorean_check(v, p, region, opt.samples, opt.seed);
            emit(opt, qfrac::pythagorean_report_to_json(rep), qfrac::pythagorean_report_to_csv(rep));
            if (rep.deviation > 1e-9) {
                std::cerr << "internal error: analytic factor sum off by " << rep.deviation << "\n";
                return 2;
            }
        } else if (c_frac->parsed()) {
            auto [v, p] = load_state(opt);
            auto t = qfrac::world_fractions(v, p);
            emit(opt, qfrac::fractions_to_json(t), qfrac::fractions_to_csv(t));
        } else if (c_rep->parsed()) {
            auto dist = qfrac::repeat_distribution(fraction, trials);
            json j = qfrac::distribution_to_json(dist);
            j["tail_fraction"] = qfrac::tail_fraction(dist, ksigma);
            j["ksigma"] = ksigma;
            emit(opt, j, qfrac::distribution_to_csv(dist));
        } else if (c_tree->parsed()) {
            auto [v, p] = load_state(opt);
            auto table = qfrac::world_fractions(v, p);
            std::vector<qfrac::FractionTable> per_step(steps, table);
            qfrac::CoarseGrainFn merge = nullptr;
            if (!merge_count_of.empty()) {
                std::string label = merge_count_of;
                merge = [label](const std::vector<std::string>& seq) {
                    long n = std::count(seq.begin(), seq.end(), label);
                    return std::to_string(n);
                };
            }
            auto tree = qfrac::build_branch_tree(per_step, merge);
            emit(opt, qfrac::branch_tree_to_json(tree), qfrac::branch_tree_to_json(tree).dump(2) + "\n");
        } else if (c_infer->parsed()) {
            if (opt.input.empty()) throw std::invalid_argument("infer: --input scenario file required");
            auto scenario = qfrac::scenario_from_json(load_json(opt.input));
            auto posterior = qfrac::update_credence(scenario.hypotheses, scenario.observed);
            json j = {{"posterior", qfrac::credence_to_json(posterior)}};
            for (const auto& [name, f] : posterior.entries)
                if (f == 1.0) j["certain"] = name;
            if (!decided.empty())
                j["misled_fraction"] =
                    qfrac::misled_fraction(scenario.hypotheses, scenario.observed, decided);
            std::ostringstream csv;
            csv << "hypothesis,posterior\n";
            for (const auto& [name, f] : posterior.entries)
                csv << name << "," << qfrac::format_double(f) << "\n";
            emit(opt, j, csv.str());
        } else if (c_cmp->parsed()) {
            std::vector<double> scenarios;
            std::stringstream ss(scenario_list);
            std::string tok;
            while (std::getline(ss, tok, ',')) scenarios.push_back(std::stod(tok));
            if (window_flag >= 0) window = window_flag;
            auto cmp = qfrac::model_compare(scenarios, trials, window);
            emit(opt, qfrac::comparison_to_json(cmp), qfrac::comparison_to_csv(cmp));
        } else if (c_half->parsed()) {
            auto rep = qfrac::half_life_report(target, atoms);
            json j = qfrac::half_life_to_json(rep);
            std::ostringstream csv;
            csv << "n_atoms,target,sigma,within_3sigma,all_decayed\n"
                << rep.n_atoms << "," << qfrac::format_double(rep.target) << ","
                << qfrac::format_double(rep.sigma) << "," << qfrac::format_double(rep.within_3sigma)
                << "," << qfrac::format_double(rep.all_decayed) << "\n";
            emit(opt, j, csv.str());
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
