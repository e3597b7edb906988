#include "qfrac/worlds.hpp"

#include <cmath>
#include <stdexcept>

namespace qfrac {

double FractionTable::at(const std::string& outcome) const {
    auto it = entries.find(outcome);
    if (it == entries.end())
        throw std::invalid_argument("fractions: unknown outcome \"" + outcome + "\"");
    return it->second;
}

void validate_fractions(const FractionTable& t, double tol) {
    double sum = 0;
    for (const auto& [label, f] : t.entries) {
        if (f < 0 || f > 1)
            throw std::invalid_argument("fractions: entry \"" + label + "\" outside [0,1]");
        sum += f;
    }
    if (std::abs(sum - 1.0) > tol)
        throw std::invalid_argument("fractions: entries do not sum to 1");
}

FractionTable world_fractions(const StateVector& v, const OrthogonalPartition& partition) {
    if (v.is_zero()) throw std::invalid_argument("world fractions: zero vector");
    validate_partition(partition, v.basis);
    const int d = ray_dim(v.field);
    FractionTable t;
    double denom = 0;
    for (const auto& outcome : partition.outcomes()) {
        double x = std::pow(norm(project(v, partition, outcome)), d);
        t.entries[outcome] = x;
        denom += x;
    }
    for (auto& [_, f] : t.entries) f /= denom;
    return t;
}

GleasonReport gleason_dependence_demo(FieldKind field) {
    // psi1 = (1,0,0), psi2 = (0,1,1)/sqrt(2); the fine partition splits psi2
    // orthogonally into its two components.
    const double h = 1.0 / std::sqrt(2.0);
    StateVector psi(field, {"a", "b", "c"},
                    {Scalar::one(field),
                     [&] { Scalar s = Scalar::zero(field); s.c[0] = h; return s; }(),
                     [&] { Scalar s = Scalar::zero(field); s.c[0] = h; return s; }()});
    OrthogonalPartition coarse;
    coarse.groups = {{"first", {"a"}}, {"rest", {"b", "c"}}};
    OrthogonalPartition fine;
    fine.groups = {{"first", {"a"}}, {"restB", {"b"}}, {"restC", {"c"}}};

    GleasonReport rep;
    rep.field = field;
    rep.coarse_fraction = world_fractions(psi, coarse).at("first");
    rep.fine_fraction = world_fractions(psi, fine).at("first");
    rep.shift = std::abs(rep.coarse_fraction - rep.fine_fraction);
    rep.depends_on_refinement = rep.shift > 1e-9;
    return rep;
}

double FrequencyDistribution::sigma() const { return std::sqrt(frequency_variance()); }

FrequencyDistribution repeat_distribution(double f, long long N) {
    if (f < 0 || f > 1) throw std::invalid_argument("repeat: fraction must be in [0,1]");
    if (N < 1 || N > 1000000) throw std::invalid_argument("repeat: N must be in [1, 10^6]");
    FrequencyDistribution dist;
    dist.N = N;
    dist.p = f;
    dist.mass.assign(static_cast<std::size_t>(N) + 1, 0.0);
    if (f == 0) {
        dist.mass[0] = 1;
        return dist;
    }
    if (f == 1) {
        dist.mass[N] = 1;
        return dist;
    }
    const double lf = std::log(f), lg = std::log1p(-f);
    const double lgn = std::lgamma(static_cast<double>(N) + 1);
    for (long long n = 0; n <= N; ++n) {
        double lm = lgn - std::lgamma(static_cast<double>(n) + 1) -
                    std::lgamma(static_cast<double>(N - n) + 1) +
                    static_cast<double>(n) * lf + static_cast<double>(N - n) * lg;
        dist.mass[n] = std::exp(lm);
    }
    return dist;
}

double tail_fraction(const FrequencyDistribution& dist, double k_sigma) {
    if (k_sigma <= 0) throw std::invalid_argument("tail: k_sigma must be positive");
    const double band = k_sigma * dist.sigma();
    double tail = 0;
    for (long long n = 0; n <= dist.N; ++n) {
        double dev = std::abs(static_cast<double>(n) / static_cast<double>(dist.N) - dist.p);
        if (dev > band) tail += dist.mass[n];
    }
    return tail;
}

FrequencyDistribution nbc_distribution(int outcome_count, long long N) {
    if (outcome_count != 2)
        throw std::invalid_argument("nbc: only two-outcome measurements are supported");
    return repeat_distribution(0.5, N);
}

std::map<std::vector<std::string>, double> BranchTree::leaves() const {
    std::map<std::vector<std::string>, double> out;
    for (const auto& [seq, f] : nodes)
        if (static_cast<int>(seq.size()) == depth) out[seq] = f;
    return out;
}

BranchTree build_branch_tree(const std::vector<FractionTable>& per_step_fractions,
                             const CoarseGrainFn& coarse_grain) {
    long long size = 1;
    for (const auto& t : per_step_fractions) {
        validate_fractions(t);
        size *= static_cast<long long>(t.entries.size());
        if (size > 1000000) throw std::invalid_argument("branch tree: more than 10^6 leaves");
    }

    BranchTree tree;
    tree.depth = static_cast<int>(per_step_fractions.size());
    tree.nodes[{}] = 1.0;
    std::vector<std::pair<std::vector<std::string>, double>> frontier{{{}, 1.0}};
    for (const auto& step : per_step_fractions) {
        std::vector<std::pair<std::vector<std::string>, double>> next;
        next.reserve(frontier.size() * step.entries.size());
        for (const auto& [seq, f] : frontier) {
            for (const auto& [label, sf] : step.entries) {
                auto child = seq;
                child.push_back(label);
                double cf = f * sf;
                tree.nodes[child] = cf;
                next.emplace_back(std::move(child), cf);
            }
        }
        frontier = std::move(next);
    }

    if (coarse_grain) {
        std::map<std::string, double> merged;
        for (const auto& [seq, f] : frontier) merged[coarse_grain(seq)] += f;
        tree.merged = std::move(merged);
    }
    return tree;
}

}  // namespace qfrac
