#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qfrac/state.hpp"

namespace qfrac {

// Outcome label -> world fraction in [0,1], summing to 1.
struct FractionTable {
    std::map<std::string, double> entries;

    double at(const std::string& outcome) const;
};

void validate_fractions(const FractionTable& t, double tol = 1e-12);

// Field-dependent world fractions: f_i = |psi_i|^d / sum_j |psi_j|^d with
// d the ray real-dimension. For the complex field this is the Born weight
// |psi_i|^2 / |v|^2.
FractionTable world_fractions(const StateVector& v, const OrthogonalPartition& partition);

// How the fraction of a fixed component reacts to refining the rest of the
// partition: unchanged for complex, shifted for real and quaternionic scalars.
struct GleasonReport {
    FieldKind field;
    double coarse_fraction = 0;  // f of the first component under psi1 + psi2
    double fine_fraction = 0;    // f of the same component with psi2 split in two
    double shift = 0;
    bool depends_on_refinement = false;
};

GleasonReport gleason_dependence_demo(FieldKind field);

// Distribution of world fractions over the up-count n after N repeats:
// mass[n] = C(N,n) f^n (1-f)^(N-n).
struct FrequencyDistribution {
    long long N = 0;
    double p = 0;
    std::vector<double> mass;  // index n in [0, N]

    double mean_frequency() const { return p; }
    double frequency_variance() const { return p * (1 - p) / static_cast<double>(N); }
    double sigma() const;
};

// Exact binomial masses, computed in log space so N up to 10^6 is safe.
FrequencyDistribution repeat_distribution(double f, long long N);

// Total world fraction whose frequency deviates from p by more than
// k_sigma * sigma (the maverick fraction).
double tail_fraction(const FrequencyDistribution& dist, double k_sigma);

// Naive Branch Counting: every binary measurement makes two equally counted
// worlds, so frequencies follow a fair binomial regardless of the state.
FrequencyDistribution nbc_distribution(int outcome_count, long long N);

// Tree of outcome sequences, each node carrying an exact world fraction;
// node fraction is the product of step fractions along its sequence.
struct BranchTree {
    int depth = 0;
    // Every prefix, including the empty root (fraction 1) and the leaves.
    std::map<std::vector<std::string>, double> nodes;
    // Present when a coarse-grain map was supplied: merged leaf fractions.
    std::optional<std::map<std::string, double>> merged;

    std::map<std::vector<std::string>, double> leaves() const;
};

using CoarseGrainFn = std::function<std::string(const std::vector<std::string>&)>;

BranchTree build_branch_tree(const std::vector<FractionTable>& per_step_fractions,
                             const CoarseGrainFn& coarse_grain = nullptr);

}  // namespace qfrac
