#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qfrac/region.hpp"
#include "qfrac/state.hpp"

namespace qfrac {

// Monte Carlo estimate of a projection factor, with binomial counting error.
struct FactorEstimate {
    double value = 0;
    double std_error = 0;
    long long n_samples = 0;
};

// d x d real matrix, row-major.
struct SquareMatrix {
    int d = 0;
    std::vector<double> m;  // m[r * d + c]

    double& at(int r, int c) { return m[r * d + c]; }
    double at(int r, int c) const { return m[r * d + c]; }
};

// Factor by which d-dimensional Lebesgue measure scales under the map:
// sqrt(det(M^T M)) = |det M|.
double linear_map_measure_scale(const SquareMatrix& m);

// Solves M x = y by Gaussian elimination; throws on singular M.
std::array<double, 4> solve_linear(const SquareMatrix& m, const std::array<double, 4>& y);

// Matrix of c -> coordinates of w*c in an orthonormal frame of the line of w,
// built numerically by Gram-Schmidt on the ambient real vectors {w*e_a}.
// This is the real-linear map whose determinant backs the analytic factors.
SquareMatrix line_coordinate_map(const StateVector& w);

// Analytic projection factor of the line of v onto the outcome subspace:
// (|Pv| / |v|)^d with d the ray real-dimension, which for the complex field
// is |Pv|^2 / |v|^2.
double projection_factor_analytic(const StateVector& v, const OrthogonalPartition& partition,
                                  const std::string& outcome);

// d-dimensional Lebesgue measure of {line_rep * c : c in region}:
// closed-form region measure times |line_rep|^d.
double measure_of_region(FieldKind field, const RegionSpec& region, const StateVector& line_rep);

// Estimates |P(U)| / |U| by hit-counting the image set against a bounding box
// in the image line's own coordinates. The scale factor enters only through
// the numerically built line_coordinate_map, so the estimate checks the
// analytic determinant path rather than restating it. Deterministic for a
// fixed (seed, worker count); workers use independent (seed, index) streams
// and merge by summing hit counts.
FactorEstimate projection_factor_mc(const StateVector& v, const OrthogonalPartition& partition,
                                    const std::string& outcome, const RegionSpec& region,
                                    long long n, std::uint64_t seed, int workers = 1);

// Hit-count estimate of the measure of the image of a region under an
// arbitrary d x d real-linear map. Shared by projection_factor_mc and the
// tests that cross-check linear_map_measure_scale.
double mc_mapped_region_measure(const SquareMatrix& m, const RegionSpec& region, long long n,
                                std::uint64_t seed, double* std_error = nullptr, int workers = 1);

struct OutcomeFactor {
    double analytic = 0;
    FactorEstimate mc;
};

struct PythagoreanReport {
    std::map<std::string, OutcomeFactor> factors;
    double analytic_sum = 0;
    double deviation = 0;        // |analytic_sum - 1|
    double region_measure = 0;   // |U|
    double projected_sum = 0;    // MC sum of |P_i(U)|
};

// Per-outcome analytic factors and MC estimates, their sum and its deviation
// from 1, plus the measure identity sum_i |P_i(U)| = |U|. Complex field only;
// pass n = 0 to skip sampling.
PythagoreanReport pythagorean_check(const StateVector& v, const OrthogonalPartition& partition,
                                    const RegionSpec& region, long long n, std::uint64_t seed);

}  // namespace qfrac
