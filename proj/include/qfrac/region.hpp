#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "qfrac/scalar.hpp"

namespace qfrac {

enum class RegionShape { Ball, Annulus, Box };

// A Lebesgue-measurable sampling region in the d-dimensional component
// space of a scalar. All three shapes have closed-form measure, a
// membership test, and an axis-aligned bounding box.
struct RegionSpec {
    RegionShape shape = RegionShape::Annulus;
    double r_in = 1.0;   // Annulus inner radius
    double r_out = 2.0;  // Ball / Annulus outer radius
    std::array<double, 4> box_lo{};
    std::array<double, 4> box_hi{};

    static RegionSpec ball(double r);
    static RegionSpec annulus(double r_in, double r_out);
    static RegionSpec box(const std::array<double, 4>& lo, const std::array<double, 4>& hi);
};

// Throws std::invalid_argument for degenerate regions (zero or infinite measure).
void validate_region(const RegionSpec& region, int d);

// Volume of the unit d-ball: 2, pi, pi^2/2 for d = 1, 2, 4.
double unit_ball_volume(int d);

double region_measure(const RegionSpec& region, int d);
bool region_contains(const RegionSpec& region, const std::array<double, 4>& c, int d);
void region_bbox(const RegionSpec& region, int d, std::array<double, 4>& lo,
                 std::array<double, 4>& hi);

// Deterministic stream of i.i.d. scalars uniform over a region, by
// rejection from the region's bounding box. Independent streams come from
// distinct (seed, stream_id) pairs; a stream is single-owner.
class ScalarSampler {
public:
    ScalarSampler(FieldKind field, const RegionSpec& region, std::uint64_t seed,
                  std::uint64_t stream_id = 0);

    Scalar next();

    // Uniform point in the bounding box (no rejection); used by hit-count
    // estimators that need box samples rather than region samples.
    std::array<double, 4> next_box_point();

private:
    FieldKind field_;
    RegionSpec region_;
    int dim_;
    std::array<double, 4> lo_{}, hi_{};
    std::mt19937_64 rng_;
};

}  // namespace qfrac
