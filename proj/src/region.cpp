#include "qfrac/region.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace qfrac {

RegionSpec RegionSpec::ball(double r) {
    RegionSpec s;
    s.shape = RegionShape::Ball;
    s.r_out = r;
    return s;
}

RegionSpec RegionSpec::annulus(double r_in, double r_out) {
    RegionSpec s;
    s.shape = RegionShape::Annulus;
    s.r_in = r_in;
    s.r_out = r_out;
    return s;
}

RegionSpec RegionSpec::box(const std::array<double, 4>& lo, const std::array<double, 4>& hi) {
    RegionSpec s;
    s.shape = RegionShape::Box;
    s.box_lo = lo;
    s.box_hi = hi;
    return s;
}

void validate_region(const RegionSpec& region, int d) {
    switch (region.shape) {
        case RegionShape::Ball:
            if (!(region.r_out > 0) || !std::isfinite(region.r_out))
                throw std::invalid_argument("degenerate region: ball radius must be positive and finite");
            break;
        case RegionShape::Annulus:
            if (!(region.r_in > 0) || !(region.r_in < region.r_out) || !std::isfinite(region.r_out))
                throw std::invalid_argument("degenerate region: annulus requires 0 < r_in < r_out < inf");
            break;
        case RegionShape::Box:
            for (int i = 0; i < d; ++i) {
                if (!(region.box_lo[i] < region.box_hi[i]) || !std::isfinite(region.box_lo[i]) ||
                    !std::isfinite(region.box_hi[i]))
                    throw std::invalid_argument("degenerate region: box bounds must satisfy lo < hi per component");
            }
            break;
    }
}

double unit_ball_volume(int d) {
    return std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0 + 1.0);
}

double region_measure(const RegionSpec& region, int d) {
    validate_region(region, d);
    switch (region.shape) {
        case RegionShape::Ball:
            return unit_ball_volume(d) * std::pow(region.r_out, d);
        case RegionShape::Annulus:
            return unit_ball_volume(d) * (std::pow(region.r_out, d) - std::pow(region.r_in, d));
        case RegionShape::Box: {
            double v = 1;
            for (int i = 0; i < d; ++i) v *= region.box_hi[i] - region.box_lo[i];
            return v;
        }
    }
    return 0;
}

bool region_contains(const RegionSpec& region, const std::array<double, 4>& c, int d) {
    switch (region.shape) {
        case RegionShape::Ball:
        case RegionShape::Annulus: {
            double r2 = 0;
            for (int i = 0; i < d; ++i) r2 += c[i] * c[i];
            double r = std::sqrt(r2);
            if (region.shape == RegionShape::Ball) return r <= region.r_out;
            return region.r_in <= r && r <= region.r_out;
        }
        case RegionShape::Box:
            for (int i = 0; i < d; ++i)
                if (c[i] < region.box_lo[i] || c[i] > region.box_hi[i]) return false;
            return true;
    }
    return false;
}

void region_bbox(const RegionSpec& region, int d, std::array<double, 4>& lo,
                 std::array<double, 4>& hi) {
    lo.fill(0);
    hi.fill(0);
    if (region.shape == RegionShape::Box) {
        for (int i = 0; i < d; ++i) {
            lo[i] = region.box_lo[i];
            hi[i] = region.box_hi[i];
        }
    } else {
        for (int i = 0; i < d; ++i) {
            lo[i] = -region.r_out;
            hi[i] = region.r_out;
        }
    }
}

ScalarSampler::ScalarSampler(FieldKind field, const RegionSpec& region, std::uint64_t seed,
                             std::uint64_t stream_id)
    : field_(field), region_(region), dim_(ray_dim(field)) {
    validate_region(region, dim_);
    region_bbox(region, dim_, lo_, hi_);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream_id),
                      static_cast<std::uint32_t>(stream_id >> 32)};
    rng_.seed(seq);
}

std::array<double, 4> ScalarSampler::next_box_point() {
    std::array<double, 4> p{};
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < dim_; ++i) p[i] = lo_[i] + (hi_[i] - lo_[i]) * u(rng_);
    return p;
}

Scalar ScalarSampler::next() {
    for (;;) {
        auto p = next_box_point();
        if (region_contains(region_, p, dim_)) {
            Scalar s = Scalar::zero(field_);
            s.c = p;
            return s;
        }
    }
}

}  // namespace qfrac
