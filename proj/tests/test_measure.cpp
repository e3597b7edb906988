#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qfrac/measure.hpp"

using namespace qfrac;

namespace {

const double kRoot3Half = std::sqrt(3.0) / 2.0;

StateVector spin_state(FieldKind f) {
    Scalar a = Scalar::zero(f), b = Scalar::zero(f);
    a.c[0] = kRoot3Half;
    b.c[0] = 0.5;
    return StateVector(f, {"up", "down"}, {a, b});
}

OrthogonalPartition spin_partition() {
    OrthogonalPartition p;
    p.groups = {{"up", {"up"}}, {"down", {"down"}}};
    return p;
}

StateVector random_state(FieldKind f, int dim, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<std::string> basis;
    std::vector<Scalar> coeffs;
    for (int i = 0; i < dim; ++i) {
        basis.push_back("b" + std::to_string(i));
        Scalar s = Scalar::zero(f);
        for (int k = 0; k < ray_dim(f); ++k) s.c[k] = u(rng);
        coeffs.push_back(s);
    }
    return StateVector(f, std::move(basis), std::move(coeffs));
}

OrthogonalPartition random_partition(const std::vector<std::string>& basis, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> g(0, std::max<int>(1, basis.size() / 2) - 1);
    OrthogonalPartition p;
    for (const auto& l : basis) p.groups["g" + std::to_string(g(rng))].push_back(l);
    return p;
}

}  // namespace

TEST_CASE("analytic factors per field") {
    auto p = spin_partition();
    CHECK(projection_factor_analytic(spin_state(FieldKind::Complex), p, "up") ==
          doctest::Approx(0.75).epsilon(1e-12));
    CHECK(projection_factor_analytic(spin_state(FieldKind::Real), p, "up") ==
          doctest::Approx(kRoot3Half).epsilon(1e-12));
    CHECK(projection_factor_analytic(spin_state(FieldKind::Quaternion), p, "up") ==
          doctest::Approx(0.5625).epsilon(1e-12));  // (3/4)^2

    // v entirely inside the subspace.
    OrthogonalPartition whole;
    whole.groups = {{"all", {"up", "down"}}};
    CHECK(projection_factor_analytic(spin_state(FieldKind::Complex), whole, "all") ==
          doctest::Approx(1.0));
    CHECK_THROWS_AS(projection_factor_analytic(
                        StateVector(FieldKind::Complex, {"up", "down"},
                                    {Scalar::complex(0, 0), Scalar::complex(0, 0)}),
                        p, "up"),
                    std::invalid_argument);
}

TEST_CASE("analytic factor is scale invariant, quaternion included") {
    std::mt19937_64 rng(57);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int t = 0; t < 200; ++t) {
        FieldKind f = static_cast<FieldKind>(t % 3);
        auto v = random_state(f, 4, rng);
        if (v.is_zero()) continue;
        auto p = random_partition(v.basis, rng);
        Scalar c = Scalar::zero(f);
        for (int k = 0; k < ray_dim(f); ++k) c.c[k] = u(rng);
        if (c.is_zero()) continue;
        for (const auto& o : p.outcomes()) {
            double a = projection_factor_analytic(v, p, o);
            double b = projection_factor_analytic(scale(v, c), p, o);
            REQUIRE(std::abs(a - b) < 1e-12);
        }
    }
}

TEST_CASE("measure of a region on a line") {
    StateVector unit(FieldKind::Complex, {"a"}, {Scalar::complex(1, 0)});
    CHECK(measure_of_region(FieldKind::Complex, RegionSpec::ball(1), unit) ==
          doctest::Approx(M_PI));
    auto twice = scale(unit, Scalar::complex(2, 0));
    CHECK(measure_of_region(FieldKind::Complex, RegionSpec::ball(1), twice) ==
          doctest::Approx(4 * M_PI));
    StateVector runit(FieldKind::Real, {"a"}, {Scalar::real(1)});
    CHECK(measure_of_region(FieldKind::Real, RegionSpec::box({1, 0, 0, 0}, {2, 0, 0, 0}), runit) ==
          doctest::Approx(1.0));
}

TEST_CASE("linear map measure scale") {
    SquareMatrix id{2, {1, 0, 0, 1}};
    CHECK(linear_map_measure_scale(id) == doctest::Approx(1.0));

    // Complex multiplication by c = 1 + 2i as a real 2x2 matrix scales area by |c|^2.
    SquareMatrix mul_c{2, {1, -2, 2, 1}};
    CHECK(linear_map_measure_scale(mul_c) == doctest::Approx(5.0));
}

TEST_CASE("hit-count area of a mapped unit square matches |det|") {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    RegionSpec square = RegionSpec::box({0, 0, 0, 0}, {1, 1, 0, 0});
    for (int t = 0; t < 20; ++t) {
        SquareMatrix m{2, {u(rng), u(rng), u(rng), u(rng)}};
        double det = linear_map_measure_scale(m);
        if (det < 0.05) continue;
        double se = 0;
        double mc = mc_mapped_region_measure(m, square, 200000, 1000 + t, &se);
        REQUIRE(std::abs(mc - det) < 5 * se);
    }
}

TEST_CASE("MC factor agrees with analytic at a million samples") {
    auto v = spin_state(FieldKind::Complex);
    auto p = spin_partition();
    auto est = projection_factor_mc(v, p, "up", RegionSpec::annulus(1, 2), 1000000, 7);
    CHECK(est.n_samples == 1000000);
    CHECK(est.std_error > 0);
    CHECK(std::abs(est.value - 0.75) < 4 * est.std_error);
}

TEST_CASE("zero-coefficient outcome is exactly zero without sampling") {
    StateVector v(FieldKind::Complex, {"up", "down"},
                  {Scalar::complex(1, 0), Scalar::complex(0, 0)});
    auto est = projection_factor_mc(v, spin_partition(), "down", RegionSpec::annulus(1, 2), 1000000, 7);
    CHECK(est.value == 0.0);
    CHECK(est.n_samples == 0);
}

TEST_CASE("MC rejects tiny sample counts and degenerate regions") {
    auto v = spin_state(FieldKind::Complex);
    CHECK_THROWS_AS(projection_factor_mc(v, spin_partition(), "up", RegionSpec::annulus(1, 2), 10, 7),
                    std::invalid_argument);
    CHECK_THROWS_AS(projection_factor_mc(v, spin_partition(), "up", RegionSpec::ball(-1), 5000, 7),
                    std::invalid_argument);
}

TEST_CASE("factor does not depend on the region shape") {
    auto v = spin_state(FieldKind::Complex);
    auto p = spin_partition();
    const long long n = 200000;
    auto a = projection_factor_mc(v, p, "up", RegionSpec::ball(1), n, 11);
    auto b = projection_factor_mc(v, p, "up", RegionSpec::annulus(1, 2), n, 12);
    auto c = projection_factor_mc(v, p, "up", RegionSpec::box({-1, -1, 0, 0}, {1, 1, 0, 0}), n, 13);
    auto consistent = [](const FactorEstimate& x, const FactorEstimate& y) {
        return std::abs(x.value - y.value) <
               4 * std::sqrt(x.std_error * x.std_error + y.std_error * y.std_error);
    };
    CHECK(consistent(a, b));
    CHECK(consistent(b, c));
    CHECK(consistent(a, c));
}

TEST_CASE("MC is bit-identical for a fixed seed and worker count, any scheduling") {
    auto v = spin_state(FieldKind::Quaternion);
    auto p = spin_partition();
    auto a = projection_factor_mc(v, p, "up", RegionSpec::ball(1), 50000, 31, 4);
    auto b = projection_factor_mc(v, p, "up", RegionSpec::ball(1), 50000, 31, 4);
    CHECK(a.value == b.value);
    CHECK(a.std_error == b.std_error);
}

TEST_CASE("MC z-scores stay below 4 in nearly all randomized trials") {
    std::mt19937_64 rng(71);
    int ok = 0, trials = 0;
    for (int t = 0; t < 1000; ++t) {
        auto v = random_state(FieldKind::Complex, 2 + t % 4, rng);
        if (norm_sq(v) < 1e-4) continue;
        auto p = random_partition(v.basis, rng);
        auto outcomes = p.outcomes();
        const auto& o = outcomes[t % outcomes.size()];
        double analytic = projection_factor_analytic(v, p, o);
        if (analytic == 0.0) continue;
        auto est = projection_factor_mc(v, p, o, RegionSpec::annulus(1, 2), 4000, 5000 + t);
        ++trials;
        if (std::abs(est.value - analytic) < 4 * est.std_error) ++ok;
    }
    CHECK(trials > 900);
    CHECK(static_cast<double>(ok) / trials >= 0.999);
}

TEST_CASE("pythagorean check: spin state") {
    auto rep = pythagorean_check(spin_state(FieldKind::Complex), spin_partition(),
                                 RegionSpec::annulus(1, 2), 100000, 99);
    CHECK(rep.factors.at("up").analytic == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(rep.factors.at("down").analytic == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(std::abs(rep.analytic_sum - 1.0) < 1e-12);
    // sum_i |P_i(U)| = |U| within MC error
    CHECK(std::abs(rep.projected_sum - rep.region_measure) / rep.region_measure < 0.01);
}

TEST_CASE("pythagorean check: basis vector and random states") {
    StateVector e(FieldKind::Complex, {"up", "down"},
                  {Scalar::complex(0, 1), Scalar::complex(0, 0)});
    auto rep = pythagorean_check(e, spin_partition(), RegionSpec::annulus(1, 2), 0, 0);
    CHECK(rep.factors.at("up").analytic == doctest::Approx(1.0));
    CHECK(rep.factors.at("down").analytic == doctest::Approx(0.0));

    std::mt19937_64 rng(83);
    auto v = random_state(FieldKind::Complex, 5, rng);
    auto p = OrthogonalPartition::discrete(v.basis);
    auto r = pythagorean_check(v, p, RegionSpec::annulus(1, 2), 20000, 123);
    CHECK(std::abs(r.analytic_sum - 1.0) < 1e-12);
    double combined_se = 0;
    double mc_sum = 0;
    for (const auto& [o, f] : r.factors) {
        mc_sum += f.mc.value;
        combined_se += f.mc.std_error * f.mc.std_error;
    }
    CHECK(std::abs(mc_sum - 1.0) < 4 * std::sqrt(combined_se));
}

TEST_CASE("real-field factor sums strictly exceed 1") {
    std::mt19937_64 rng(91);
    for (int t = 0; t < 200; ++t) {
        auto v = random_state(FieldKind::Real, 2 + t % 5, rng);
        int nonzero = 0;
        for (const auto& c : v.coeffs)
            if (!c.is_zero()) ++nonzero;
        if (nonzero < 2) continue;
        auto p = OrthogonalPartition::discrete(v.basis);
        double sum = 0;
        for (const auto& o : p.outcomes()) sum += projection_factor_analytic(v, p, o);
        REQUIRE(sum > 1.0);
    }
}

TEST_CASE("pythagorean check requires a nonzero complex state") {
    CHECK_THROWS_AS(pythagorean_check(spin_state(FieldKind::Real), spin_partition(),
                                      RegionSpec::annulus(1, 2), 0, 0),
                    std::invalid_argument);
}
