#include "qfrac/measure.hpp"

#include <cmath>
#include <stdexcept>

namespace qfrac {

namespace {

// Scalar algebra basis element e_a (1, i, j, k) for the given field.
Scalar algebra_unit(FieldKind field, int a) {
    Scalar s = Scalar::zero(field);
    s.c[a] = 1;
    return s;
}

std::vector<double> ambient_coords(const StateVector& v) {
    std::vector<double> x;
    x.reserve(v.coeffs.size() * 4);
    for (const auto& c : v.coeffs) x.insert(x.end(), c.c.begin(), c.c.end());
    return x;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

double linear_map_measure_scale(const SquareMatrix& m) {
    // |det M| by Gaussian elimination with partial pivoting.
    SquareMatrix a = m;
    double det = 1;
    for (int col = 0; col < a.d; ++col) {
        int piv = col;
        for (int r = col + 1; r < a.d; ++r)
            if (std::abs(a.at(r, col)) > std::abs(a.at(piv, col))) piv = r;
        if (a.at(piv, col) == 0) return 0;
        if (piv != col)
            for (int c = 0; c < a.d; ++c) std::swap(a.at(piv, c), a.at(col, c));
        det *= a.at(col, col);
        for (int r = col + 1; r < a.d; ++r) {
            double f = a.at(r, col) / a.at(col, col);
            for (int c = col; c < a.d; ++c) a.at(r, c) -= f * a.at(col, c);
        }
    }
    return std::abs(det);
}

std::array<double, 4> solve_linear(const SquareMatrix& m, const std::array<double, 4>& y) {
    SquareMatrix a = m;
    std::array<double, 4> b = y;
    for (int col = 0; col < a.d; ++col) {
        int piv = col;
        for (int r = col + 1; r < a.d; ++r)
            if (std::abs(a.at(r, col)) > std::abs(a.at(piv, col))) piv = r;
        if (a.at(piv, col) == 0) throw std::invalid_argument("solve: singular matrix");
        if (piv != col) {
            for (int c = 0; c < a.d; ++c) std::swap(a.at(piv, c), a.at(col, c));
            std::swap(b[piv], b[col]);
        }
        for (int r = col + 1; r < a.d; ++r) {
            double f = a.at(r, col) / a.at(col, col);
            for (int c = col; c < a.d; ++c) a.at(r, c) -= f * a.at(col, c);
            b[r] -= f * b[col];
        }
    }
    std::array<double, 4> x{};
    for (int r = a.d - 1; r >= 0; --r) {
        double s = b[r];
        for (int c = r + 1; c < a.d; ++c) s -= a.at(r, c) * x[c];
        x[r] = s / a.at(r, r);
    }
    return x;
}

SquareMatrix line_coordinate_map(const StateVector& w) {
    if (w.is_zero()) throw std::invalid_argument("line map: zero vector has no line");
    const int d = ray_dim(w.field);
    std::vector<std::vector<double>> g(d), f(d);
    for (int a = 0; a < d; ++a) g[a] = ambient_coords(scale(w, algebra_unit(w.field, a)));
    for (int a = 0; a < d; ++a) {
        f[a] = g[a];
        for (int b = 0; b < a; ++b) {
            double proj = dot(f[a], f[b]);
            for (std::size_t i = 0; i < f[a].size(); ++i) f[a][i] -= proj * f[b][i];
        }
        double len = std::sqrt(dot(f[a], f[a]));
        if (len == 0) throw std::invalid_argument("line map: degenerate frame");
        for (auto& x : f[a]) x /= len;
    }
    SquareMatrix m;
    m.d = d;
    m.m.assign(d * d, 0.0);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) m.at(r, c) = dot(g[c], f[r]);
    return m;
}

double projection_factor_analytic(const StateVector& v, const OrthogonalPartition& partition,
                                  const std::string& outcome) {
    if (v.is_zero()) throw std::invalid_argument("projection factor: zero vector");
    StateVector w = project(v, partition, outcome);
    return std::pow(norm(w) / norm(v), ray_dim(v.field));
}

double measure_of_region(FieldKind field, const RegionSpec& region, const StateVector& line_rep) {
    if (line_rep.is_zero()) throw std::invalid_argument("measure: zero line representative");
    const int d = ray_dim(field);
    return region_measure(region, d) * std::pow(norm(line_rep), d);
}

double mc_mapped_region_measure(const SquareMatrix& m, const RegionSpec& region, long long n,
                                std::uint64_t seed, double* std_error, int workers) {
    const int d = m.d;
    validate_region(region, d);
    if (workers < 1) throw std::invalid_argument("mc: workers must be >= 1");

    std::array<double, 4> clo{}, chi{};
    region_bbox(region, d, clo, chi);
    // Interval image of the region's bounding box under m.
    std::array<double, 4> lo{}, hi{};
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            double a = m.at(r, c) * clo[c];
            double b = m.at(r, c) * chi[c];
            lo[r] += std::min(a, b);
            hi[r] += std::max(a, b);
        }
    }
    double boxvol = 1;
    for (int i = 0; i < d; ++i) boxvol *= hi[i] - lo[i];

    long long hits = 0;
    long long done = 0;
    for (int wkr = 0; wkr < workers; ++wkr) {
        long long chunk = n / workers + (wkr < n % workers ? 1 : 0);
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(wkr)};
        std::mt19937_64 rng(seq);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (long long i = 0; i < chunk; ++i) {
            std::array<double, 4> y{};
            for (int k = 0; k < d; ++k) y[k] = lo[k] + (hi[k] - lo[k]) * u(rng);
            if (region_contains(region, solve_linear(m, y), d)) ++hits;
        }
        done += chunk;
    }
    double p = static_cast<double>(hits) / static_cast<double>(done);
    if (std_error) *std_error = boxvol * std::sqrt(p * (1 - p) / static_cast<double>(done));
    return boxvol * p;
}

FactorEstimate projection_factor_mc(const StateVector& v, const OrthogonalPartition& partition,
                                    const std::string& outcome, const RegionSpec& region,
                                    long long n, std::uint64_t seed, int workers) {
    if (v.is_zero()) throw std::invalid_argument("projection factor: zero vector");
    StateVector w = project(v, partition, outcome);
    if (w.is_zero()) return {0.0, 0.0, 0};  // factor is exactly 0, no sampling
    if (n < 1000) throw std::invalid_argument("projection factor mc: need n >= 1000 samples");

    double u_measure = measure_of_region(v.field, region, v);
    SquareMatrix m = line_coordinate_map(w);
    double se = 0;
    double image = mc_mapped_region_measure(m, region, n, seed, &se, workers);
    return {image / u_measure, se / u_measure, n};
}

PythagoreanReport pythagorean_check(const StateVector& v, const OrthogonalPartition& partition,
                                    const RegionSpec& region, long long n, std::uint64_t seed) {
    if (v.is_zero()) throw std::invalid_argument("pythagorean check: zero vector");
    if (v.field != FieldKind::Complex)
        throw std::invalid_argument("pythagorean check: complex field required");
    validate_partition(partition, v.basis);

    PythagoreanReport rep;
    rep.region_measure = measure_of_region(v.field, region, v);
    std::uint64_t stream = 0;
    for (const auto& outcome : partition.outcomes()) {
        OutcomeFactor f;
        f.analytic = projection_factor_analytic(v, partition, outcome);
        if (n > 0) {
            f.mc = projection_factor_mc(v, partition, outcome, region, n, seed + stream);
            rep.projected_sum += f.mc.value * rep.region_measure;
        }
        rep.analytic_sum += f.analytic;
        rep.factors[outcome] = f;
        ++stream;
    }
    rep.deviation = std::abs(rep.analytic_sum - 1.0);
    return rep;
}

}  // namespace qfrac
