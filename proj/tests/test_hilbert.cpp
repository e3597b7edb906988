#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qfrac/state.hpp"

using namespace qfrac;

namespace {

const double kRoot3Half = std::sqrt(3.0) / 2.0;

StateVector spin_state() {
    return StateVector(FieldKind::Complex, {"up", "down"},
                       {Scalar::complex(kRoot3Half, 0), Scalar::complex(0.5, 0)});
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

TEST_CASE("inner product on orthonormal basis") {
    StateVector e1(FieldKind::Complex, {"a", "b"}, {Scalar::complex(1, 0), Scalar::complex(0, 0)});
    StateVector e2(FieldKind::Complex, {"a", "b"}, {Scalar::complex(0, 0), Scalar::complex(1, 0)});
    CHECK(inner(e1, e1).c[0] == doctest::Approx(1.0));
    CHECK(scalar_norm(inner(e1, e2)) == doctest::Approx(0.0));
    auto v = spin_state();
    CHECK(inner(v, v).c[0] == doctest::Approx(1.0));
}

TEST_CASE("inner is conjugate-linear in the first slot") {
    std::mt19937_64 rng(3);
    for (FieldKind f : {FieldKind::Complex, FieldKind::Quaternion}) {
        StateVector u = random_state(f, 3, rng), v = random_state(f, 3, rng);
        Scalar c = Scalar::zero(f);
        c.c[0] = 0.3;
        c.c[1] = -0.7;
        // <u*c, v> = conj(c) <u, v>
        Scalar lhs = inner(scale(u, c), v);
        Scalar rhs = scalar_mul(scalar_conj(c), inner(u, v));
        for (int k = 0; k < 4; ++k) CHECK(lhs.c[k] == doctest::Approx(rhs.c[k]).epsilon(1e-12));
    }
}

TEST_CASE("norm_sq equals inner(v,v) and obeys the scaling law") {
    auto v = spin_state();
    CHECK(norm_sq(v) == doctest::Approx(1.0));
    auto v2 = scale(v, Scalar::complex(2, 0));
    CHECK(norm_sq(v2) == doctest::Approx(4.0 * norm_sq(v)));
    std::mt19937_64 rng(5);
    auto q = random_state(FieldKind::Quaternion, 4, rng);
    CHECK(norm_sq(q) == doctest::Approx(inner(q, q).c[0]));
}

TEST_CASE("projection restricts coordinates") {
    auto v = spin_state();
    auto p = spin_partition();
    auto up = project(v, p, "up");
    CHECK(up.coeffs[0].c[0] == doctest::Approx(kRoot3Half));
    CHECK(up.coeffs[1].is_zero());

    OrthogonalPartition whole;
    whole.groups = {{"all", {"up", "down"}}};
    auto w = project(v, whole, "all");
    CHECK(norm_sq(w) == doctest::Approx(norm_sq(v)));

    CHECK_THROWS_AS(project(v, p, "sideways"), std::invalid_argument);
}

TEST_CASE("projection idempotence and branch orthogonality are exact") {
    std::mt19937_64 rng(17);
    auto v = random_state(FieldKind::Complex, 6, rng);
    auto p = random_partition(v.basis, rng);
    for (const auto& o : p.outcomes()) {
        auto once = project(v, p, o);
        auto twice = project(once, p, o);
        for (int i = 0; i < v.dim(); ++i)
            for (int k = 0; k < 4; ++k) CHECK(once.coeffs[i].c[k] == twice.coeffs[i].c[k]);
    }
    auto outcomes = p.outcomes();
    for (std::size_t i = 0; i < outcomes.size(); ++i)
        for (std::size_t j = i + 1; j < outcomes.size(); ++j)
            CHECK(scalar_norm(inner(project(v, p, outcomes[i]), project(v, p, outcomes[j]))) == 0.0);
}

TEST_CASE("Parseval over random states and partitions") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 1000; ++t) {
        FieldKind f = static_cast<FieldKind>(t % 3);
        int dim = 2 + static_cast<int>(t % 7);
        auto v = random_state(f, dim, rng);
        auto p = random_partition(v.basis, rng);
        double sum = 0;
        for (const auto& o : p.outcomes()) sum += norm_sq(project(v, p, o));
        REQUIRE(std::abs(sum - norm_sq(v)) < 1e-10);
    }
}

TEST_CASE("tensor product") {
    StateVector e1(FieldKind::Complex, {"0", "1"}, {Scalar::complex(1, 0), Scalar::complex(0, 0)});
    auto t = tensor(e1, e1);
    CHECK(t.dim() == 4);
    CHECK(t.basis[0] == "0⊗0");
    CHECK(t.coeffs[0].c[0] == doctest::Approx(1.0));
    CHECK(norm_sq(t) == doctest::Approx(1.0));

    std::mt19937_64 rng(31);
    auto a = random_state(FieldKind::Quaternion, 3, rng);
    auto b = random_state(FieldKind::Quaternion, 2, rng);
    CHECK(norm_sq(tensor(a, b)) == doctest::Approx(norm_sq(a) * norm_sq(b)).epsilon(1e-12));
}

TEST_CASE("entangle_measure branches the superposition") {
    auto v = spin_state();
    StateVector d_up(FieldKind::Complex, {"D0", "D1"},
                     {Scalar::complex(1, 0), Scalar::complex(0, 0)});
    StateVector d_down(FieldKind::Complex, {"D0", "D1"},
                       {Scalar::complex(0, 0), Scalar::complex(1, 0)});
    std::map<std::string, StateVector> pointers{{"up", d_up}, {"down", d_down}};

    auto composite = entangle_measure(v, pointers);
    CHECK(composite.dim() == 4);
    CHECK(composite.coeffs[composite.label_index("up⊗D0")].c[0] == doctest::Approx(kRoot3Half));
    CHECK(composite.coeffs[composite.label_index("down⊗D1")].c[0] == doctest::Approx(0.5));
    CHECK(composite.coeffs[composite.label_index("up⊗D1")].is_zero());
    CHECK(norm_sq(composite) == doctest::Approx(1.0));

    // No superposition, no branching.
    StateVector pure(FieldKind::Complex, {"up", "down"},
                     {Scalar::complex(1, 0), Scalar::complex(0, 0)});
    auto single = entangle_measure(pure, pointers);
    CHECK(single.coeffs[single.label_index("up⊗D0")].c[0] == doctest::Approx(1.0));
    CHECK(norm_sq(single) == doctest::Approx(1.0));
}

TEST_CASE("entangle_measure rejects missing and non-orthogonal pointers") {
    auto v = spin_state();
    StateVector d0(FieldKind::Complex, {"D0", "D1"},
                   {Scalar::complex(1, 0), Scalar::complex(0, 0)});
    CHECK_THROWS_AS(entangle_measure(v, {{"up", d0}}), std::invalid_argument);
    CHECK_THROWS_AS(entangle_measure(v, {{"up", d0}, {"down", d0}}), std::invalid_argument);
}

TEST_CASE("entangle_measure is linear in the system") {
    std::mt19937_64 rng(41);
    StateVector d_up(FieldKind::Complex, {"D0", "D1"},
                     {Scalar::complex(1, 0), Scalar::complex(0, 0)});
    StateVector d_down(FieldKind::Complex, {"D0", "D1"},
                       {Scalar::complex(0, 0), Scalar::complex(1, 0)});
    std::map<std::string, StateVector> pointers{{"up", d_up}, {"down", d_down}};
    for (int t = 0; t < 50; ++t) {
        auto u = random_state(FieldKind::Complex, 2, rng);
        auto w = random_state(FieldKind::Complex, 2, rng);
        u.basis = {"up", "down"};
        w.basis = {"up", "down"};
        Scalar alpha = Scalar::complex(0.4, -1.1), beta = Scalar::complex(-0.2, 0.6);
        auto lhs = entangle_measure(add(scale(u, alpha), scale(w, beta)), pointers);
        auto rhs = add(scale(entangle_measure(u, pointers), alpha),
                       scale(entangle_measure(w, pointers), beta));
        for (int i = 0; i < lhs.dim(); ++i)
            for (int k = 0; k < 4; ++k)
                REQUIRE(std::abs(lhs.coeffs[i].c[k] - rhs.coeffs[i].c[k]) < 1e-12);
    }
}

TEST_CASE("basis change rotates into the measurement basis") {
    // Hadamard-like rotation of |up> into (|+> + |->)/sqrt(2).
    const double h = 1.0 / std::sqrt(2.0);
    StateVector up(FieldKind::Complex, {"up", "down"},
                   {Scalar::complex(1, 0), Scalar::complex(0, 0)});
    std::vector<std::vector<Scalar>> had = {
        {Scalar::complex(h, 0), Scalar::complex(h, 0)},
        {Scalar::complex(h, 0), Scalar::complex(-h, 0)}};
    auto rotated = apply_basis_change(up, had, {"plus", "minus"});
    CHECK(rotated.coeffs[0].c[0] == doctest::Approx(h));
    CHECK(rotated.coeffs[1].c[0] == doctest::Approx(h));
    CHECK(norm_sq(rotated) == doctest::Approx(1.0));
}

TEST_CASE("invalid constructions are rejected") {
    CHECK_THROWS_AS(StateVector(FieldKind::Real, {"a", "a"},
                                {Scalar::real(1), Scalar::real(1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Ray(StateVector(FieldKind::Real, {"a"}, {Scalar::real(0)})),
                    std::invalid_argument);
    OrthogonalPartition bad;
    bad.groups = {{"x", {"a"}}};
    CHECK_THROWS_AS(validate_partition(bad, {"a", "b"}), std::invalid_argument);
}
