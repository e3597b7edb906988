#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qfrac {

// Which normed division algebra the Hilbert space is over.
enum class FieldKind { Real, Complex, Quaternion };

// Real dimension of a ray over the given field (1, 2 or 4). This is the
// exponent in the field-dependent world-fraction formula.
constexpr int ray_dim(FieldKind k) {
    switch (k) {
        case FieldKind::Real: return 1;
        case FieldKind::Complex: return 2;
        case FieldKind::Quaternion: return 4;
    }
    return 0;
}

std::string field_name(FieldKind k);
FieldKind field_from_name(const std::string& name);

// Element of R, C or H, stored as quaternion components (w, x, y, z).
// Components beyond ray_dim(field) are always zero, so a single Hamilton
// product covers all three algebras.
struct Scalar {
    FieldKind field = FieldKind::Complex;
    std::array<double, 4> c{};

    static Scalar real(double w) { return {FieldKind::Real, {w, 0, 0, 0}}; }
    static Scalar complex(double re, double im) { return {FieldKind::Complex, {re, im, 0, 0}}; }
    static Scalar quaternion(double w, double x, double y, double z) {
        return {FieldKind::Quaternion, {w, x, y, z}};
    }
    static Scalar zero(FieldKind f) { return {f, {0, 0, 0, 0}}; }
    static Scalar one(FieldKind f) { return {f, {1, 0, 0, 0}}; }

    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
};

inline void require_same_field(const Scalar& a, const Scalar& b) {
    if (a.field != b.field)
        throw std::invalid_argument("scalar field mismatch: " + field_name(a.field) +
                                    " vs " + field_name(b.field));
}

// Hamilton product (non-commutative for quaternions); restricts to the
// usual product on R and C since the extra components are zero.
Scalar scalar_mul(const Scalar& a, const Scalar& b);
Scalar scalar_add(const Scalar& a, const Scalar& b);
Scalar scalar_sub(const Scalar& a, const Scalar& b);
Scalar scalar_conj(const Scalar& a);

double scalar_norm(const Scalar& a);
double scalar_norm_sq(const Scalar& a);

}  // namespace qfrac
