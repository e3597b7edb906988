#include "qfrac/scalar.hpp"

namespace qfrac {

std::string field_name(FieldKind k) {
    switch (k) {
        case FieldKind::Real: return "real";
        case FieldKind::Complex: return "complex";
        case FieldKind::Quaternion: return "quaternion";
    }
    return "?";
}

FieldKind field_from_name(const std::string& name) {
    if (name == "real") return FieldKind::Real;
    if (name == "complex") return FieldKind::Complex;
    if (name == "quaternion") return FieldKind::Quaternion;
    throw std::invalid_argument("field: expected real|complex|quaternion, got \"" + name + "\"");
}

Scalar scalar_mul(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    const auto& p = a.c;
    const auto& q = b.c;
    Scalar r{a.field, {}};
    r.c[0] = p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3];
    r.c[1] = p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2];
    r.c[2] = p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1];
    r.c[3] = p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0];
    return r;
}

Scalar scalar_add(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    Scalar r{a.field, {}};
    for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

Scalar scalar_sub(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    Scalar r{a.field, {}};
    for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

Scalar scalar_conj(const Scalar& a) {
    return {a.field, {a.c[0], -a.c[1], -a.c[2], -a.c[3]}};
}

double scalar_norm_sq(const Scalar& a) {
    return a.c[0] * a.c[0] + a.c[1] * a.c[1] + a.c[2] * a.c[2] + a.c[3] * a.c[3];
}

double scalar_norm(const Scalar& a) { return std::sqrt(scalar_norm_sq(a)); }

}  // namespace qfrac
