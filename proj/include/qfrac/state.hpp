#pragma once

#include <map>
#include <string>
#include <vector>

#include "qfrac/scalar.hpp"

namespace qfrac {

// Finite-dimensional state vector over a labeled orthonormal basis.
// Possibly unnormalized; all fraction and factor formulas are ratios, so
// normalization never matters.
struct StateVector {
    FieldKind field = FieldKind::Complex;
    std::vector<std::string> basis;
    std::vector<Scalar> coeffs;

    StateVector() = default;
    StateVector(FieldKind f, std::vector<std::string> labels, std::vector<Scalar> cs);

    int dim() const { return static_cast<int>(basis.size()); }
    int label_index(const std::string& label) const;  // throws on unknown label
    bool is_zero() const;
};

// Grouping of basis labels into disjoint outcome subspaces covering the
// whole basis. Subspaces are coordinate subspaces of the fixed basis, so
// projections are exact coefficient restrictions.
struct OrthogonalPartition {
    std::map<std::string, std::vector<std::string>> groups;

    // One singleton group per basis label, named after the label.
    static OrthogonalPartition discrete(const std::vector<std::string>& basis);

    std::vector<std::string> outcomes() const;
};

void validate_partition(const OrthogonalPartition& p, const std::vector<std::string>& basis);

// Nonzero scalar multiples of a representative; the paper's set of
// identical universes sharing a state.
struct Ray {
    StateVector representative;
    explicit Ray(StateVector rep);
};

// Hermitian inner product, conjugate-linear in the first slot, so
// inner(basis_vector(i), v) is the i-th coefficient.
Scalar inner(const StateVector& u, const StateVector& v);

double norm_sq(const StateVector& v);
double norm(const StateVector& v);

StateVector add(const StateVector& u, const StateVector& v);
// Right scalar multiplication v*c (well-defined componentwise for quaternions).
StateVector scale(const StateVector& v, const Scalar& c);

// Component of v in the outcome's subspace: coefficients zeroed outside the
// outcome's basis labels.
StateVector project(const StateVector& v, const OrthogonalPartition& partition,
                    const std::string& outcome);

// Product basis labeled "i⊗j"; coefficient of (i, j) is a_i * b_j.
StateVector tensor(const StateVector& a, const StateVector& b);

// Measurement as entanglement: system sum_i c_i|i> and per-label device
// pointer states |D_i> (mutually orthogonal, shared device basis) evolve to
// sum_i c_i |i>⊗|D_i>. Linear in the system argument.
StateVector entangle_measure(const StateVector& system,
                             const std::map<std::string, StateVector>& pointer_states);

// Rotate a state into a measurement basis: new coefficient i is
// sum_j u[i][j] * c_j, with u the change-of-basis matrix rows.
StateVector apply_basis_change(const StateVector& v,
                               const std::vector<std::vector<Scalar>>& u,
                               const std::vector<std::string>& new_labels);

}  // namespace qfrac
