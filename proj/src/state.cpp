#include "qfrac/state.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace qfrac {

StateVector::StateVector(FieldKind f, std::vector<std::string> labels, std::vector<Scalar> cs)
    : field(f), basis(std::move(labels)), coeffs(std::move(cs)) {
    if (basis.empty()) throw std::invalid_argument("state: basis must be nonempty");
    if (basis.size() != coeffs.size())
        throw std::invalid_argument("state: coeffs size must match basis size");
    std::set<std::string> seen;
    for (const auto& l : basis)
        if (!seen.insert(l).second)
            throw std::invalid_argument("state: duplicate basis label \"" + l + "\"");
    for (const auto& c : coeffs)
        if (c.field != field)
            throw std::invalid_argument("state: coefficient field mismatch");
}

int StateVector::label_index(const std::string& label) const {
    auto it = std::find(basis.begin(), basis.end(), label);
    if (it == basis.end())
        throw std::invalid_argument("state: unknown basis label \"" + label + "\"");
    return static_cast<int>(it - basis.begin());
}

bool StateVector::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Scalar& c) { return c.is_zero(); });
}

OrthogonalPartition OrthogonalPartition::discrete(const std::vector<std::string>& basis) {
    OrthogonalPartition p;
    for (const auto& l : basis) p.groups[l] = {l};
    return p;
}

std::vector<std::string> OrthogonalPartition::outcomes() const {
    std::vector<std::string> out;
    out.reserve(groups.size());
    for (const auto& [k, _] : groups) out.push_back(k);
    return out;
}

void validate_partition(const OrthogonalPartition& p, const std::vector<std::string>& basis) {
    std::set<std::string> covered;
    for (const auto& [outcome, labels] : p.groups) {
        if (labels.empty())
            throw std::invalid_argument("partition: group \"" + outcome + "\" is empty");
        for (const auto& l : labels) {
            if (std::find(basis.begin(), basis.end(), l) == basis.end())
                throw std::invalid_argument("partition: label \"" + l + "\" not in basis");
            if (!covered.insert(l).second)
                throw std::invalid_argument("partition: label \"" + l + "\" appears in two groups");
        }
    }
    if (covered.size() != basis.size())
        throw std::invalid_argument("partition: groups must cover the whole basis");
}

Ray::Ray(StateVector rep) : representative(std::move(rep)) {
    if (representative.is_zero())
        throw std::invalid_argument("ray: representative must be nonzero");
}

static void require_same_basis(const StateVector& u, const StateVector& v) {
    if (u.field != v.field) throw std::invalid_argument("state field mismatch");
    if (u.basis != v.basis) throw std::invalid_argument("state basis mismatch");
}

Scalar inner(const StateVector& u, const StateVector& v) {
    require_same_basis(u, v);
    Scalar acc = Scalar::zero(u.field);
    for (int i = 0; i < u.dim(); ++i)
        acc = scalar_add(acc, scalar_mul(scalar_conj(u.coeffs[i]), v.coeffs[i]));
    return acc;
}

double norm_sq(const StateVector& v) {
    double s = 0;
    for (const auto& c : v.coeffs) s += scalar_norm_sq(c);
    return s;
}

double norm(const StateVector& v) { return std::sqrt(norm_sq(v)); }

StateVector add(const StateVector& u, const StateVector& v) {
    require_same_basis(u, v);
    StateVector r = u;
    for (int i = 0; i < u.dim(); ++i) r.coeffs[i] = scalar_add(u.coeffs[i], v.coeffs[i]);
    return r;
}

StateVector scale(const StateVector& v, const Scalar& c) {
    StateVector r = v;
    for (auto& x : r.coeffs) x = scalar_mul(x, c);
    return r;
}

StateVector project(const StateVector& v, const OrthogonalPartition& partition,
                    const std::string& outcome) {
    validate_partition(partition, v.basis);
    auto it = partition.groups.find(outcome);
    if (it == partition.groups.end())
        throw std::invalid_argument("partition: unknown outcome label \"" + outcome + "\"");
    StateVector r = v;
    for (int i = 0; i < v.dim(); ++i) {
        const auto& keep = it->second;
        if (std::find(keep.begin(), keep.end(), v.basis[i]) == keep.end())
            r.coeffs[i] = Scalar::zero(v.field);
    }
    return r;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    if (a.field != b.field) throw std::invalid_argument("tensor: state field mismatch");
    std::vector<std::string> labels;
    std::vector<Scalar> coeffs;
    labels.reserve(a.basis.size() * b.basis.size());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j) {
            labels.push_back(a.basis[i] + "⊗" + b.basis[j]);
            coeffs.push_back(scalar_mul(a.coeffs[i], b.coeffs[j]));
        }
    return StateVector(a.field, std::move(labels), std::move(coeffs));
}

StateVector entangle_measure(const StateVector& system,
                             const std::map<std::string, StateVector>& pointer_states) {
    const StateVector* first = nullptr;
    for (const auto& l : system.basis) {
        auto it = pointer_states.find(l);
        if (it == pointer_states.end())
            throw std::invalid_argument("entangle: missing pointer state for label \"" + l + "\"");
        if (it->second.field != system.field)
            throw std::invalid_argument("entangle: pointer state field mismatch");
        if (first && it->second.basis != first->basis)
            throw std::invalid_argument("entangle: pointer states must share a device basis");
        if (!first) first = &it->second;
    }
    // Branches must be distinguishable: reject non-orthogonal pointers.
    const double tol = 1e-9;
    for (auto i = pointer_states.begin(); i != pointer_states.end(); ++i)
        for (auto j = std::next(i); j != pointer_states.end(); ++j) {
            double overlap = scalar_norm(inner(i->second, j->second));
            double scale2 = norm(i->second) * norm(j->second);
            if (overlap > tol * std::max(scale2, 1.0))
                throw std::invalid_argument("entangle: pointer states \"" + i->first + "\" and \"" +
                                            j->first + "\" are not orthogonal");
        }

    std::vector<std::string> labels;
    std::vector<Scalar> coeffs;
    for (int i = 0; i < system.dim(); ++i) {
        const StateVector& dev = pointer_states.at(system.basis[i]);
        for (int j = 0; j < dev.dim(); ++j) {
            labels.push_back(system.basis[i] + "⊗" + dev.basis[j]);
            coeffs.push_back(scalar_mul(system.coeffs[i], dev.coeffs[j]));
        }
    }
    return StateVector(system.field, std::move(labels), std::move(coeffs));
}

StateVector apply_basis_change(const StateVector& v,
                               const std::vector<std::vector<Scalar>>& u,
                               const std::vector<std::string>& new_labels) {
    if (u.size() != new_labels.size())
        throw std::invalid_argument("basis change: one matrix row per new label required");
    std::vector<Scalar> coeffs;
    coeffs.reserve(u.size());
    for (const auto& row : u) {
        if (static_cast<int>(row.size()) != v.dim())
            throw std::invalid_argument("basis change: matrix row size must match state dimension");
        Scalar acc = Scalar::zero(v.field);
        for (int j = 0; j < v.dim(); ++j) acc = scalar_add(acc, scalar_mul(row[j], v.coeffs[j]));
        coeffs.push_back(acc);
    }
    return StateVector(v.field, new_labels, std::move(coeffs));
}

}  // namespace qfrac
