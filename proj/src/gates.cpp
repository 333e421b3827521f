#include "quditcolor/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qcolor {

std::string wire_role_name(WireRole role) {
    switch (role) {
    case WireRole::Data: return "data";
    case WireRole::Ancilla: return "anc";
    case WireRole::Flag: return "flag";
    case WireRole::Output: return "out";
    }
    return "?";
}

WireRole wire_role_from_name(const std::string& name) {
    if (name == "data") return WireRole::Data;
    if (name == "anc") return WireRole::Ancilla;
    if (name == "flag") return WireRole::Flag;
    if (name == "out") return WireRole::Output;
    throw std::invalid_argument("unknown wire role: " + name);
}

std::string kind_name(const GateKind& kind) {
    struct Visitor {
        std::string operator()(const GenNot&) const { return "not"; }
        std::string operator()(const GenPhase&) const { return "phase"; }
        std::string operator()(const GenHadamard&) const { return "hadamard"; }
        std::string operator()(const ControlledIncrement&) const { return "inc"; }
        std::string operator()(const Mct&) const { return "mct"; }
        std::string operator()(const PermutationGate&) const { return "perm"; }
        std::string operator()(const DiagonalPhase&) const { return "diag"; }
    };
    return std::visit(Visitor{}, kind);
}

bool kind_equal(const GateKind& a, const GateKind& b) {
    if (a.index() != b.index()) return false;
    if (const auto* n = std::get_if<GenNot>(&a)) return n->power == std::get<GenNot>(b).power;
    if (const auto* i = std::get_if<ControlledIncrement>(&a))
        return i->increment == std::get<ControlledIncrement>(b).increment;
    if (const auto* p = std::get_if<PermutationGate>(&a))
        return p->perm == std::get<PermutationGate>(b).perm;
    if (const auto* d = std::get_if<DiagonalPhase>(&a))
        return d->phases == std::get<DiagonalPhase>(b).phases;
    return true; // GenPhase, GenHadamard, Mct carry no parameters
}

bool operator==(const PlacedGate& a, const PlacedGate& b) {
    return a.target == b.target && a.controls == b.controls && kind_equal(a.kind, b.kind);
}

Matrix Matrix::identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m.at(j, i) = std::conj(at(i, j));
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    Matrix m(n_);
    for (int i = 0; i < n_; ++i) {
        for (int k = 0; k < n_; ++k) {
            const cplx aik = at(i, k);
            if (aik == cplx{0.0, 0.0}) continue;
            for (int j = 0; j < n_; ++j) m.at(i, j) += aik * rhs.at(k, j);
        }
    }
    return m;
}

double Matrix::max_abs_diff(const Matrix& other) const {
    double worst = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) worst = std::max(worst, std::abs(at(i, j) - other.at(i, j)));
    return worst;
}

bool Matrix::is_unitary(double tol) const {
    return ((*this) * adjoint()).max_abs_diff(Matrix::identity(n_)) <= tol;
}

cplx omega_pow(int d, long long power) {
    long long p = power % d;
    if (p < 0) p += d;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(d);
    return {std::cos(angle), std::sin(angle)};
}

namespace {

int mod_dim(long long value, int dim) {
    long long m = value % dim;
    if (m < 0) m += dim;
    return static_cast<int>(m);
}

void check_permutation(const std::vector<int>& perm, int dim) {
    if (static_cast<int>(perm.size()) != dim)
        throw std::invalid_argument("permutation length does not match wire dimension");
    std::vector<bool> seen(perm.size(), false);
    for (int v : perm) {
        if (v < 0 || v >= dim || seen[v]) throw std::invalid_argument("permutation is not a bijection");
        seen[v] = true;
    }
}

} // namespace

Matrix gate_matrix(const GateKind& kind, int dim) {
    if (dim < 2) throw std::invalid_argument("wire dimension must be >= 2");
    Matrix m(dim);
    if (const auto* g = std::get_if<GenNot>(&kind)) {
        const int p = mod_dim(g->power, dim);
        for (int j = 0; j < dim; ++j) m.at((j + p) % dim, j) = 1.0;
    } else if (std::holds_alternative<GenPhase>(kind)) {
        for (int j = 0; j < dim; ++j) m.at(j, j) = omega_pow(dim, j);
    } else if (std::holds_alternative<GenHadamard>(kind)) {
        const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                m.at(j, k) = omega_pow(dim, static_cast<long long>(j) * k) * scale;
    } else if (const auto* inc = std::get_if<ControlledIncrement>(&kind)) {
        if (inc->increment != 1 && inc->increment != -1)
            throw std::invalid_argument("increment must be +1 or -1");
        const int p = mod_dim(inc->increment, dim);
        for (int j = 0; j < dim; ++j) m.at((j + p) % dim, j) = 1.0;
    } else if (std::holds_alternative<Mct>(kind)) {
        for (int j = 0; j < dim; ++j) m.at((j + 1) % dim, j) = 1.0;
    } else if (const auto* perm = std::get_if<PermutationGate>(&kind)) {
        check_permutation(perm->perm, dim);
        for (int j = 0; j < dim; ++j) m.at(perm->perm[j], j) = 1.0;
    } else if (const auto* diag = std::get_if<DiagonalPhase>(&kind)) {
        if (static_cast<int>(diag->phases.size()) != dim)
            throw std::invalid_argument("phase list length does not match wire dimension");
        for (int j = 0; j < dim; ++j) {
            if (std::abs(std::abs(diag->phases[j]) - 1.0) > 1e-9)
                throw std::invalid_argument("diagonal phases must have unit modulus");
            m.at(j, j) = diag->phases[j];
        }
    }
    return m;
}

std::vector<GateKind> inverse_kinds(const GateKind& kind, int dim) {
    if (const auto* g = std::get_if<GenNot>(&kind)) return {GenNot{-g->power}};
    if (std::holds_alternative<GenPhase>(kind)) {
        std::vector<cplx> phases(dim);
        for (int j = 0; j < dim; ++j) phases[j] = std::conj(omega_pow(dim, j));
        return {DiagonalPhase{std::move(phases)}};
    }
    if (std::holds_alternative<GenHadamard>(kind)) {
        // F^dagger = P.F where P is index negation; emitted in temporal order.
        std::vector<int> neg(dim);
        for (int j = 0; j < dim; ++j) neg[j] = (dim - j) % dim;
        return {GenHadamard{}, PermutationGate{std::move(neg)}};
    }
    if (const auto* inc = std::get_if<ControlledIncrement>(&kind))
        return {ControlledIncrement{-inc->increment}};
    if (std::holds_alternative<Mct>(kind)) return {ControlledIncrement{-1}};
    if (const auto* perm = std::get_if<PermutationGate>(&kind)) {
        check_permutation(perm->perm, dim);
        std::vector<int> inv(perm->perm.size());
        for (int j = 0; j < dim; ++j) inv[perm->perm[j]] = j;
        return {PermutationGate{std::move(inv)}};
    }
    const auto& diag = std::get<DiagonalPhase>(kind);
    std::vector<cplx> conj(diag.phases.size());
    for (std::size_t j = 0; j < diag.phases.size(); ++j) conj[j] = std::conj(diag.phases[j]);
    return {DiagonalPhase{std::move(conj)}};
}

} // namespace qcolor
