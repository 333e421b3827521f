#pragma once

#include <string>
#include <variant>
#include <vector>

#include "quditcolor/types.hpp"

namespace qcolor {

// Gate kinds are parameterized by the local dimension of the wire they sit
// on only at matrix-build time, so one kind value can be reused across wires
// of different dimension.

/// |j> -> |(j+power) mod d>. power may be any integer; it is reduced mod d.
struct GenNot {
    int power = 1;
};

/// diag(1, w, w^2, ...), w = exp(2*pi*i/d).
struct GenPhase {};

/// Discrete Fourier matrix, entries w^{jk} / sqrt(d).
struct GenHadamard {};

/// Increment (+1) or decrement (-1) of the target mod d, gated on the
/// placed control values.
struct ControlledIncrement {
    int increment = 1; // +1 or -1
};

/// Multi-controlled Toffoli: target incremented by 1 mod d when every
/// placed control holds its control value.
struct Mct {};

/// Arbitrary basis permutation |j> -> |perm[j]>.
struct PermutationGate {
    std::vector<int> perm;
};

/// diag(phases), every entry unit modulus.
struct DiagonalPhase {
    std::vector<cplx> phases;
};

using GateKind =
    std::variant<GenNot, GenPhase, GenHadamard, ControlledIncrement, Mct, PermutationGate, DiagonalPhase>;

/// Netlist mnemonic for a kind: not, phase, hadamard, inc, mct, perm, diag.
std::string kind_name(const GateKind& kind);

bool kind_equal(const GateKind& a, const GateKind& b);

struct Control {
    int wire = 0;
    int value = 0;

    bool operator==(const Control&) const = default;
};

struct PlacedGate {
    GateKind kind;
    int target = 0;
    std::vector<Control> controls;
};

bool operator==(const PlacedGate& a, const PlacedGate& b);

/// Small dense complex matrix, row major. Used for gate matrices and for
/// dense equivalence checking; not meant for large linear algebra.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

    int dim() const { return n_; }
    cplx& at(int row, int col) { return a_[static_cast<std::size_t>(row) * n_ + col]; }
    const cplx& at(int row, int col) const { return a_[static_cast<std::size_t>(row) * n_ + col]; }

    static Matrix identity(int n);
    Matrix adjoint() const;
    Matrix operator*(const Matrix& rhs) const;

    /// max_ij |a_ij - b_ij|
    double max_abs_diff(const Matrix& other) const;
    bool is_unitary(double tol) const;

private:
    int n_ = 0;
    std::vector<cplx> a_;
};

/// d-th root of unity to the given power.
cplx omega_pow(int d, long long power);

/// Build the single-wire matrix of `kind` at local dimension `dim`.
/// Throws std::invalid_argument for parameters invalid at that dimension
/// (non-bijective permutation, wrong-length phase list, non-unit phases,
/// increment other than +/-1).
Matrix gate_matrix(const GateKind& kind, int dim);

/// The inverse of `kind` as one or two kinds (GenHadamard inverts into a
/// Hadamard followed by the index-negation permutation; everything else is
/// a single kind). Used by circuit inversion.
std::vector<GateKind> inverse_kinds(const GateKind& kind, int dim);

} // namespace qcolor
