#pragma once

#include <optional>

#include "quditcolor/circuit.hpp"

namespace qcolor {

/// Dense unitary of a circuit (guard: product of dims <= 4096).
Matrix circuit_unitary(const Circuit& circuit);

/// Exact multi-controlled Toffoli on n_controls+1 wires of dimension d,
/// every control at value d-1. Reference for equivalence checks.
Matrix mct_unitary(int n_controls, int d);

struct EquivalenceReport {
    bool equal = false;
    double max_deviation = 0.0;
    /// Largest amplitude leaking out of the subspace; only populated when a
    /// subspace restriction was requested.
    double max_leakage = 0.0;
};

/// Compares two circuits (or a circuit against a dense unitary) up to one
/// global phase, aligned on the largest-magnitude entry of the reference.
/// With subspace_dims, rows and columns are restricted to indices whose
/// digit on wire w is below subspace_dims[w].
EquivalenceReport verify_equivalence(const Circuit& a, const Circuit& reference,
                                     std::optional<std::vector<int>> subspace_dims = std::nullopt,
                                     double tol = 1e-9);
EquivalenceReport verify_equivalence(const Circuit& a, const Matrix& reference,
                                     std::optional<std::vector<int>> subspace_dims = std::nullopt,
                                     double tol = 1e-9);

/// Ancilla-free lowering of the binary MCT (controls at 1) to one- and
/// two-wire gates on n_controls+1 qubit wires.
Circuit decompose_mct_binary(int n_controls);

/// Three-gate Toffoli using the borrowed |d> level; wires run at d+1.
Circuit decompose_toffoli_qudit(int d);

/// Borrowed-level ladder for the n-controlled Toffoli; wires run at d+2 and
/// only two-wire gates are emitted. Restriction to digits < d equals the
/// exact MCT.
Circuit decompose_mct_qudit(int n_controls, int d);

enum class DecomposeLevel { Mct, TwoWire };

DecomposeLevel decompose_level_from_name(const std::string& name);

/// Lower every multi-controlled gate of a circuit.
///   Mct:     gates with >= 3 controls become trees of two-control gates
///            using the borrowed |d> level; wires are widened to d+1.
///   TwoWire: everything becomes arity <= 2. Binary wires stay binary via
///            the rotation recursion; wires of dimension d >= 3 are widened
///            to d+2 for the borrowed-level ladder.
/// Widening rewrites the remaining gates so they keep acting mod the
/// original dimension; Hadamard gates cannot be widened and are rejected.
Circuit decompose_circuit(const Circuit& circuit, DecomposeLevel level);

} // namespace qcolor
