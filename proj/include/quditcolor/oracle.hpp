#pragma once

#include <vector>

#include "quditcolor/circuit.hpp"
#include "quditcolor/graph.hpp"

namespace qcolor {

enum class KickbackMode { PaperExact, PiPhase };

KickbackMode kickback_mode_from_name(const std::string& name);
std::string kickback_mode_name(KickbackMode mode);

/// Wire plan for a coloring oracle: per-vertex color registers first, then
/// comparator ancillas, then the invalid-color flag (only when d^c > k),
/// then the output wire.
struct RegisterLayout {
    int n = 0; // vertices
    int k = 0; // colors
    int d = 0; // local dimension
    int c = 0; // digits per vertex = ceil(log_d k)
    int m = 0; // data wires = n * c
    int r = 0; // comparator/scratch ancillas (<= n)
    bool has_invalid_flag = false;

    int data_wire(int vertex, int digit) const { return vertex * c + digit; }
    int ancilla_wire(int index) const { return m + index; }
    int invalid_flag_wire() const { return has_invalid_flag ? m + r : -1; }
    int output_wire() const { return m + r + (has_invalid_flag ? 1 : 0); }
    int total_wires() const { return m + r + (has_invalid_flag ? 1 : 0) + 1; }

    std::vector<int> wire_dims() const { return std::vector<int>(total_wires(), d); }
    std::vector<WireRole> wire_roles() const;
    std::vector<int> data_wires() const;
};

/// Sizes the registers for an instance. k=1 is accepted only for edgeless
/// graphs; k<1 or d<2 is a validation error.
RegisterLayout plan_layout(const Graph& graph, int k, int d);

/// Single-wire shift gates mapping the digit pattern of `invalid_color`
/// (an integer in [k, d^c), rendered over `wires.size()` base-d digits,
/// high digit first) to the all-(d-1) pattern on those wires.
std::vector<PlacedGate> synth_qudit_activation(const std::vector<int>& wires, int d, int k,
                                               int invalid_color);

/// Invalid-color detector. Net action on a basis state with the scratch
/// ancillas at |d-1> and the flag at |0>: the flag ends at |d-1> iff no
/// vertex register encodes a value >= k; scratch and data wires are
/// restored. Requires layout.has_invalid_flag.
std::vector<PlacedGate> synth_icd(const RegisterLayout& layout);

/// Equality comparator over two c-digit registers. With the ancilla at
/// |d-1>, it ends at |0> when a == b digit-wise and stays at |d-1>
/// otherwise; a and b are restored either way.
std::vector<PlacedGate> synth_comparator(const RegisterLayout& layout,
                                         const std::vector<int>& wires_a,
                                         const std::vector<int>& wires_b, int ancilla);
std::vector<PlacedGate> synth_inverse_comparator(const RegisterLayout& layout,
                                                 const std::vector<int>& wires_a,
                                                 const std::vector<int>& wires_b, int ancilla);

/// true iff every color is < k and no edge joins equal colors.
bool classical_coloring_check(const std::vector<int>& colors, const Graph& graph, int k);

class OracleCircuit {
public:
    OracleCircuit(RegisterLayout layout, Circuit circuit, Graph graph, KickbackMode mode);

    const RegisterLayout& layout() const { return layout_; }
    const Circuit& circuit() const { return circuit_; }
    const Graph& graph() const { return graph_; }
    KickbackMode kickback_mode() const { return mode_; }

    /// Classical predicate the oracle phase must follow: the data digits
    /// decode to per-vertex colors that form a proper coloring with only
    /// valid colors.
    bool marked(const std::vector<int>& data_digits) const;

    /// Colors encoded by a data basis index (one value per vertex).
    std::vector<int> decode_colors(const std::vector<int>& data_digits) const;

    /// All marked data basis strings in ascending index order.
    std::vector<std::string> marked_states() const;

private:
    RegisterLayout layout_;
    Circuit circuit_;
    Graph graph_;
    KickbackMode mode_;
};

/// Full oracle: invalid-color detection, per-edge comparators with verdict
/// folding, the phase kickback on the output wire, and the uncomputation
/// mirror. The circuit acts as a pure phase on data basis states (see
/// OracleCircuit::marked) and restores every ancilla.
OracleCircuit synth_oracle(const Graph& graph, int k, int d,
                           KickbackMode mode = KickbackMode::PaperExact);

} // namespace qcolor
