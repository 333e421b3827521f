#include "quditcolor/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace qcolor {

KickbackMode kickback_mode_from_name(const std::string& name) {
    if (name == "paper-exact") return KickbackMode::PaperExact;
    if (name == "pi-phase") return KickbackMode::PiPhase;
    throw ValidationError("unknown kickback mode '" + name +
                          "' (expected paper-exact or pi-phase)");
}

std::string kickback_mode_name(KickbackMode mode) {
    return mode == KickbackMode::PaperExact ? "paper-exact" : "pi-phase";
}

std::vector<WireRole> RegisterLayout::wire_roles() const {
    std::vector<WireRole> roles(total_wires(), WireRole::Ancilla);
    for (int w = 0; w < m; ++w) roles[w] = WireRole::Data;
    if (has_invalid_flag) roles[invalid_flag_wire()] = WireRole::Flag;
    roles[output_wire()] = WireRole::Output;
    return roles;
}

std::vector<int> RegisterLayout::data_wires() const {
    std::vector<int> wires(m);
    for (int w = 0; w < m; ++w) wires[w] = w;
    return wires;
}

namespace {

int digits_per_vertex(int k, int d) {
    int c = 0;
    long long span = 1;
    while (span < k) {
        span *= d;
        ++c;
    }
    return c;
}

long long pow_ll(int base, int exp) {
    long long v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

/// Number of j>i neighbours per vertex; the comparator schedule walks these.
std::vector<int> forward_degrees(const Graph& graph) {
    std::vector<int> deg(graph.num_vertices(), 0);
    for (auto [u, v] : graph.edges()) ++deg[u]; // u < v by Graph invariant
    return deg;
}

/// Ancillas needed by the comparator schedule: singles grow from the
/// bottom, folded verdicts stack from the top, and a vertex with e >= 2
/// forward edges holds e scratch verdicts plus its fold target at once.
int comparator_ancillas_needed(const Graph& graph) {
    const auto deg = forward_degrees(graph);
    int singles = 0;
    int folds = 0;
    int peak = 0;
    for (int i = 0; i < graph.num_vertices(); ++i) {
        const int e = deg[i];
        if (e == 0) continue;
        if (e == 1) {
            ++singles;
            peak = std::max(peak, singles + folds);
        } else {
            ++folds;
            peak = std::max(peak, singles + e + folds);
        }
    }
    return peak;
}

std::vector<int> vertex_wires(const RegisterLayout& layout, int vertex) {
    std::vector<int> wires(layout.c);
    for (int t = 0; t < layout.c; ++t) wires[t] = layout.data_wire(vertex, t);
    return wires;
}

void extend(std::vector<PlacedGate>& into, std::vector<PlacedGate> gates) {
    for (PlacedGate& g : gates) into.push_back(std::move(g));
}

std::vector<PlacedGate> invert_gates(const std::vector<PlacedGate>& gates, int d) {
    std::vector<PlacedGate> out;
    out.reserve(gates.size());
    for (auto it = gates.rbegin(); it != gates.rend(); ++it)
        for (GateKind& kind : inverse_kinds(it->kind, d))
            out.push_back(PlacedGate{std::move(kind), it->target, it->controls});
    return out;
}

/// Comparator core shared by forward and inverse variants.
std::vector<PlacedGate> comparator_gates(const RegisterLayout& layout,
                                         const std::vector<int>& wires_a,
                                         const std::vector<int>& wires_b, int ancilla) {
    const int d = layout.d;
    const int c = static_cast<int>(wires_a.size());
    if (static_cast<int>(wires_b.size()) != c)
        throw std::invalid_argument("comparator registers must have equal width");
    std::vector<bool> used(layout.total_wires(), false);
    auto claim = [&](int w) {
        if (w < 0 || w >= layout.total_wires())
            throw std::invalid_argument("comparator wire out of range");
        if (used[w]) throw std::invalid_argument("comparator wires overlap");
        used[w] = true;
    };
    for (int w : wires_a) claim(w);
    for (int w : wires_b) claim(w);
    claim(ancilla);

    std::vector<PlacedGate> gates;
    // b -= a digit-wise: v controlled decrements per control value v.
    for (int t = 0; t < c; ++t)
        for (int v = 1; v < d; ++v)
            for (int rep = 0; rep < v; ++rep)
                gates.push_back(
                    PlacedGate{ControlledIncrement{-1}, wires_b[t], {Control{wires_a[t], v}}});
    // All b digits zero exactly when a == b; the increment takes the
    // ancilla from d-1 to 0 in that case and leaves d-1 otherwise.
    std::vector<Control> zeros;
    for (int t = 0; t < c; ++t) zeros.push_back(Control{wires_b[t], 0});
    gates.push_back(PlacedGate{Mct{}, ancilla, std::move(zeros)});
    // restore b
    for (int t = 0; t < c; ++t)
        for (int v = 1; v < d; ++v)
            for (int rep = 0; rep < v; ++rep)
                gates.push_back(
                    PlacedGate{ControlledIncrement{1}, wires_b[t], {Control{wires_a[t], v}}});
    return gates;
}

} // namespace

RegisterLayout plan_layout(const Graph& graph, int k, int d) {
    if (d < 2) throw ValidationError("dimension d must be >= 2");
    if (k < 1) throw ValidationError("color count k must be >= 1");
    if (k == 1 && graph.num_edges() > 0)
        throw ValidationError("k=1 coloring is only solvable for edgeless graphs");

    RegisterLayout layout;
    layout.n = graph.num_vertices();
    layout.k = k;
    layout.d = d;
    layout.c = digits_per_vertex(k, d);
    layout.m = layout.n * layout.c;
    layout.has_invalid_flag = pow_ll(d, layout.c) > k;
    // The detector parks one validity verdict per vertex on the scratch
    // ancillas, so an invalid flag forces the full pool.
    layout.r = layout.has_invalid_flag ? layout.n : comparator_ancillas_needed(graph);
    return layout;
}

std::vector<PlacedGate> synth_qudit_activation(const std::vector<int>& wires, int d, int k,
                                               int invalid_color) {
    const int c = static_cast<int>(wires.size());
    if (invalid_color < k) throw std::invalid_argument("invalid_color must be >= k");
    if (invalid_color >= pow_ll(d, c)) throw std::invalid_argument("invalid_color out of range");

    std::vector<PlacedGate> gates;
    int value = invalid_color;
    for (int t = c - 1; t >= 0; --t) {
        const int digit = value % d;
        value /= d;
        const int power = (d - 1 - digit) % d;
        if (power != 0) gates.push_back(PlacedGate{GenNot{power}, wires[t], {}});
    }
    std::reverse(gates.begin(), gates.end()); // high digit first
    return gates;
}

std::vector<PlacedGate> synth_icd(const RegisterLayout& layout) {
    if (!layout.has_invalid_flag)
        throw std::invalid_argument("layout has no invalid colors to detect");
    const int d = layout.d;
    const long long span = pow_ll(d, layout.c);

    // Per-vertex validity verdicts: ancilla i drops from d-1 to 0 when
    // vertex i holds any invalid color. A vertex holds exactly one color,
    // so at most one detector fires per ancilla.
    std::vector<PlacedGate> writes;
    for (int vertex = 0; vertex < layout.n; ++vertex) {
        const std::vector<int> wires = vertex_wires(layout, vertex);
        for (long long invalid = layout.k; invalid < span; ++invalid) {
            const auto activation =
                synth_qudit_activation(wires, d, layout.k, static_cast<int>(invalid));
            extend(writes, activation);
            std::vector<Control> controls;
            for (int w : wires) controls.push_back(Control{w, d - 1});
            writes.push_back(PlacedGate{Mct{}, layout.ancilla_wire(vertex), std::move(controls)});
            extend(writes, invert_gates(activation, d));
        }
    }

    std::vector<PlacedGate> gates = writes;
    // Fold the verdicts into the flag: |0> -> |d-2>, then one increment
    // exactly when every vertex is valid, landing on |d-1>.
    if (d > 2) gates.push_back(PlacedGate{GenNot{d - 2}, layout.invalid_flag_wire(), {}});
    std::vector<Control> all_valid;
    for (int vertex = 0; vertex < layout.n; ++vertex)
        all_valid.push_back(Control{layout.ancilla_wire(vertex), d - 1});
    gates.push_back(PlacedGate{Mct{}, layout.invalid_flag_wire(), std::move(all_valid)});
    extend(gates, invert_gates(writes, d));
    return gates;
}

std::vector<PlacedGate> synth_comparator(const RegisterLayout& layout,
                                         const std::vector<int>& wires_a,
                                         const std::vector<int>& wires_b, int ancilla) {
    return comparator_gates(layout, wires_a, wires_b, ancilla);
}

std::vector<PlacedGate> synth_inverse_comparator(const RegisterLayout& layout,
                                                 const std::vector<int>& wires_a,
                                                 const std::vector<int>& wires_b, int ancilla) {
    return invert_gates(comparator_gates(layout, wires_a, wires_b, ancilla), layout.d);
}

bool classical_coloring_check(const std::vector<int>& colors, const Graph& graph, int k) {
    if (static_cast<int>(colors.size()) != graph.num_vertices()) return false;
    for (int c : colors)
        if (c < 0 || c >= k) return false;
    for (auto [u, v] : graph.edges())
        if (colors[u] == colors[v]) return false;
    return true;
}

OracleCircuit::OracleCircuit(RegisterLayout layout, Circuit circuit, Graph graph, KickbackMode mode)
    : layout_(std::move(layout)), circuit_(std::move(circuit)), graph_(std::move(graph)),
      mode_(mode) {}

std::vector<int> OracleCircuit::decode_colors(const std::vector<int>& data_digits) const {
    if (static_cast<int>(data_digits.size()) != layout_.m)
        throw std::invalid_argument("expected one digit per data wire");
    std::vector<int> colors(layout_.n, 0);
    for (int vertex = 0; vertex < layout_.n; ++vertex) {
        int value = 0;
        for (int t = 0; t < layout_.c; ++t) value = value * layout_.d + data_digits[vertex * layout_.c + t];
        colors[vertex] = value;
    }
    return colors;
}

bool OracleCircuit::marked(const std::vector<int>& data_digits) const {
    return classical_coloring_check(decode_colors(data_digits), graph_, layout_.k);
}

std::vector<std::string> OracleCircuit::marked_states() const {
    const std::vector<int> data_dims(layout_.m, layout_.d);
    std::size_t total = 1;
    for (int i = 0; i < layout_.m; ++i) {
        total *= static_cast<std::size_t>(layout_.d);
        if (total > (std::size_t{1} << 20))
            throw ResourceError("marked-state enumeration exceeds the guard of 2^20 states");
    }
    std::vector<std::string> out;
    for (std::size_t idx = 0; idx < total; ++idx) {
        const auto digits = mixed_radix_decode(idx, data_dims);
        if (marked(digits)) out.push_back(basis_string(digits, data_dims));
    }
    return out;
}

OracleCircuit synth_oracle(const Graph& graph, int k, int d, KickbackMode mode) {
    const RegisterLayout layout = plan_layout(graph, k, d);
    Circuit circuit(layout.wire_dims(), layout.wire_roles());

    std::vector<PlacedGate> icd;
    if (layout.has_invalid_flag) icd = synth_icd(layout);

    // Comparator schedule: one verdict ancilla per forward edge of the
    // vertex under scan. A lone verdict stays live; two or more fold into
    // the highest free ancilla so the scratch pool can be reused.
    std::vector<PlacedGate> verdicts;
    std::vector<int> live; // wires feeding the kickback controls
    const auto deg = forward_degrees(graph);
    int next_single = 0;              // grows upward
    int next_fold = layout.r - 1;     // grows downward
    for (int i = 0; i < graph.num_vertices(); ++i) {
        if (deg[i] == 0) continue;
        std::vector<std::pair<std::vector<int>, int>> written; // (peer wires, ancilla)
        int scratch = next_single;
        for (int j = i + 1; j < graph.num_vertices(); ++j) {
            if (!graph.has_edge(i, j)) continue;
            const int anc = layout.ancilla_wire(scratch++);
            extend(verdicts, synth_comparator(layout, vertex_wires(layout, i),
                                              vertex_wires(layout, j), anc));
            written.emplace_back(vertex_wires(layout, j), anc);
        }
        if (written.size() == 1) {
            live.push_back(written[0].second);
            ++next_single;
            continue;
        }
        // Fold: target steps d-1 -> d-2, then increments back to d-1 only
        // when every verdict of this vertex reads "different".
        const int fold = layout.ancilla_wire(next_fold--);
        verdicts.push_back(PlacedGate{GenNot{-1}, fold, {}});
        std::vector<Control> controls;
        for (const auto& [peer, anc] : written) controls.push_back(Control{anc, d - 1});
        verdicts.push_back(PlacedGate{Mct{}, fold, std::move(controls)});
        for (const auto& [peer, anc] : written)
            extend(verdicts, synth_inverse_comparator(layout, vertex_wires(layout, i), peer, anc));
        live.push_back(fold);
    }

    circuit.append_all(icd);
    circuit.append_all(verdicts);

    std::sort(live.begin(), live.end());
    std::vector<Control> kick_controls;
    for (int w : live) kick_controls.push_back(Control{w, d - 1});
    if (layout.has_invalid_flag) kick_controls.push_back(Control{layout.invalid_flag_wire(), d - 1});
    if (mode == KickbackMode::PaperExact) {
        circuit.append(PlacedGate{Mct{}, layout.output_wire(), std::move(kick_controls)});
    } else {
        std::vector<cplx> phases(d, cplx{1.0, 0.0});
        phases[d - 1] = cplx{-1.0, 0.0};
        circuit.append(
            PlacedGate{DiagonalPhase{std::move(phases)}, layout.output_wire(), std::move(kick_controls)});
    }

    circuit.append_all(invert_gates(verdicts, d));
    if (layout.has_invalid_flag) circuit.append_all(invert_gates(icd, d));

    return OracleCircuit(layout, std::move(circuit), graph, mode);
}

} // namespace qcolor
