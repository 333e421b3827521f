#include "quditcolor/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>

namespace qcolor {

namespace {

constexpr std::size_t kDenseGuard = 4096;

std::size_t dense_size(const std::vector<int>& dims) {
    std::size_t total = 1;
    for (int d : dims) total *= static_cast<std::size_t>(d);
    return total;
}

std::vector<int> cycle_perm(int logical_d, int widened_d, int power) {
    int p = power % logical_d;
    if (p < 0) p += logical_d;
    std::vector<int> perm(widened_d);
    for (int j = 0; j < widened_d; ++j) perm[j] = j < logical_d ? (j + p) % logical_d : j;
    return perm;
}

std::vector<int> transposition(int dim, int a, int b) {
    std::vector<int> perm(dim);
    for (int j = 0; j < dim; ++j) perm[j] = j;
    std::swap(perm[a], perm[b]);
    return perm;
}

cplx phase_of(double angle) { return {std::cos(angle), std::sin(angle)}; }

} // namespace

Matrix circuit_unitary(const Circuit& circuit) {
    const std::size_t size = dense_size(circuit.dims());
    if (size > kDenseGuard)
        throw ResourceError("dense unitary of size " + std::to_string(size) +
                            " exceeds the guard of " + std::to_string(kDenseGuard));
    Matrix u(static_cast<int>(size));
    for (std::size_t col = 0; col < size; ++col) {
        StateVector state =
            StateVector::basis_state(circuit.dims(), mixed_radix_decode(col, circuit.dims()));
        circuit.run(state);
        for (std::size_t row = 0; row < size; ++row)
            u.at(static_cast<int>(row), static_cast<int>(col)) = state.amp(row);
    }
    return u;
}

Matrix mct_unitary(int n_controls, int d) {
    Circuit circuit(std::vector<int>(n_controls + 1, d));
    std::vector<Control> controls;
    for (int c = 0; c < n_controls; ++c) controls.push_back(Control{c, d - 1});
    circuit.append(PlacedGate{Mct{}, n_controls, std::move(controls)});
    return circuit_unitary(circuit);
}

namespace {

/// Row/column indices whose digits all satisfy digit[w] < keep[w].
std::vector<std::size_t> subspace_indices(const std::vector<int>& dims, const std::vector<int>& keep) {
    if (keep.size() != dims.size())
        throw std::invalid_argument("subspace dims must match circuit wire count");
    std::vector<std::size_t> pick;
    const std::size_t total = dense_size(dims);
    for (std::size_t idx = 0; idx < total; ++idx) {
        const auto digits = mixed_radix_decode(idx, dims);
        bool inside = true;
        for (std::size_t w = 0; w < dims.size(); ++w) {
            if (digits[w] >= keep[w]) {
                inside = false;
                break;
            }
        }
        if (inside) pick.push_back(idx);
    }
    return pick;
}

Matrix restrict_matrix(const Matrix& u, const std::vector<std::size_t>& pick) {
    Matrix r(static_cast<int>(pick.size()));
    for (std::size_t i = 0; i < pick.size(); ++i)
        for (std::size_t j = 0; j < pick.size(); ++j)
            r.at(static_cast<int>(i), static_cast<int>(j)) =
                u.at(static_cast<int>(pick[i]), static_cast<int>(pick[j]));
    return r;
}

double leakage_of(const Matrix& u, const std::vector<std::size_t>& pick, std::size_t total) {
    std::vector<bool> inside(total, false);
    for (std::size_t idx : pick) inside[idx] = true;
    double worst = 0.0;
    for (std::size_t col : pick)
        for (std::size_t row = 0; row < total; ++row)
            if (!inside[row])
                worst = std::max(worst,
                                 std::abs(u.at(static_cast<int>(row), static_cast<int>(col))));
    return worst;
}

EquivalenceReport compare_aligned(const Matrix& a, const Matrix& reference, double tol) {
    EquivalenceReport report;
    if (a.dim() != reference.dim()) {
        report.equal = false;
        report.max_deviation = 1.0;
        return report;
    }
    int bi = 0, bj = 0;
    double best = -1.0;
    for (int i = 0; i < reference.dim(); ++i) {
        for (int j = 0; j < reference.dim(); ++j) {
            const double mag = std::abs(reference.at(i, j));
            if (mag > best) {
                best = mag;
                bi = i;
                bj = j;
            }
        }
    }
    if (best <= 0.0 || std::abs(a.at(bi, bj)) < 1e-12) {
        report.equal = false;
        report.max_deviation = 1.0;
        return report;
    }
    cplx phase = a.at(bi, bj) / reference.at(bi, bj);
    phase /= std::abs(phase);
    double worst = 0.0;
    for (int i = 0; i < reference.dim(); ++i)
        for (int j = 0; j < reference.dim(); ++j)
            worst = std::max(worst, std::abs(a.at(i, j) - phase * reference.at(i, j)));
    report.max_deviation = worst;
    report.equal = worst <= tol;
    return report;
}

} // namespace

EquivalenceReport verify_equivalence(const Circuit& a, const Matrix& reference,
                                     std::optional<std::vector<int>> subspace_dims, double tol) {
    Matrix ua = circuit_unitary(a);
    EquivalenceReport report;
    if (subspace_dims) {
        const auto pick = subspace_indices(a.dims(), *subspace_dims);
        report = compare_aligned(restrict_matrix(ua, pick), reference, tol);
        report.max_leakage = leakage_of(ua, pick, dense_size(a.dims()));
    } else {
        report = compare_aligned(ua, reference, tol);
    }
    return report;
}

EquivalenceReport verify_equivalence(const Circuit& a, const Circuit& reference,
                                     std::optional<std::vector<int>> subspace_dims, double tol) {
    Matrix ur = circuit_unitary(reference);
    if (subspace_dims && reference.dims() != *subspace_dims) {
        const auto pick = subspace_indices(reference.dims(), *subspace_dims);
        ur = restrict_matrix(ur, pick);
    }
    return verify_equivalence(a, ur, subspace_dims, tol);
}

namespace {

/// Controlled X^s on qubits: H target, controlled diag(1, e^{i pi s}), H.
void emit_cx_pow(Circuit& circuit, int control, int target, double s) {
    if (s == 1.0) {
        circuit.append(PlacedGate{Mct{}, target, {Control{control, 1}}});
        return;
    }
    circuit.append(PlacedGate{GenHadamard{}, target, {}});
    circuit.append(PlacedGate{DiagonalPhase{{cplx{1.0, 0.0}, phase_of(std::numbers::pi * s)}},
                              target,
                              {Control{control, 1}}});
    circuit.append(PlacedGate{GenHadamard{}, target, {}});
}

/// X^s on the target gated on all controls being |1>, by halving the power
/// one control at a time.
void emit_mcx_pow(Circuit& circuit, const std::vector<int>& controls, int target, double s) {
    if (controls.empty()) {
        circuit.append(PlacedGate{GenNot{1}, target, {}});
        return;
    }
    if (controls.size() == 1) {
        emit_cx_pow(circuit, controls[0], target, s);
        return;
    }
    const int last = controls.back();
    const std::vector<int> rest(controls.begin(), controls.end() - 1);
    emit_cx_pow(circuit, last, target, s / 2.0);
    emit_mcx_pow(circuit, rest, last, 1.0);
    emit_cx_pow(circuit, last, target, -s / 2.0);
    emit_mcx_pow(circuit, rest, last, 1.0);
    emit_mcx_pow(circuit, rest, target, s / 2.0);
}

/// Phase e^{i theta} exactly on the all-ones pattern of `wires` (qubits).
void emit_mc_phase(Circuit& circuit, const std::vector<int>& wires, double theta) {
    if (wires.size() == 1) {
        circuit.append(
            PlacedGate{DiagonalPhase{{cplx{1.0, 0.0}, phase_of(theta)}}, wires[0], {}});
        return;
    }
    if (wires.size() == 2) {
        circuit.append(PlacedGate{DiagonalPhase{{cplx{1.0, 0.0}, phase_of(theta)}}, wires[1],
                                  {Control{wires[0], 1}}});
        return;
    }
    const int target = wires.back();
    const int link = wires[wires.size() - 2];
    std::vector<int> rest(wires.begin(), wires.end() - 2);
    circuit.append(PlacedGate{DiagonalPhase{{cplx{1.0, 0.0}, phase_of(theta / 2.0)}}, target,
                              {Control{link, 1}}});
    emit_mcx_pow(circuit, rest, link, 1.0);
    circuit.append(PlacedGate{DiagonalPhase{{cplx{1.0, 0.0}, phase_of(-theta / 2.0)}}, target,
                              {Control{link, 1}}});
    emit_mcx_pow(circuit, rest, link, 1.0);
    rest.push_back(target);
    emit_mc_phase(circuit, rest, theta / 2.0);
}

} // namespace

Circuit decompose_mct_binary(int n_controls) {
    if (n_controls < 1) throw std::invalid_argument("need at least one control");
    Circuit circuit(std::vector<int>(n_controls + 1, 2));
    std::vector<int> controls(n_controls);
    for (int c = 0; c < n_controls; ++c) controls[c] = c;
    emit_mcx_pow(circuit, controls, n_controls, 1.0);
    return circuit;
}

Circuit decompose_toffoli_qudit(int d) {
    if (d < 2) throw std::invalid_argument("dimension must be >= 2");
    Circuit circuit(std::vector<int>(3, d + 1));
    circuit.append(PlacedGate{ControlledIncrement{1}, 1, {Control{0, d - 1}}});
    circuit.append(PlacedGate{PermutationGate{cycle_perm(d, d + 1, 1)}, 2, {Control{1, d}}});
    circuit.append(PlacedGate{ControlledIncrement{-1}, 1, {Control{0, d - 1}}});
    return circuit;
}

Circuit decompose_mct_qudit(int n_controls, int d) {
    if (n_controls < 2) throw std::invalid_argument("need at least two controls");
    if (d < 2) throw std::invalid_argument("dimension must be >= 2");
    const int widened = d + 2;
    Circuit circuit(std::vector<int>(n_controls + 1, widened));
    const int target = n_controls;

    // Pair layer raises every second control to |d>, then the chain walks
    // the markers, landing the full conjunction on the last one at |d+1>
    // (or |d> when a lone control closes the chain).
    std::vector<PlacedGate> ups;
    std::vector<std::pair<int, int>> markers; // (wire, marker level)
    int i = 0;
    while (i + 1 < n_controls) {
        ups.push_back(PlacedGate{ControlledIncrement{1}, i + 1, {Control{i, d - 1}}});
        markers.emplace_back(i + 1, d);
        i += 2;
    }
    if (i < n_controls) markers.emplace_back(i, d - 1);
    std::pair<int, int> acc = markers[0];
    for (std::size_t j = 1; j < markers.size(); ++j) {
        ups.push_back(
            PlacedGate{ControlledIncrement{1}, markers[j].first, {Control{acc.first, acc.second}}});
        acc = {markers[j].first, markers[j].second + 1};
    }

    for (const PlacedGate& g : ups) circuit.append(g);
    circuit.append(PlacedGate{PermutationGate{cycle_perm(d, widened, 1)}, target,
                              {Control{acc.first, acc.second}}});
    for (auto it = ups.rbegin(); it != ups.rend(); ++it) {
        PlacedGate down = *it;
        std::get<ControlledIncrement>(down.kind).increment = -1;
        circuit.append(down);
    }
    return circuit;
}

DecomposeLevel decompose_level_from_name(const std::string& name) {
    if (name == "mct") return DecomposeLevel::Mct;
    if (name == "two-wire") return DecomposeLevel::TwoWire;
    throw ValidationError("unknown decompose level '" + name + "' (expected mct or two-wire)");
}

namespace {

/// Re-expresses a gate kind on a wire widened from dimension d to D so it
/// still acts mod d on the logical levels and fixes the borrowed ones.
GateKind widen_kind(const GateKind& kind, int d, int widened) {
    if (const auto* n = std::get_if<GenNot>(&kind)) return PermutationGate{cycle_perm(d, widened, n->power)};
    if (std::holds_alternative<GenPhase>(kind)) {
        std::vector<cplx> phases(widened, cplx{1.0, 0.0});
        for (int j = 0; j < d; ++j) phases[j] = omega_pow(d, j);
        return DiagonalPhase{std::move(phases)};
    }
    if (std::holds_alternative<GenHadamard>(kind))
        throw ValidationError("Hadamard gates cannot be widened to a larger wire dimension; "
                              "lower a netlist without Hadamards");
    if (const auto* inc = std::get_if<ControlledIncrement>(&kind))
        return PermutationGate{cycle_perm(d, widened, inc->increment)};
    if (std::holds_alternative<Mct>(kind)) return PermutationGate{cycle_perm(d, widened, 1)};
    if (const auto* perm = std::get_if<PermutationGate>(&kind)) {
        std::vector<int> wide(widened);
        for (int j = 0; j < widened; ++j) wide[j] = j;
        for (int j = 0; j < d; ++j) wide[j] = perm->perm[j];
        return PermutationGate{std::move(wide)};
    }
    const auto& diag = std::get<DiagonalPhase>(kind);
    std::vector<cplx> phases(widened, cplx{1.0, 0.0});
    for (int j = 0; j < d; ++j) phases[j] = diag.phases[j];
    return DiagonalPhase{std::move(phases)};
}

/// Conjugation that moves every control value onto d-1 so borrowed-level
/// markers become unambiguous. Self-inverse.
std::vector<PlacedGate> control_normalizers(const std::vector<Control>& controls, int d,
                                            int widened) {
    std::vector<PlacedGate> swaps;
    for (const Control& c : controls)
        if (c.value != d - 1)
            swaps.push_back(
                PlacedGate{PermutationGate{transposition(widened, c.value, d - 1)}, c.wire, {}});
    return swaps;
}

void lower_multi_binary(Circuit& out, const PlacedGate& gate) {
    // Move value-0 controls onto value 1.
    std::vector<int> flips;
    std::vector<int> controls;
    for (const Control& c : gate.controls) {
        if (c.value == 0) flips.push_back(c.wire);
        controls.push_back(c.wire);
    }
    for (int w : flips) out.append(PlacedGate{GenNot{1}, w, {}});

    if (std::holds_alternative<Mct>(gate.kind) ||
        std::holds_alternative<ControlledIncrement>(gate.kind)) {
        emit_mcx_pow(out, controls, gate.target, 1.0);
    } else if (const auto* n = std::get_if<GenNot>(&gate.kind)) {
        if (((n->power % 2) + 2) % 2 == 1) emit_mcx_pow(out, controls, gate.target, 1.0);
    } else if (const auto* perm = std::get_if<PermutationGate>(&gate.kind)) {
        if (perm->perm[0] == 1) emit_mcx_pow(out, controls, gate.target, 1.0);
    } else if (std::holds_alternative<GenPhase>(*&gate.kind)) {
        std::vector<int> wires = controls;
        wires.push_back(gate.target);
        emit_mc_phase(out, wires, std::numbers::pi);
    } else if (const auto* diag = std::get_if<DiagonalPhase>(&gate.kind)) {
        // diag(p0, p1) = p0 on the controls alone, then p1/p0 on the full pattern.
        const double a0 = std::arg(diag->phases[0]);
        const double rel = std::arg(diag->phases[1] / diag->phases[0]);
        if (a0 != 0.0) emit_mc_phase(out, controls, a0);
        if (rel != 0.0) {
            std::vector<int> wires = controls;
            wires.push_back(gate.target);
            emit_mc_phase(out, wires, rel);
        }
    } else {
        throw ValidationError("cannot lower a multi-controlled " + kind_name(gate.kind) + " gate");
    }

    for (int w : flips) out.append(PlacedGate{GenNot{1}, w, {}});
}

/// Borrowed-level conjunction chain at widened dims; emits only one- and
/// two-wire gates, then applies the widened kind under a single control.
void lower_multi_chain(Circuit& out, const PlacedGate& gate, int d, int widened) {
    const auto normalizers = control_normalizers(gate.controls, d, widened);
    for (const PlacedGate& g : normalizers) out.append(g);

    std::vector<PlacedGate> ups;
    std::vector<std::pair<int, int>> markers;
    std::size_t i = 0;
    while (i + 1 < gate.controls.size()) {
        ups.push_back(PlacedGate{ControlledIncrement{1}, gate.controls[i + 1].wire,
                                 {Control{gate.controls[i].wire, d - 1}}});
        markers.emplace_back(gate.controls[i + 1].wire, d);
        i += 2;
    }
    if (i < gate.controls.size()) markers.emplace_back(gate.controls[i].wire, d - 1);
    std::pair<int, int> acc = markers[0];
    for (std::size_t j = 1; j < markers.size(); ++j) {
        ups.push_back(
            PlacedGate{ControlledIncrement{1}, markers[j].first, {Control{acc.first, acc.second}}});
        acc = {markers[j].first, markers[j].second + 1};
    }

    for (const PlacedGate& g : ups) out.append(g);
    out.append(PlacedGate{widen_kind(gate.kind, d, widened), gate.target,
                          {Control{acc.first, acc.second}}});
    for (auto it = ups.rbegin(); it != ups.rend(); ++it) {
        PlacedGate down = *it;
        std::get<ControlledIncrement>(down.kind).increment = -1;
        out.append(down);
    }
    for (const PlacedGate& g : normalizers) out.append(g);
}

/// Conjunction tree that stays at Toffoli arity: two-control increments
/// raise a fresh wire to |d>, markers are preferred as controls.
void lower_multi_toffoli_tree(Circuit& out, const PlacedGate& gate, int d, int widened) {
    const auto normalizers = control_normalizers(gate.controls, d, widened);
    for (const PlacedGate& g : normalizers) out.append(g);

    std::deque<std::pair<int, int>> originals;
    std::deque<std::pair<int, int>> marks;
    for (const Control& c : gate.controls) originals.emplace_back(c.wire, d - 1);

    std::vector<PlacedGate> ups;
    while (originals.size() + marks.size() > 2) {
        auto take = [&]() {
            if (!marks.empty()) {
                auto v = marks.front();
                marks.pop_front();
                return v;
            }
            auto v = originals.front();
            originals.pop_front();
            return v;
        };
        const auto c1 = take();
        const auto c2 = take();
        const auto tgt = originals.front();
        originals.pop_front();
        ups.push_back(PlacedGate{
            Mct{}, tgt.first, {Control{c1.first, c1.second}, Control{c2.first, c2.second}}});
        marks.emplace_back(tgt.first, tgt.second + 1);
    }

    std::vector<Control> final_controls;
    for (const auto& [w, v] : marks) final_controls.push_back(Control{w, v});
    for (const auto& [w, v] : originals) final_controls.push_back(Control{w, v});

    for (const PlacedGate& g : ups) out.append(g);
    out.append(PlacedGate{widen_kind(gate.kind, d, widened), gate.target, final_controls});
    for (auto it = ups.rbegin(); it != ups.rend(); ++it) {
        PlacedGate down = *it;
        down.kind = ControlledIncrement{-1};
        out.append(down);
    }
    for (const PlacedGate& g : normalizers) out.append(g);
}

} // namespace

Circuit decompose_circuit(const Circuit& circuit, DecomposeLevel level) {
    const std::size_t threshold = level == DecomposeLevel::Mct ? 3 : 2;
    bool needs_lowering = false;
    for (const PlacedGate& g : circuit.gates())
        if (g.controls.size() >= threshold) needs_lowering = true;
    if (!needs_lowering) return circuit;

    const int d = circuit.dims()[0];
    for (int dim : circuit.dims())
        if (dim != d)
            throw ValidationError("lowering requires a uniform wire dimension");

    if (level == DecomposeLevel::TwoWire && d == 2) {
        Circuit out(circuit.dims(), circuit.roles());
        for (const PlacedGate& g : circuit.gates()) {
            if (g.controls.size() < threshold)
                out.append(g);
            else
                lower_multi_binary(out, g);
        }
        return out;
    }

    const int widened = level == DecomposeLevel::Mct ? d + 1 : d + 2;
    Circuit out(std::vector<int>(circuit.dims().size(), widened), circuit.roles());
    for (const PlacedGate& g : circuit.gates()) {
        if (g.controls.size() < threshold) {
            PlacedGate mapped = g;
            mapped.kind = widen_kind(g.kind, d, widened);
            out.append(mapped);
        } else if (level == DecomposeLevel::Mct) {
            lower_multi_toffoli_tree(out, g, d, widened);
        } else {
            lower_multi_chain(out, g, d, widened);
        }
    }
    return out;
}

} // namespace qcolor
