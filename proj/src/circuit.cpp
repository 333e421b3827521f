#include "quditcolor/circuit.hpp"

#include <algorithm>

namespace qcolor {

Circuit::Circuit(std::vector<int> dims, std::vector<WireRole> roles)
    : dims_(std::move(dims)), roles_(std::move(roles)) {
    for (int d : dims_) {
        if (d < 2) throw std::invalid_argument("every wire dimension must be >= 2");
    }
    if (!roles_.empty() && roles_.size() != dims_.size())
        throw std::invalid_argument("role list length does not match wire count");
}

void Circuit::validate(const PlacedGate& gate) const {
    const int wires = num_wires();
    if (gate.target < 0 || gate.target >= wires)
        throw std::invalid_argument("target wire " + std::to_string(gate.target) + " out of range");
    std::vector<bool> used(wires, false);
    used[gate.target] = true;
    for (const Control& c : gate.controls) {
        if (c.wire < 0 || c.wire >= wires)
            throw std::invalid_argument("control wire " + std::to_string(c.wire) + " out of range");
        if (used[c.wire]) throw std::invalid_argument("wire referenced twice in one gate");
        used[c.wire] = true;
        if (c.value < 0 || c.value >= dims_[c.wire])
            throw std::invalid_argument("control value " + std::to_string(c.value) +
                                        " out of range on wire " + std::to_string(c.wire));
    }
    gate_matrix(gate.kind, dims_[gate.target]); // parameter check at target dim
}

void Circuit::append(PlacedGate gate) {
    validate(gate);
    gates_.push_back(std::move(gate));
}

void Circuit::append_all(const std::vector<PlacedGate>& gates) {
    for (const PlacedGate& g : gates) append(g);
}

Circuit Circuit::inverted() const {
    Circuit inv(dims_, roles_);
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        for (GateKind& kind : inverse_kinds(it->kind, dims_[it->target]))
            inv.append(PlacedGate{std::move(kind), it->target, it->controls});
    }
    return inv;
}

int Circuit::depth() const {
    std::vector<int> wire_layer(dims_.size(), 0);
    int depth = 0;
    for (const PlacedGate& g : gates_) {
        int layer = wire_layer[g.target];
        for (const Control& c : g.controls) layer = std::max(layer, wire_layer[c.wire]);
        ++layer;
        wire_layer[g.target] = layer;
        for (const Control& c : g.controls) wire_layer[c.wire] = layer;
        depth = std::max(depth, layer);
    }
    return depth;
}

GateCounts Circuit::gate_count() const {
    GateCounts counts;
    counts.total = gates_.size();
    for (const PlacedGate& g : gates_) {
        ++counts.by_kind[kind_name(g.kind)];
        ++counts.by_arity[1 + static_cast<int>(g.controls.size())];
    }
    return counts;
}

void Circuit::run(StateVector& state) const {
    if (state.dims() != dims_) throw std::invalid_argument("state dims do not match circuit dims");
    for (const PlacedGate& g : gates_) apply_gate(state, g);
}

bool Circuit::operator==(const Circuit& other) const {
    return dims_ == other.dims_ && roles_ == other.roles_ && gates_ == other.gates_;
}

} // namespace qcolor
