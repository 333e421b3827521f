#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quditcolor/gates.hpp"
#include "quditcolor/state.hpp"

namespace qcolor {

struct GateCounts {
    std::size_t total = 0;
    std::map<std::string, std::size_t> by_kind;
    std::map<int, std::size_t> by_arity; // arity = 1 + number of controls
};

/// Ordered placed gates over a fixed wire layout. Wire dims are immutable
/// after construction; appended gates are validated against them.
class Circuit {
public:
    explicit Circuit(std::vector<int> dims, std::vector<WireRole> roles = {});

    const std::vector<int>& dims() const { return dims_; }
    int num_wires() const { return static_cast<int>(dims_.size()); }
    const std::vector<PlacedGate>& gates() const { return gates_; }
    const std::vector<WireRole>& roles() const { return roles_; }
    bool has_roles() const { return !roles_.empty(); }

    void append(PlacedGate gate);
    void append_all(const std::vector<PlacedGate>& gates);

    /// Reverse-order inverse; composing this after the original acts as the
    /// identity. Gate kinds normalize (mct inverts into inc -1, hadamard
    /// into hadamard + perm).
    Circuit inverted() const;

    /// As-soon-as-possible layering over wire overlap.
    int depth() const;
    GateCounts gate_count() const;

    /// Run the circuit on a state (dims must match).
    void run(StateVector& state) const;

    bool operator==(const Circuit& other) const;

private:
    void validate(const PlacedGate& gate) const;

    std::vector<int> dims_;
    std::vector<WireRole> roles_;
    std::vector<PlacedGate> gates_;
};

/// Line-oriented netlist. First line `dims d0 d1 ...`, optional `roles ...`
/// line, then one gate per line; `#` starts a comment. Serialization is
/// byte-stable and parse(serialize(c)) reproduces c gate for gate.
std::string serialize_netlist(const Circuit& circuit);
Circuit parse_netlist(const std::string& text);

} // namespace qcolor
