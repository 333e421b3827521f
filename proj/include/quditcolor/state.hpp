#pragma once

#include <map>
#include <string>
#include <vector>

#include "quditcolor/gates.hpp"
#include "quditcolor/types.hpp"

namespace qcolor {

/// Flat index of mixed-radix digits; wire 0 is the highest-order digit.
std::size_t mixed_radix_encode(const std::vector<int>& digits, const std::vector<int>& dims);
std::vector<int> mixed_radix_decode(std::size_t index, const std::vector<int>& dims);

/// Render digits as a basis string ("011000"); dims above 9 separate the
/// digits with '.'.
std::string basis_string(const std::vector<int>& digits, const std::vector<int>& dims);

/// Dense amplitude vector over wires of (possibly different) local
/// dimensions. Wire 0 is the most significant digit of the flat index.
class StateVector {
public:
    StateVector(std::vector<int> dims, std::vector<cplx> amplitudes);

    static StateVector zero_state(const std::vector<int>& dims);
    static StateVector basis_state(const std::vector<int>& dims, const std::vector<int>& digits);

    const std::vector<int>& dims() const { return dims_; }
    std::size_t size() const { return amps_.size(); }
    int num_wires() const { return static_cast<int>(dims_.size()); }

    const cplx& amp(std::size_t index) const { return amps_[index]; }
    cplx& amp(std::size_t index) { return amps_[index]; }
    const std::vector<cplx>& amplitudes() const { return amps_; }

    double norm() const;

private:
    std::vector<int> dims_;
    std::vector<cplx> amps_;
};

/// Apply one placed gate in place. Wires must be distinct and in range and
/// control values valid for their wires (structural error otherwise).
void apply_gate(StateVector& state, const PlacedGate& gate);

/// Marginal probability distribution over the given wires, keyed by basis
/// string in wire-argument order. Probabilities sum to 1 for a normalized
/// state. Empty wire set is a parameter error.
std::map<std::string, double> measure_probabilities(const StateVector& state,
                                                    const std::vector<int>& wires);

} // namespace qcolor
