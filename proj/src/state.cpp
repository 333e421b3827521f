#include "quditcolor/state.hpp"

#include <algorithm>
#include <cmath>

namespace qcolor {

namespace {

std::size_t checked_total(const std::vector<int>& dims) {
    if (dims.empty()) return 1;
    std::size_t total = 1;
    for (int d : dims) {
        if (d < 2) throw std::invalid_argument("every wire dimension must be >= 2");
        total *= static_cast<std::size_t>(d);
    }
    return total;
}

std::vector<std::size_t> strides_of(const std::vector<int>& dims) {
    std::vector<std::size_t> strides(dims.size(), 1);
    for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i)
        strides[i] = strides[i + 1] * static_cast<std::size_t>(dims[i + 1]);
    return strides;
}

} // namespace

std::size_t mixed_radix_encode(const std::vector<int>& digits, const std::vector<int>& dims) {
    if (digits.size() != dims.size())
        throw std::invalid_argument("digit count does not match wire count");
    std::size_t index = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (digits[i] < 0 || digits[i] >= dims[i])
            throw std::invalid_argument("digit " + std::to_string(i) + " out of range");
        index = index * static_cast<std::size_t>(dims[i]) + static_cast<std::size_t>(digits[i]);
    }
    return index;
}

std::vector<int> mixed_radix_decode(std::size_t index, const std::vector<int>& dims) {
    std::vector<int> digits(dims.size());
    for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
        digits[i] = static_cast<int>(index % static_cast<std::size_t>(dims[i]));
        index /= static_cast<std::size_t>(dims[i]);
    }
    if (index != 0) throw std::invalid_argument("index out of range for dims");
    return digits;
}

std::string basis_string(const std::vector<int>& digits, const std::vector<int>& dims) {
    const bool wide = std::any_of(dims.begin(), dims.end(), [](int d) { return d > 10; });
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (wide && i > 0) out += '.';
        out += std::to_string(digits[i]);
    }
    return out;
}

StateVector::StateVector(std::vector<int> dims, std::vector<cplx> amplitudes)
    : dims_(std::move(dims)), amps_(std::move(amplitudes)) {
    if (amps_.size() != checked_total(dims_))
        throw std::invalid_argument("amplitude vector length does not match dims");
}

StateVector StateVector::zero_state(const std::vector<int>& dims) {
    std::vector<cplx> amps(checked_total(dims));
    amps[0] = 1.0;
    return StateVector(dims, std::move(amps));
}

StateVector StateVector::basis_state(const std::vector<int>& dims, const std::vector<int>& digits) {
    std::vector<cplx> amps(checked_total(dims));
    amps[mixed_radix_encode(digits, dims)] = 1.0;
    return StateVector(dims, std::move(amps));
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const cplx& a : amps_) sum += std::norm(a);
    return std::sqrt(sum);
}

void apply_gate(StateVector& state, const PlacedGate& gate) {
    const auto& dims = state.dims();
    const int wires = state.num_wires();
    if (gate.target < 0 || gate.target >= wires)
        throw std::invalid_argument("target wire out of range");
    std::vector<bool> used(wires, false);
    used[gate.target] = true;
    for (const Control& c : gate.controls) {
        if (c.wire < 0 || c.wire >= wires) throw std::invalid_argument("control wire out of range");
        if (used[c.wire]) throw std::invalid_argument("wire referenced twice in one gate");
        used[c.wire] = true;
        if (c.value < 0 || c.value >= dims[c.wire])
            throw std::invalid_argument("control value out of range for wire dimension");
    }

    const Matrix u = gate_matrix(gate.kind, dims[gate.target]);
    const auto strides = strides_of(dims);
    const std::size_t stride_t = strides[gate.target];
    const int dt = dims[gate.target];
    const std::size_t total = state.size();
    const std::size_t block = stride_t * static_cast<std::size_t>(dt);

    // Permutation and diagonal kinds skip the dense dt x dt product.
    std::vector<int> perm;
    std::vector<cplx> diag;
    if (std::holds_alternative<GenNot>(gate.kind) || std::holds_alternative<Mct>(gate.kind) ||
        std::holds_alternative<ControlledIncrement>(gate.kind) ||
        std::holds_alternative<PermutationGate>(gate.kind)) {
        perm.resize(dt);
        for (int k = 0; k < dt; ++k)
            for (int j = 0; j < dt; ++j)
                if (u.at(j, k) != cplx{0.0, 0.0}) perm[k] = j;
    } else if (std::holds_alternative<GenPhase>(gate.kind) ||
               std::holds_alternative<DiagonalPhase>(gate.kind)) {
        diag.resize(dt);
        for (int j = 0; j < dt; ++j) diag[j] = u.at(j, j);
    }

    std::vector<cplx> scratch(dt);
    for (std::size_t base = 0; base < total; base += block) {
        for (std::size_t off = 0; off < stride_t; ++off) {
            const std::size_t idx0 = base + off;
            bool satisfied = true;
            for (const Control& c : gate.controls) {
                const int digit =
                    static_cast<int>((idx0 / strides[c.wire]) % static_cast<std::size_t>(dims[c.wire]));
                if (digit != c.value) {
                    satisfied = false;
                    break;
                }
            }
            if (!satisfied) continue;
            if (!perm.empty()) {
                for (int j = 0; j < dt; ++j) scratch[j] = state.amp(idx0 + static_cast<std::size_t>(j) * stride_t);
                for (int j = 0; j < dt; ++j)
                    state.amp(idx0 + static_cast<std::size_t>(perm[j]) * stride_t) = scratch[j];
                continue;
            }
            if (!diag.empty()) {
                for (int j = 0; j < dt; ++j)
                    state.amp(idx0 + static_cast<std::size_t>(j) * stride_t) *= diag[j];
                continue;
            }
            for (int j = 0; j < dt; ++j) scratch[j] = state.amp(idx0 + static_cast<std::size_t>(j) * stride_t);
            for (int j = 0; j < dt; ++j) {
                cplx acc{0.0, 0.0};
                for (int k = 0; k < dt; ++k) {
                    const cplx& ujk = u.at(j, k);
                    if (ujk != cplx{0.0, 0.0}) acc += ujk * scratch[k];
                }
                state.amp(idx0 + static_cast<std::size_t>(j) * stride_t) = acc;
            }
        }
    }
}

std::map<std::string, double> measure_probabilities(const StateVector& state,
                                                    const std::vector<int>& wires) {
    if (wires.empty()) throw std::invalid_argument("wire set must not be empty");
    const auto& dims = state.dims();
    std::vector<bool> seen(dims.size(), false);
    std::vector<int> sub_dims;
    sub_dims.reserve(wires.size());
    for (int w : wires) {
        if (w < 0 || w >= state.num_wires()) throw std::invalid_argument("wire out of range");
        if (seen[w]) throw std::invalid_argument("duplicate wire in measurement set");
        seen[w] = true;
        sub_dims.push_back(dims[w]);
    }

    const auto strides = strides_of(dims);
    std::map<std::string, double> probs;
    std::vector<int> sub_digits(wires.size());
    for (std::size_t idx = 0; idx < state.size(); ++idx) {
        const double p = std::norm(state.amp(idx));
        if (p == 0.0) continue;
        for (std::size_t i = 0; i < wires.size(); ++i)
            sub_digits[i] = static_cast<int>((idx / strides[wires[i]]) %
                                             static_cast<std::size_t>(dims[wires[i]]));
        probs[basis_string(sub_digits, sub_dims)] += p;
    }
    return probs;
}

} // namespace qcolor
