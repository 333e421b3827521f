#pragma once

#include <iosfwd>
#include <optional>

#include "quditcolor/oracle.hpp"

namespace qcolor {

/// State preparation for the oracle layout: data wires to the uniform
/// superposition, scratch ancillas to |d-1>, flag stays |0>, output to
/// |d-1> followed by a Hadamard in paper-exact mode (the pi-phase kick is a
/// plain controlled phase, so its output wire stays in the basis).
std::vector<PlacedGate> synth_initialization(const RegisterLayout& layout,
                                             KickbackMode mode = KickbackMode::PaperExact);

/// Dense reflection about the uniform state on m wires of dimension d:
/// entries 2/d^m with 2/d^m - 1 on the diagonal. Guarded at d^m <= 4096.
Matrix diffusion_matrix(int d, int m);

/// Circuit realization on wires 0..m-1; equals diffusion_matrix up to a
/// global phase.
std::vector<PlacedGate> synth_diffusion_circuit(int d, int m);

/// max(round(pi / (4 asin(sqrt(M/N))) - 1/2), 0). M = 0 is an error.
int optimal_iterations(std::size_t search_space, std::size_t solutions);

/// Exact number of marked assignments by enumeration (guard d^m <= 2^20).
std::size_t count_solutions(const Graph& graph, int k, int d);

struct GroverRun {
    OracleCircuit oracle;
    int iterations = 0;
    KickbackMode mode = KickbackMode::PaperExact;
    StateVector final_state;
    /// (basis string over the data wires, probability), ascending index.
    std::vector<std::pair<std::string, double>> histogram;
    std::vector<std::string> marked;
    double success_probability = 0.0;
};

/// Initialization, then `iterations` rounds of oracle + diffusion over the
/// data wires. Iterations defaults to the optimum for the instance (0 when
/// there are no solutions).
GroverRun run_grover(const Graph& graph, int k, int d,
                     std::optional<int> iterations = std::nullopt,
                     KickbackMode mode = KickbackMode::PaperExact);

void write_histogram_csv(std::ostream& out, const GroverRun& run);
void write_histogram_json(std::ostream& out, const GroverRun& run);

} // namespace qcolor
