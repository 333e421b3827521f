#include "quditcolor/grover.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include <json.hpp>

namespace qcolor {

namespace {

constexpr std::size_t kDiffusionGuard = 4096;
constexpr std::size_t kEnumerationGuard = std::size_t{1} << 20;
constexpr std::size_t kSimulationGuard = std::size_t{1} << 22;

/// base^exp with a ceiling; throws once the product passes the guard so the
/// multiplication can never wrap.
std::size_t pow_size_guarded(int base, int exp, std::size_t guard, const char* what) {
    std::size_t v = 1;
    for (int i = 0; i < exp; ++i) {
        v *= static_cast<std::size_t>(base);
        if (v > guard)
            throw ResourceError(std::string(what) + " exceeds the guard of " +
                                std::to_string(guard) + " states");
    }
    return v;
}

std::string format_probability(double p) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", p);
    return buf;
}

} // namespace

std::vector<PlacedGate> synth_initialization(const RegisterLayout& layout, KickbackMode mode) {
    std::vector<PlacedGate> gates;
    for (int w = 0; w < layout.m; ++w) gates.push_back(PlacedGate{GenHadamard{}, w, {}});
    for (int a = 0; a < layout.r; ++a)
        gates.push_back(PlacedGate{GenNot{layout.d - 1}, layout.ancilla_wire(a), {}});
    gates.push_back(PlacedGate{GenNot{layout.d - 1}, layout.output_wire(), {}});
    if (mode == KickbackMode::PaperExact)
        gates.push_back(PlacedGate{GenHadamard{}, layout.output_wire(), {}});
    return gates;
}

Matrix diffusion_matrix(int d, int m) {
    if (d < 2 || m < 1) throw std::invalid_argument("diffusion needs d >= 2 and m >= 1");
    const std::size_t size = pow_size_guarded(d, m, kDiffusionGuard, "diffusion matrix");
    Matrix mat(static_cast<int>(size));
    const double off = 2.0 / static_cast<double>(size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            mat.at(static_cast<int>(i), static_cast<int>(j)) = (i == j) ? off - 1.0 : off;
    return mat;
}

std::vector<PlacedGate> synth_diffusion_circuit(int d, int m) {
    if (d < 2 || m < 1) throw std::invalid_argument("diffusion needs d >= 2 and m >= 1");
    std::vector<PlacedGate> gates;
    std::vector<int> negate(d);
    for (int j = 0; j < d; ++j) negate[j] = (d - j) % d;

    for (int w = 0; w < m; ++w) gates.push_back(PlacedGate{GenHadamard{}, w, {}});
    for (int w = 0; w < m; ++w) gates.push_back(PlacedGate{GenNot{d - 1}, w, {}});
    // -1 on the all-(d-1) pattern == reflection about |0...0> after the
    // shift layer; the leftover global -1 against the printed matrix is
    // accepted everywhere diffusion is compared.
    std::vector<cplx> phases(d, cplx{1.0, 0.0});
    phases[d - 1] = cplx{-1.0, 0.0};
    std::vector<Control> controls;
    for (int w = 0; w + 1 < m; ++w) controls.push_back(Control{w, d - 1});
    gates.push_back(PlacedGate{DiagonalPhase{std::move(phases)}, m - 1, std::move(controls)});
    for (int w = 0; w < m; ++w) gates.push_back(PlacedGate{GenNot{1 - d}, w, {}});
    for (int w = 0; w < m; ++w) {
        gates.push_back(PlacedGate{GenHadamard{}, w, {}});
        gates.push_back(PlacedGate{PermutationGate{negate}, w, {}});
    }
    return gates;
}

int optimal_iterations(std::size_t search_space, std::size_t solutions) {
    if (solutions == 0) throw ValidationError("instance has no solutions");
    if (solutions > search_space) throw std::invalid_argument("solution count exceeds search space");
    const double theta =
        std::asin(std::sqrt(static_cast<double>(solutions) / static_cast<double>(search_space)));
    const double raw = std::numbers::pi / (4.0 * theta) - 0.5;
    return std::max(0, static_cast<int>(std::floor(raw + 0.5)));
}

std::size_t count_solutions(const Graph& graph, int k, int d) {
    const RegisterLayout layout = plan_layout(graph, k, d);
    const std::size_t total =
        pow_size_guarded(d, layout.m, kEnumerationGuard, "solution enumeration space");
    const std::vector<int> data_dims(layout.m, d);
    std::size_t count = 0;
    std::vector<int> colors(layout.n);
    for (std::size_t idx = 0; idx < total; ++idx) {
        const auto digits = mixed_radix_decode(idx, data_dims);
        for (int vertex = 0; vertex < layout.n; ++vertex) {
            int value = 0;
            for (int t = 0; t < layout.c; ++t) value = value * d + digits[vertex * layout.c + t];
            colors[vertex] = value;
        }
        if (classical_coloring_check(colors, graph, k)) ++count;
    }
    return count;
}

GroverRun run_grover(const Graph& graph, int k, int d, std::optional<int> iterations,
                     KickbackMode mode) {
    OracleCircuit oracle = synth_oracle(graph, k, d, mode);
    const RegisterLayout& layout = oracle.layout();

    std::size_t state_size = 1;
    for (int w = 0; w < layout.total_wires(); ++w) {
        state_size *= static_cast<std::size_t>(d);
        if (state_size > kSimulationGuard)
            throw ResourceError("state vector of " + std::to_string(layout.total_wires()) +
                                " wires at dimension " + std::to_string(d) +
                                " exceeds the simulation guard");
    }

    const std::size_t search_space =
        pow_size_guarded(d, layout.m, kSimulationGuard, "search space");
    const std::size_t solutions = count_solutions(graph, k, d);
    int rounds = 0;
    if (iterations) {
        if (*iterations < 0) throw ValidationError("iteration count must be >= 0");
        rounds = *iterations;
    } else {
        rounds = solutions == 0 ? 0 : optimal_iterations(search_space, solutions);
    }

    StateVector state = StateVector::zero_state(layout.wire_dims());
    for (const PlacedGate& g : synth_initialization(layout, mode)) apply_gate(state, g);
    const auto diffusion = layout.m > 0 ? synth_diffusion_circuit(d, layout.m)
                                        : std::vector<PlacedGate>{};
    for (int round = 0; round < rounds; ++round) {
        oracle.circuit().run(state);
        for (const PlacedGate& g : diffusion) apply_gate(state, g);
    }

    GroverRun run{std::move(oracle), rounds, mode, std::move(state), {}, {}, 0.0};

    if (layout.m == 0) {
        run.histogram.emplace_back("", 1.0);
        run.marked = run.oracle.marked_states();
        run.success_probability = run.marked.empty() ? 0.0 : 1.0;
        return run;
    }

    const std::vector<int> data_dims(layout.m, d);
    const auto probs = measure_probabilities(run.final_state, layout.data_wires());
    run.histogram.reserve(search_space);
    for (std::size_t idx = 0; idx < search_space; ++idx) {
        const std::string key = basis_string(mixed_radix_decode(idx, data_dims), data_dims);
        const auto it = probs.find(key);
        run.histogram.emplace_back(key, it == probs.end() ? 0.0 : it->second);
    }
    run.marked = run.oracle.marked_states();
    double success = 0.0;
    std::size_t mi = 0;
    for (const auto& [key, p] : run.histogram) {
        if (mi < run.marked.size() && run.marked[mi] == key) {
            success += p;
            ++mi;
        }
    }
    run.success_probability = success;
    return run;
}

void write_histogram_csv(std::ostream& out, const GroverRun& run) {
    out << "basis_string,probability\n";
    for (const auto& [key, p] : run.histogram) out << key << "," << format_probability(p) << "\n";
}

void write_histogram_json(std::ostream& out, const GroverRun& run) {
    nlohmann::json doc;
    doc["dims"] = std::vector<int>(static_cast<std::size_t>(run.oracle.layout().m),
                                   run.oracle.layout().d);
    doc["iterations"] = run.iterations;
    doc["kickback"] = kickback_mode_name(run.mode);
    doc["success_probability"] = run.success_probability;
    doc["marked"] = run.marked;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [key, p] : run.histogram) rows.push_back({{"state", key}, {"p", p}});
    doc["probabilities"] = std::move(rows);
    out << doc.dump(2) << "\n";
}

} // namespace qcolor
