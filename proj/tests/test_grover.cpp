#include <doctest.h>

#include <cmath>
#include <sstream>

#include "quditcolor/decompose.hpp"
#include "quditcolor/grover.hpp"

using namespace qcolor;

namespace {

double grover_law(int iterations, std::size_t search_space, std::size_t solutions) {
    const double theta =
        std::asin(std::sqrt(static_cast<double>(solutions) / static_cast<double>(search_space)));
    const double s = std::sin((2.0 * iterations + 1.0) * theta);
    return s * s;
}

} // namespace

TEST_CASE("initialization prepares the advertised product state") {
    SUBCASE("binary K3 layout") {
        const RegisterLayout layout = plan_layout(Graph::complete(3), 3, 2);
        StateVector state = StateVector::zero_state(layout.wire_dims());
        for (const PlacedGate& g : synth_initialization(layout)) apply_gate(state, g);
        const auto data = measure_probabilities(state, layout.data_wires());
        CHECK(data.size() == 64);
        for (const auto& [key, p] : data) CHECK(p == doctest::Approx(1.0 / 64).epsilon(1e-9));
        for (int a = 0; a < layout.r; ++a) {
            const auto anc = measure_probabilities(state, {layout.ancilla_wire(a)});
            CHECK(anc.at("1") == doctest::Approx(1.0));
        }
        const auto flag = measure_probabilities(state, {layout.invalid_flag_wire()});
        CHECK(flag.at("0") == doctest::Approx(1.0));
    }
    SUBCASE("ternary star layout") {
        const Graph star(3, {{0, 1}, {0, 2}});
        const RegisterLayout layout = plan_layout(star, 3, 3);
        StateVector state = StateVector::zero_state(layout.wire_dims());
        for (const PlacedGate& g : synth_initialization(layout)) apply_gate(state, g);
        const auto data = measure_probabilities(state, layout.data_wires());
        CHECK(data.size() == 27);
        for (const auto& [key, p] : data) CHECK(p == doctest::Approx(1.0 / 27).epsilon(1e-9));
    }
}

TEST_CASE("diffusion matrix entries and involution") {
    SUBCASE("d=2, m=1 is the bit flip") {
        const Matrix d = diffusion_matrix(2, 1);
        CHECK(std::abs(d.at(0, 0)) < 1e-15);
        CHECK(std::abs(d.at(0, 1) - cplx{1.0, 0.0}) < 1e-15);
        CHECK(std::abs(d.at(1, 0) - cplx{1.0, 0.0}) < 1e-15);
        CHECK(std::abs(d.at(1, 1)) < 1e-15);
    }
    SUBCASE("d=3, m=1") {
        const Matrix d = diffusion_matrix(3, 1);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(std::abs(d.at(i, j) - cplx{i == j ? 2.0 / 3 - 1.0 : 2.0 / 3, 0.0}) < 1e-15);
    }
    SUBCASE("involution") {
        for (int d : {2, 3}) {
            for (int m = 1; m <= 3; ++m) {
                const Matrix diff = diffusion_matrix(d, m);
                CHECK((diff * diff).max_abs_diff(Matrix::identity(diff.dim())) < 1e-12);
            }
        }
    }
    SUBCASE("size guard") { CHECK_THROWS_AS(diffusion_matrix(2, 13), ResourceError); }
}

TEST_CASE("diffusion circuit equals the dense operator up to global phase") {
    for (int d : {2, 3}) {
        for (int m = 1; m <= 3; ++m) {
            Circuit circuit(std::vector<int>(m, d));
            circuit.append_all(synth_diffusion_circuit(d, m));
            const auto report = verify_equivalence(circuit, diffusion_matrix(d, m));
            CHECK(report.equal);
            CHECK(report.max_deviation < 1e-9);
        }
    }
}

TEST_CASE("diffusion fixes the uniform state up to global phase") {
    StateVector state = StateVector::zero_state({3, 3});
    for (int w = 0; w < 2; ++w) apply_gate(state, PlacedGate{GenHadamard{}, w, {}});
    const StateVector before = state;
    for (const PlacedGate& g : synth_diffusion_circuit(3, 2)) apply_gate(state, g);
    const cplx phase = state.amp(0) / before.amp(0);
    CHECK(std::abs(std::abs(phase) - 1.0) < 1e-10);
    for (std::size_t i = 0; i < state.size(); ++i)
        CHECK(std::abs(state.amp(i) - phase * before.amp(i)) < 1e-10);
}

TEST_CASE("optimal iteration count") {
    CHECK(optimal_iterations(64, 6) == 2);
    CHECK(optimal_iterations(27, 12) == 1);
    CHECK(optimal_iterations(27, 27) == 0);
    CHECK_THROWS_AS(optimal_iterations(64, 0), ValidationError);
    CHECK_THROWS_AS(optimal_iterations(4, 5), std::invalid_argument);
}

TEST_CASE("solution counting") {
    CHECK(count_solutions(Graph::complete(3), 3, 2) == 6);
    CHECK(count_solutions(Graph(3, {{0, 1}, {0, 2}}), 3, 3) == 12);
    CHECK(count_solutions(Graph::complete(3), 2, 2) == 0);
}

TEST_CASE("Grover run on the binary K3 instance") {
    const GroverRun run = run_grover(Graph::complete(3), 3, 2);
    CHECK(run.iterations == 2);
    CHECK(run.marked.size() == 6);
    CHECK(run.success_probability >= 0.95);
    CHECK(std::abs(run.final_state.norm() - 1.0) < 1e-10);
    CHECK(run.success_probability ==
          doctest::Approx(grover_law(2, 64, 6)).epsilon(1e-6));
    double total = 0.0;
    for (const auto& [key, p] : run.histogram) total += p;
    CHECK(std::abs(total - 1.0) < 1e-10);
}

TEST_CASE("zero iterations leaves the uniform distribution") {
    const GroverRun run = run_grover(Graph::complete(3), 3, 2, 0);
    for (const auto& [key, p] : run.histogram) CHECK(p == doctest::Approx(1.0 / 64).epsilon(1e-9));
}

TEST_CASE("no-solution instances run with zero iterations") {
    const GroverRun run = run_grover(Graph::complete(3), 2, 2);
    CHECK(run.iterations == 0);
    CHECK(run.marked.empty());
    CHECK(run.success_probability == doctest::Approx(0.0));
}

TEST_CASE("one color on an edgeless graph degenerates to a single assignment") {
    const GroverRun run = run_grover(Graph(2, {}), 1, 2);
    CHECK(run.oracle.layout().m == 0);
    REQUIRE(run.histogram.size() == 1);
    CHECK(run.histogram[0].second == doctest::Approx(1.0));
    CHECK(run.success_probability == doctest::Approx(1.0));
}

TEST_CASE("ternary star, one exact iteration") {
    const Graph star(3, {{0, 1}, {0, 2}});
    SUBCASE("paper-exact kick ranks every marked state first") {
        const GroverRun run = run_grover(star, 3, 3, 1, KickbackMode::PaperExact);
        double min_marked = 1.0;
        double max_unmarked = 0.0;
        std::size_t mi = 0;
        for (const auto& [key, p] : run.histogram) {
            const bool is_marked = mi < run.marked.size() && run.marked[mi] == key;
            if (is_marked) {
                ++mi;
                min_marked = std::min(min_marked, p);
            } else {
                max_unmarked = std::max(max_unmarked, p);
            }
        }
        CHECK(min_marked > max_unmarked);
        // closed-form amplitudes: |30 - 3w|^2 / 27^3 and |24w + 3|^2 / 27^3
        CHECK(min_marked == doctest::Approx(999.0 / 19683.0).epsilon(1e-9));
        CHECK(max_unmarked == doctest::Approx(513.0 / 19683.0).epsilon(1e-9));
    }
    SUBCASE("pi-phase kick follows the sine law") {
        const GroverRun run = run_grover(star, 3, 3, 1, KickbackMode::PiPhase);
        CHECK(run.success_probability ==
              doctest::Approx(grover_law(1, 27, 12)).epsilon(1e-6));
        CHECK(run.success_probability == doctest::Approx(484.0 / 729.0).epsilon(1e-9));
    }
}

TEST_CASE("binary instances follow the sine law for several iteration counts") {
    struct Case {
        Graph graph;
        int k;
    };
    const std::vector<Case> cases{{Graph::complete(3), 3}, {Graph(3, {{0, 1}, {0, 2}}), 3},
                                  {Graph(2, {{0, 1}}), 2}};
    for (const Case& c : cases) {
        const std::size_t solutions = count_solutions(c.graph, c.k, 2);
        const RegisterLayout layout = plan_layout(c.graph, c.k, 2);
        std::size_t space = 1;
        for (int i = 0; i < layout.m; ++i) space *= 2;
        for (int iterations : {0, 1, 2}) {
            for (KickbackMode mode : {KickbackMode::PaperExact, KickbackMode::PiPhase}) {
                const GroverRun run = run_grover(c.graph, c.k, 2, iterations, mode);
                CHECK(run.success_probability ==
                      doctest::Approx(grover_law(iterations, space, solutions)).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("pi-phase mode follows the sine law at d=3") {
    const Graph pair(2, {{0, 1}});
    const std::size_t solutions = count_solutions(pair, 3, 3); // 6 of 9
    for (int iterations : {0, 1, 2}) {
        const GroverRun run = run_grover(pair, 3, 3, iterations, KickbackMode::PiPhase);
        CHECK(run.success_probability ==
              doctest::Approx(grover_law(iterations, 9, solutions)).epsilon(1e-6));
    }
}

TEST_CASE("histogram exports") {
    const GroverRun run = run_grover(Graph::complete(3), 3, 2);
    SUBCASE("CSV has a header and one ascending row per basis state") {
        std::ostringstream csv;
        write_histogram_csv(csv, run);
        std::istringstream lines(csv.str());
        std::string line;
        std::getline(lines, line);
        CHECK(line == "basis_string,probability");
        std::string prev;
        int rows = 0;
        while (std::getline(lines, line)) {
            const std::string key = line.substr(0, line.find(','));
            if (rows > 0) CHECK(prev < key);
            prev = key;
            ++rows;
        }
        CHECK(rows == 64);
    }
    SUBCASE("JSON carries the distribution and metadata") {
        std::ostringstream json;
        write_histogram_json(json, run);
        CHECK(json.str().find("\"success_probability\"") != std::string::npos);
        CHECK(json.str().find("\"011000\"") != std::string::npos);
    }
}
