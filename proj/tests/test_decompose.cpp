#include <doctest.h>

#include "quditcolor/decompose.hpp"
#include "quditcolor/oracle.hpp"

using namespace qcolor;

TEST_CASE("verify_equivalence basics") {
    Circuit cnot({2, 2});
    cnot.append(PlacedGate{Mct{}, 1, {Control{0, 1}}});
    SUBCASE("a circuit equals itself with zero deviation") {
        const auto report = verify_equivalence(cnot, cnot);
        CHECK(report.equal);
        CHECK(report.max_deviation == doctest::Approx(0.0));
    }
    SUBCASE("cnot differs from a Toffoli restriction") {
        const auto report = verify_equivalence(cnot, mct_unitary(1, 2));
        CHECK(report.equal);
        Circuit other({2, 2});
        other.append(PlacedGate{GenNot{1}, 1, {}});
        CHECK_FALSE(verify_equivalence(other, mct_unitary(1, 2)).equal);
    }
    SUBCASE("size guard") {
        Circuit big(std::vector<int>(13, 2));
        CHECK_THROWS_AS(circuit_unitary(big), ResourceError);
    }
}

TEST_CASE("binary MCT decomposition") {
    SUBCASE("one control is a plain CNOT") {
        const Circuit c = decompose_mct_binary(1);
        REQUIRE(c.gates().size() == 1);
        CHECK(kind_name(c.gates()[0].kind) == "mct");
        CHECK(c.gates()[0].controls.size() == 1);
    }
    for (int controls = 1; controls <= 4; ++controls) {
        CAPTURE(controls);
        const Circuit c = decompose_mct_binary(controls);
        CHECK(c.num_wires() == controls + 1); // no ancilla wires
        for (const PlacedGate& g : c.gates()) CHECK(1 + g.controls.size() <= 2);
        const auto report = verify_equivalence(c, mct_unitary(controls, 2));
        CHECK(report.equal);
        CHECK(report.max_deviation < 1e-9);
    }
}

TEST_CASE("borrowed-level Toffoli") {
    for (int d : {2, 3}) {
        CAPTURE(d);
        const Circuit c = decompose_toffoli_qudit(d);
        CHECK(c.gates().size() == 3);
        CHECK(c.dims() == std::vector<int>(3, d + 1));
        const auto report =
            verify_equivalence(c, mct_unitary(2, d), std::vector<int>(3, d));
        CHECK(report.equal);
        CHECK(report.max_deviation < 1e-9);
        CHECK(report.max_leakage < 1e-10);
    }
    SUBCASE("controls at d-1 increment the target") {
        const Circuit c = decompose_toffoli_qudit(3);
        StateVector state = StateVector::basis_state(c.dims(), {2, 2, 1});
        c.run(state);
        CHECK(std::abs(state.amp(mixed_radix_encode({2, 2, 2}, c.dims())) - cplx{1.0, 0.0}) <
              1e-12);
    }
}

TEST_CASE("borrowed-level MCT ladder") {
    for (const auto& [controls, d] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
        CAPTURE(controls);
        CAPTURE(d);
        const Circuit c = decompose_mct_qudit(controls, d);
        CHECK(c.dims() == std::vector<int>(controls + 1, d + 2));
        for (const PlacedGate& g : c.gates()) CHECK(1 + g.controls.size() <= 2);
        CHECK(c.gates().size() <= 2 * static_cast<std::size_t>(controls));
        const auto report =
            verify_equivalence(c, mct_unitary(controls, d), std::vector<int>(controls + 1, d));
        CHECK(report.equal);
        CHECK(report.max_deviation < 1e-9);
        CHECK(report.max_leakage < 1e-10);
    }
}

TEST_CASE("larger ladders stay linear and correct on basis states") {
    const int controls = 7;
    const int d = 2;
    const Circuit c = decompose_mct_qudit(controls, d);
    CHECK(c.gates().size() == 2 * controls - 1);
    // dense compare at 4^8 is out of reach; walk the full logical subspace
    const Circuit reference = [&] {
        Circuit r(std::vector<int>(controls + 1, d));
        std::vector<Control> ctl;
        for (int i = 0; i < controls; ++i) ctl.push_back(Control{i, d - 1});
        r.append(PlacedGate{Mct{}, controls, ctl});
        return r;
    }();
    const std::vector<int> logical(controls + 1, d);
    double worst = 0.0;
    for (std::size_t idx = 0; idx < 256; ++idx) {
        const auto digits = mixed_radix_decode(idx, logical);
        StateVector wide = StateVector::basis_state(c.dims(), digits);
        c.run(wide);
        StateVector narrow = StateVector::basis_state(logical, digits);
        reference.run(narrow);
        // the wide state must be the embedded narrow state
        for (std::size_t w = 0; w < wide.size(); ++w) {
            const auto wd = mixed_radix_decode(w, c.dims());
            bool inside = true;
            for (int v : wd)
                if (v >= d) inside = false;
            const cplx expected = inside ? narrow.amp(mixed_radix_encode(wd, logical)) : cplx{};
            worst = std::max(worst, std::abs(wide.amp(w) - expected));
        }
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("whole-circuit lowering") {
    SUBCASE("binary oracle lowers to two-wire gates and stays equivalent") {
        const OracleCircuit small = synth_oracle(Graph::path(3), 2, 2); // 7 wires, dense-checkable
        const Circuit small_low = decompose_circuit(small.circuit(), DecomposeLevel::TwoWire);
        const auto report = verify_equivalence(small_low, small.circuit());
        CHECK(report.equal);
        CHECK(report.max_deviation < 1e-9);

        // The flagship binary instance is too large for a dense compare;
        // check the lowered oracle's phase contract on every data input.
        const OracleCircuit oracle = synth_oracle(Graph::complete(3), 3, 2);
        const Circuit lowered = decompose_circuit(oracle.circuit(), DecomposeLevel::TwoWire);
        for (const PlacedGate& g : lowered.gates()) CHECK(1 + g.controls.size() <= 2);
        const RegisterLayout& layout = oracle.layout();
        double worst = 0.0;
        for (std::size_t idx = 0; idx < 64; ++idx) {
            const auto data = mixed_radix_decode(idx, std::vector<int>(6, 2));
            std::vector<int> digits(layout.total_wires(), 0);
            for (int w = 0; w < 6; ++w) digits[w] = data[w];
            for (int a = 0; a < layout.r; ++a) digits[layout.ancilla_wire(a)] = 1;
            StateVector state = StateVector::basis_state(lowered.dims(), digits);
            apply_gate(state, PlacedGate{GenNot{1}, layout.output_wire(), {}});
            apply_gate(state, PlacedGate{GenHadamard{}, layout.output_wire(), {}});
            const StateVector before = state;
            lowered.run(state);
            const cplx expected = oracle.marked(data) ? cplx{-1.0, 0.0} : cplx{1.0, 0.0};
            for (std::size_t i = 0; i < state.size(); ++i)
                worst = std::max(worst, std::abs(state.amp(i) - expected * before.amp(i)));
        }
        CHECK(worst < 1e-9);
    }
    SUBCASE("already-low netlists are unchanged") {
        Circuit low({2, 2});
        low.append(PlacedGate{GenHadamard{}, 0, {}});
        low.append(PlacedGate{Mct{}, 1, {Control{0, 1}}});
        CHECK(decompose_circuit(low, DecomposeLevel::TwoWire) == low);
        CHECK(decompose_circuit(low, DecomposeLevel::Mct) == low);
    }
    SUBCASE("toffoli level keeps at most two controls") {
        Circuit circuit(std::vector<int>(5, 2));
        std::vector<Control> ctl;
        for (int i = 0; i < 4; ++i) ctl.push_back(Control{i, 1});
        circuit.append(PlacedGate{Mct{}, 4, ctl});
        const Circuit lowered = decompose_circuit(circuit, DecomposeLevel::Mct);
        CHECK(lowered.dims() == std::vector<int>(5, 3));
        for (const PlacedGate& g : lowered.gates()) CHECK(g.controls.size() <= 2);
        const auto report = verify_equivalence(lowered, circuit, circuit.dims());
        CHECK(report.equal);
        CHECK(report.max_leakage < 1e-10);
    }
    SUBCASE("ternary mixed-value controls lower correctly") {
        Circuit circuit(std::vector<int>(4, 3));
        circuit.append(
            PlacedGate{Mct{}, 3, {Control{0, 0}, Control{1, 2}, Control{2, 1}}});
        const Circuit lowered = decompose_circuit(circuit, DecomposeLevel::TwoWire);
        for (const PlacedGate& g : lowered.gates()) CHECK(1 + g.controls.size() <= 2);
        const auto report = verify_equivalence(lowered, circuit, circuit.dims());
        CHECK(report.equal);
        CHECK(report.max_leakage < 1e-10);
    }
    SUBCASE("multi-controlled diagonal phases lower on qubits") {
        Circuit circuit(std::vector<int>(4, 2));
        circuit.append(PlacedGate{DiagonalPhase{{cplx{1.0, 0.0}, cplx{0.0, 1.0}}}, 3,
                                  {Control{0, 1}, Control{1, 1}, Control{2, 1}}});
        const Circuit lowered = decompose_circuit(circuit, DecomposeLevel::TwoWire);
        for (const PlacedGate& g : lowered.gates()) CHECK(1 + g.controls.size() <= 2);
        const auto report = verify_equivalence(lowered, circuit);
        CHECK(report.equal);
    }
    SUBCASE("ternary oracle lowers to two-wire gates") {
        const Graph star(3, {{0, 1}, {0, 2}});
        const OracleCircuit oracle = synth_oracle(star, 3, 3);
        const Circuit lowered = decompose_circuit(oracle.circuit(), DecomposeLevel::TwoWire);
        CHECK(lowered.dims() == std::vector<int>(oracle.layout().total_wires(), 5));
        for (const PlacedGate& g : lowered.gates()) CHECK(1 + g.controls.size() <= 2);
        // 5^7 is beyond the dense guard; spot-check basis states instead
        const std::vector<int> logical = oracle.circuit().dims();
        double worst = 0.0;
        for (std::size_t idx : {std::size_t{0}, std::size_t{11}, std::size_t{2048}}) {
            auto digits = mixed_radix_decode(idx, std::vector<int>(7, 3));
            StateVector wide = StateVector::basis_state(lowered.dims(), digits);
            lowered.run(wide);
            StateVector narrow = StateVector::basis_state(logical, digits);
            oracle.circuit().run(narrow);
            for (std::size_t n = 0; n < narrow.size(); ++n) {
                const auto nd = mixed_radix_decode(n, logical);
                worst = std::max(worst, std::abs(wide.amp(mixed_radix_encode(nd, lowered.dims())) -
                                                 narrow.amp(n)));
            }
        }
        CHECK(worst < 1e-9);
    }
    SUBCASE("hadamard netlists cannot be widened") {
        Circuit circuit(std::vector<int>(3, 3));
        circuit.append(PlacedGate{GenHadamard{}, 0, {}});
        circuit.append(PlacedGate{Mct{}, 2, {Control{0, 2}, Control{1, 2}}});
        CHECK_THROWS_AS(decompose_circuit(circuit, DecomposeLevel::TwoWire), ValidationError);
    }
}
