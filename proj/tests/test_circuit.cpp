#include <doctest.h>

#include <random>

#include "quditcolor/decompose.hpp"
#include "quditcolor/oracle.hpp"

using namespace qcolor;

namespace {

Circuit random_circuit(std::mt19937& rng, const std::vector<int>& dims, int gates) {
    Circuit circuit(dims);
    for (int g = 0; g < gates; ++g) {
        const int target = static_cast<int>(rng() % dims.size());
        const int dt = dims[target];
        PlacedGate gate;
        gate.target = target;
        switch (rng() % 5) {
        case 0: gate.kind = GenNot{1 + static_cast<int>(rng() % (dt - 1))}; break;
        case 1: gate.kind = GenHadamard{}; break;
        case 2: gate.kind = ControlledIncrement{rng() % 2 ? 1 : -1}; break;
        case 3: gate.kind = Mct{}; break;
        default: {
            std::vector<int> perm(dt);
            for (int i = 0; i < dt; ++i) perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            gate.kind = PermutationGate{std::move(perm)};
            break;
        }
        }
        for (std::size_t w = 0; w < dims.size(); ++w) {
            if (static_cast<int>(w) == target || rng() % 3 != 0) continue;
            gate.controls.push_back(Control{static_cast<int>(w), static_cast<int>(rng() % dims[w])});
        }
        circuit.append(std::move(gate));
    }
    return circuit;
}

} // namespace

TEST_CASE("append validates and preserves order") {
    Circuit circuit({2, 2, 2});
    CHECK(circuit.gates().empty());
    circuit.append(PlacedGate{GenNot{1}, 0, {}});
    CHECK(circuit.gates().size() == 1);
    circuit.append(PlacedGate{GenHadamard{}, 1, {}});
    REQUIRE(circuit.gates().size() == 2);
    CHECK(kind_name(circuit.gates()[0].kind) == "not");
    CHECK(kind_name(circuit.gates()[1].kind) == "hadamard");
    CHECK_THROWS_AS(circuit.append(PlacedGate{GenNot{1}, 9, {}}), std::invalid_argument);
    CHECK_THROWS_AS(circuit.append(PlacedGate{Mct{}, 0, {Control{1, 5}}}), std::invalid_argument);
}

TEST_CASE("inversion") {
    SUBCASE("GenNot inverts by negating the power") {
        Circuit circuit({3});
        circuit.append(PlacedGate{GenNot{1}, 0, {}});
        const Circuit inv = circuit.inverted();
        REQUIRE(inv.gates().size() == 1);
        const auto& kind = std::get<GenNot>(inv.gates()[0].kind);
        CHECK(((kind.power % 3) + 3) % 3 == 2);
    }
    SUBCASE("double inversion is the same unitary") {
        std::mt19937 rng(7);
        const Circuit circuit = random_circuit(rng, {2, 3, 2}, 12);
        const Matrix u = circuit_unitary(circuit);
        const Matrix v = circuit_unitary(circuit.inverted().inverted());
        CHECK(u.max_abs_diff(v) < 1e-10);
    }
    SUBCASE("circuit followed by its inverse is the identity") {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 10; ++trial) {
            const int wires = 1 + static_cast<int>(rng() % 3);
            std::vector<int> dims(wires);
            for (int& d : dims) d = 2 + static_cast<int>(rng() % 3);
            const Circuit circuit = random_circuit(rng, dims, 10);
            Circuit both(dims);
            both.append_all(circuit.gates());
            both.append_all(circuit.inverted().gates());
            CHECK(circuit_unitary(both).max_abs_diff(
                      Matrix::identity(circuit_unitary(both).dim())) < 1e-10);
        }
    }
    SUBCASE("comparator block plus inverse restores the ancillas on every basis input") {
        const Graph k3 = Graph::complete(3);
        const RegisterLayout layout = plan_layout(k3, 3, 2);
        Circuit circuit(layout.wire_dims());
        std::vector<PlacedGate> block;
        for (const PlacedGate& g :
             synth_comparator(layout, {0, 1}, {2, 3}, layout.ancilla_wire(0)))
            block.push_back(g);
        for (const PlacedGate& g :
             synth_comparator(layout, {0, 1}, {4, 5}, layout.ancilla_wire(1)))
            block.push_back(g);
        circuit.append_all(block);
        Circuit inv(layout.wire_dims());
        inv.append_all(block);
        inv.append_all(circuit.inverted().gates());
        for (std::size_t data = 0; data < 64; ++data) {
            std::vector<int> digits(layout.total_wires(), 0);
            const auto data_digits = mixed_radix_decode(data, std::vector<int>(6, 2));
            for (int w = 0; w < 6; ++w) digits[w] = data_digits[w];
            for (int a = 0; a < layout.r; ++a) digits[layout.ancilla_wire(a)] = 1;
            StateVector state = StateVector::basis_state(layout.wire_dims(), digits);
            inv.run(state);
            CHECK(std::abs(state.amp(mixed_radix_encode(digits, layout.wire_dims())) -
                           cplx{1.0, 0.0}) < 1e-10);
        }
    }
}

TEST_CASE("depth uses as-soon-as-possible layering") {
    Circuit circuit({2, 2, 2});
    CHECK(circuit.depth() == 0);
    circuit.append(PlacedGate{GenNot{1}, 0, {}});
    circuit.append(PlacedGate{GenNot{1}, 1, {}});
    CHECK(circuit.depth() == 1);
    circuit.append(PlacedGate{Mct{}, 2, {Control{1, 1}}});
    CHECK(circuit.depth() == 2);
}

TEST_CASE("gate counts partition the gate list") {
    std::mt19937 rng(13);
    const Circuit circuit = random_circuit(rng, {2, 3, 4}, 25);
    const GateCounts counts = circuit.gate_count();
    CHECK(counts.total == 25);
    std::size_t by_kind = 0;
    for (const auto& [kind, c] : counts.by_kind) by_kind += c;
    std::size_t by_arity = 0;
    for (const auto& [arity, c] : counts.by_arity) by_arity += c;
    CHECK(by_kind == counts.total);
    CHECK(by_arity == counts.total);
}

TEST_CASE("netlist round trip") {
    SUBCASE("single gate") {
        Circuit circuit({2, 2});
        circuit.append(PlacedGate{GenNot{1}, 0, {}});
        const std::string text = serialize_netlist(circuit);
        CHECK(parse_netlist(text) == circuit);
    }
    SUBCASE("random circuits, gate for gate") {
        std::mt19937 rng(17);
        for (int trial = 0; trial < 20; ++trial) {
            const int wires = 1 + static_cast<int>(rng() % 4);
            std::vector<int> dims(wires);
            for (int& d : dims) d = 2 + static_cast<int>(rng() % 4);
            const Circuit circuit = random_circuit(rng, dims, 15);
            const std::string text = serialize_netlist(circuit);
            CHECK(parse_netlist(text) == circuit);
            CHECK(serialize_netlist(parse_netlist(text)) == text);
        }
    }
    SUBCASE("diagonal phases round trip bit-exactly") {
        Circuit circuit({4});
        circuit.append(PlacedGate{
            DiagonalPhase{{cplx{1.0, 0.0}, cplx{0.0, 1.0}, cplx{-1.0, 0.0},
                           cplx{std::sqrt(0.5), -std::sqrt(0.5)}}},
            0,
            {}});
        CHECK(parse_netlist(serialize_netlist(circuit)) == circuit);
    }
    SUBCASE("oracle netlist round trips") {
        const OracleCircuit oracle = synth_oracle(Graph::complete(3), 3, 2);
        const std::string text = serialize_netlist(oracle.circuit());
        CHECK(parse_netlist(text) == oracle.circuit());
    }
    SUBCASE("inverted circuits round trip (negative shift powers)") {
        const Circuit inv = synth_oracle(Graph(3, {{0, 1}, {0, 2}}), 3, 3).circuit().inverted();
        CHECK(parse_netlist(serialize_netlist(inv)) == inv);
    }
    SUBCASE("lowered circuits round trip (computed rotation phases)") {
        const Circuit lowered = decompose_mct_binary(4);
        CHECK(parse_netlist(serialize_netlist(lowered)) == lowered);
    }
}

TEST_CASE("netlist parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_netlist(""), ParseError);
    CHECK_THROWS_AS(parse_netlist("not 0 1\n"), ParseError); // gates before dims
    CHECK_THROWS_AS(parse_netlist("dims 2 2\nbogus 0\n"), ParseError);
    CHECK_THROWS_AS(parse_netlist("dims 2 2\nmct ctrl 0:5 target 1\n"), ParseError);
    CHECK_THROWS_AS(parse_netlist("dims 2 2\nmct ctrl 0:1 target\n"), ParseError);

    try {
        parse_netlist("dims 2 2\nnot 0 1\nmct ctrl 0:5 target 1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("comments and roles survive the netlist") {
    const std::string text = "# header comment\ndims 2 3\nroles data out\nnot 0 1 # trailing\n";
    const Circuit circuit = parse_netlist(text);
    CHECK(circuit.dims() == std::vector<int>{2, 3});
    REQUIRE(circuit.has_roles());
    CHECK(circuit.roles()[0] == WireRole::Data);
    CHECK(circuit.roles()[1] == WireRole::Output);
    CHECK(circuit.gates().size() == 1);
}
