#include <cstdio>
#include <sstream>

#include "quditcolor/circuit.hpp"

namespace qcolor {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_complex(const cplx& z) {
    return format_double(z.real()) + "," + format_double(z.imag());
}

void write_controls(std::ostringstream& out, const std::vector<Control>& controls) {
    for (const Control& c : controls) out << " ctrl " << c.wire << ":" << c.value;
}

struct LineTokens {
    std::vector<std::string> tokens;
    std::size_t pos = 0;
    int line_no = 0;

    bool done() const { return pos >= tokens.size(); }
    const std::string& peek() const { return tokens[pos]; }
    std::string next(const char* what) {
        if (done()) throw ParseError(std::string("expected ") + what, line_no);
        return tokens[pos++];
    }
    int next_int(const char* what) {
        const std::string tok = next(what);
        try {
            std::size_t used = 0;
            const int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw ParseError(std::string("bad integer '") + tok + "' for " + what, line_no);
        }
    }
    double next_double(const char* what) {
        const std::string tok = next(what);
        try {
            std::size_t used = 0;
            const double v = std::stod(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw ParseError(std::string("bad number '") + tok + "' for " + what, line_no);
        }
    }
};

std::vector<Control> parse_controls(LineTokens& lt) {
    std::vector<Control> controls;
    while (!lt.done()) {
        if (lt.peek() != "ctrl") throw ParseError("unexpected token '" + lt.peek() + "'", lt.line_no);
        lt.next("ctrl");
        const std::string pair = lt.next("ctrl wire:value");
        const std::size_t colon = pair.find(':');
        if (colon == std::string::npos)
            throw ParseError("control must be wire:value, got '" + pair + "'", lt.line_no);
        try {
            controls.push_back(Control{std::stoi(pair.substr(0, colon)), std::stoi(pair.substr(colon + 1))});
        } catch (const std::exception&) {
            throw ParseError("bad control '" + pair + "'", lt.line_no);
        }
    }
    return controls;
}

cplx parse_complex(const std::string& tok, int line_no) {
    const std::size_t comma = tok.find(',');
    if (comma == std::string::npos)
        throw ParseError("complex entry must be re,im, got '" + tok + "'", line_no);
    try {
        return {std::stod(tok.substr(0, comma)), std::stod(tok.substr(comma + 1))};
    } catch (const std::exception&) {
        throw ParseError("bad complex entry '" + tok + "'", line_no);
    }
}

} // namespace

std::string serialize_netlist(const Circuit& circuit) {
    std::ostringstream out;
    out << "dims";
    for (int d : circuit.dims()) out << " " << d;
    out << "\n";
    if (circuit.has_roles()) {
        out << "roles";
        for (WireRole r : circuit.roles()) out << " " << wire_role_name(r);
        out << "\n";
    }
    for (const PlacedGate& g : circuit.gates()) {
        if (const auto* n = std::get_if<GenNot>(&g.kind)) {
            out << "not " << g.target << " " << n->power;
            write_controls(out, g.controls);
        } else if (std::holds_alternative<GenPhase>(g.kind)) {
            out << "phase " << g.target;
            write_controls(out, g.controls);
        } else if (std::holds_alternative<GenHadamard>(g.kind)) {
            out << "hadamard " << g.target;
            write_controls(out, g.controls);
        } else if (const auto* inc = std::get_if<ControlledIncrement>(&g.kind)) {
            out << "inc " << g.target << " " << (inc->increment > 0 ? "+1" : "-1");
            write_controls(out, g.controls);
        } else if (std::holds_alternative<Mct>(g.kind)) {
            out << "mct";
            write_controls(out, g.controls);
            out << " target " << g.target;
        } else if (const auto* perm = std::get_if<PermutationGate>(&g.kind)) {
            out << "perm " << g.target;
            for (int v : perm->perm) out << " " << v;
            write_controls(out, g.controls);
        } else if (const auto* diag = std::get_if<DiagonalPhase>(&g.kind)) {
            out << "diag " << g.target;
            for (const cplx& z : diag->phases) out << " " << format_complex(z);
            write_controls(out, g.controls);
        }
        out << "\n";
    }
    return out.str();
}

Circuit parse_netlist(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::optional<Circuit> circuit;
    std::optional<std::vector<int>> dims;
    std::vector<WireRole> roles;
    bool saw_gate = false;

    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        LineTokens lt{{}, 0, line_no};
        {
            std::istringstream ls(line);
            std::string tok;
            while (ls >> tok) lt.tokens.push_back(tok);
        }
        if (lt.tokens.empty()) continue;

        const std::string head = lt.next("directive");
        if (head == "dims") {
            if (dims) throw ParseError("duplicate dims line", line_no);
            std::vector<int> d;
            while (!lt.done()) d.push_back(lt.next_int("dimension"));
            if (d.empty()) throw ParseError("dims line needs at least one wire", line_no);
            dims = std::move(d);
            continue;
        }
        if (!dims) throw ParseError("first directive must be dims", line_no);
        if (head == "roles") {
            if (saw_gate || circuit) throw ParseError("roles must precede gates", line_no);
            while (!lt.done()) {
                try {
                    roles.push_back(wire_role_from_name(lt.next("role")));
                } catch (const std::invalid_argument& e) {
                    throw ParseError(e.what(), line_no);
                }
            }
            if (roles.size() != dims->size())
                throw ParseError("role count does not match wire count", line_no);
            continue;
        }

        if (!circuit) circuit.emplace(*dims, roles);
        saw_gate = true;
        PlacedGate gate;
        try {
            if (head == "not") {
                gate.target = lt.next_int("target wire");
                gate.kind = GenNot{lt.next_int("power")};
                gate.controls = parse_controls(lt);
            } else if (head == "phase") {
                gate.target = lt.next_int("target wire");
                gate.kind = GenPhase{};
                gate.controls = parse_controls(lt);
            } else if (head == "hadamard") {
                gate.target = lt.next_int("target wire");
                gate.kind = GenHadamard{};
                gate.controls = parse_controls(lt);
            } else if (head == "inc") {
                gate.target = lt.next_int("target wire");
                const std::string sign = lt.next("increment");
                if (sign == "+1")
                    gate.kind = ControlledIncrement{1};
                else if (sign == "-1")
                    gate.kind = ControlledIncrement{-1};
                else
                    throw ParseError("increment must be +1 or -1, got '" + sign + "'", line_no);
                gate.controls = parse_controls(lt);
            } else if (head == "mct") {
                std::vector<Control> controls;
                while (!lt.done() && lt.peek() == "ctrl") {
                    lt.next("ctrl");
                    const std::string pair = lt.next("ctrl wire:value");
                    const std::size_t colon = pair.find(':');
                    if (colon == std::string::npos)
                        throw ParseError("control must be wire:value, got '" + pair + "'", line_no);
                    controls.push_back(
                        Control{std::stoi(pair.substr(0, colon)), std::stoi(pair.substr(colon + 1))});
                }
                if (lt.next("target keyword") != "target")
                    throw ParseError("mct line needs 'target <wire>'", line_no);
                gate.target = lt.next_int("target wire");
                if (!lt.done()) throw ParseError("unexpected token '" + lt.peek() + "'", line_no);
                gate.kind = Mct{};
                gate.controls = std::move(controls);
            } else if (head == "perm") {
                gate.target = lt.next_int("target wire");
                if (gate.target < 0 || gate.target >= static_cast<int>(dims->size()))
                    throw ParseError("target wire out of range", line_no);
                std::vector<int> perm;
                for (int i = 0; i < (*dims)[gate.target]; ++i) perm.push_back(lt.next_int("perm image"));
                gate.kind = PermutationGate{std::move(perm)};
                gate.controls = parse_controls(lt);
            } else if (head == "diag") {
                gate.target = lt.next_int("target wire");
                if (gate.target < 0 || gate.target >= static_cast<int>(dims->size()))
                    throw ParseError("target wire out of range", line_no);
                std::vector<cplx> phases;
                for (int i = 0; i < (*dims)[gate.target]; ++i)
                    phases.push_back(parse_complex(lt.next("phase entry"), line_no));
                gate.kind = DiagonalPhase{std::move(phases)};
                gate.controls = parse_controls(lt);
            } else {
                throw ParseError("unknown gate kind '" + head + "'", line_no);
            }
            circuit->append(std::move(gate));
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    if (!dims) throw ParseError("netlist has no dims line", 0);
    if (!circuit) circuit.emplace(*dims, roles);
    return *circuit;
}

} // namespace qcolor
