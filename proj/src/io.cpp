#include "qusp/io.hpp"

#include <cctype>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qusp/lowering.hpp"

namespace qusp {
namespace {

std::string fmt_angle(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

} // namespace

nlohmann::ordered_json circuit_to_json(const Circuit& circuit) {
    nlohmann::ordered_json doc;
    doc["n"] = circuit.n;
    doc["label"] = circuit.label;
    doc["gates"] = nlohmann::ordered_json::array();
    for (const Gate& gate : circuit.gates) {
        nlohmann::ordered_json g;
        g["kind"] = kind_name(gate.kind);
        g["target"] = gate.target;
        if (gate.control) {
            g["control"] = *gate.control;
        } else {
            g["control"] = nullptr;
        }
        if (gate.theta) {
            g["theta"] = *gate.theta;
        } else {
            g["theta"] = nullptr;
        }
        doc["gates"].push_back(std::move(g));
    }
    return doc;
}

Circuit circuit_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("gates")) {
        throw std::invalid_argument("circuit json: expected object with n and gates");
    }
    Circuit circuit(j.at("n").get<int>(), j.value("label", std::string{}));
    for (const nlohmann::json& g : j.at("gates")) {
        const std::string name = g.at("kind").get<std::string>();
        const std::optional<GateKind> kind = kind_from_name(name);
        if (!kind) {
            throw std::invalid_argument("circuit json: unknown gate kind '" + name + "'");
        }
        Gate gate;
        gate.kind = *kind;
        gate.target = g.at("target").get<int>();
        if (g.contains("control") && !g.at("control").is_null()) {
            gate.control = g.at("control").get<int>();
        }
        if (g.contains("theta") && !g.at("theta").is_null()) {
            gate.theta = g.at("theta").get<double>();
        }
        circuit.push(gate);
    }
    return circuit;
}

namespace {

void emit_qasm_gate(std::ostream& os, const Gate& gate) {
    switch (gate.kind) {
    case GateKind::PauliX:
        os << "x q[" << gate.target << "];\n";
        break;
    case GateKind::Hadamard:
        os << "h q[" << gate.target << "];\n";
        break;
    case GateKind::PauliZ:
        os << "z q[" << gate.target << "];\n";
        break;
    case GateKind::RotY:
        os << "ry(" << fmt_angle(*gate.theta) << ") q[" << gate.target << "];\n";
        break;
    case GateKind::ControlledNot:
        os << "cx q[" << *gate.control << "],q[" << gate.target << "];\n";
        break;
    default:
        throw std::invalid_argument("qasm: gate kind has no direct encoding");
    }
}

} // namespace

std::string emit_qasm(const Circuit& circuit, bool raw_comments) {
    std::ostringstream os;
    os << "OPENQASM 2.0;\n";
    os << "include \"qelib1.inc\";\n";
    os << "qreg q[" << circuit.n << "];\n";
    for (const Gate& gate : circuit.gates) {
        if (gate.kind == GateKind::OpenControlledNot) {
            // not produced by the lowering pass, but keep the emitter total
            if (raw_comments) {
                os << "// ocx q[" << *gate.control << "] -> q[" << gate.target << "]\n";
            }
            emit_qasm_gate(os, Gate::x(*gate.control));
            emit_qasm_gate(os, Gate::cx(*gate.control, gate.target));
            emit_qasm_gate(os, Gate::x(*gate.control));
            continue;
        }
        if (is_controlled(gate.kind) && gate.kind != GateKind::ControlledNot) {
            if (raw_comments) {
                os << "// " << kind_name(gate.kind);
                if (gate.theta) {
                    os << '(' << fmt_angle(*gate.theta) << ')';
                }
                os << " q[" << *gate.control << "] -> q[" << gate.target << "]\n";
            }
            for (const Gate& out : lower_gate(gate)) {
                emit_qasm_gate(os, out);
            }
            continue;
        }
        emit_qasm_gate(os, gate);
    }
    return os.str();
}

namespace {

struct QasmCursor {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;

    [[noreturn]] void fail(const std::string& message) const {
        throw std::invalid_argument("qasm parse error at line " + std::to_string(line) + ": " +
                                    message);
    }

    void skip_space_and_comments() {
        while (pos < text.size()) {
            const char c = text[pos];
            if (c == '\n') {
                ++line;
                ++pos;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos;
            } else if (c == '/' && pos + 1 < text.size() && text[pos + 1] == '/') {
                while (pos < text.size() && text[pos] != '\n') {
                    ++pos;
                }
            } else {
                break;
            }
        }
    }

    bool done() {
        skip_space_and_comments();
        return pos >= text.size();
    }

    // Next run of [A-Za-z0-9_.], or empty at a punctuation character.
    std::string_view word() {
        skip_space_and_comments();
        const std::size_t start = pos;
        while (pos < text.size()) {
            const char c = text[pos];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
                ++pos;
            } else {
                break;
            }
        }
        return text.substr(start, pos - start);
    }

    void expect(char c) {
        skip_space_and_comments();
        if (pos >= text.size() || text[pos] != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos;
    }

    bool peek_is(char c) {
        skip_space_and_comments();
        return pos < text.size() && text[pos] == c;
    }

    int index() {
        expect('q');
        expect('[');
        const std::string_view digits = word();
        if (digits.empty()) {
            fail("expected qubit index");
        }
        expect(']');
        return std::stoi(std::string(digits));
    }

    double angle() {
        skip_space_and_comments();
        const std::size_t start = pos;
        while (pos < text.size() && text[pos] != ')') {
            ++pos;
        }
        if (pos >= text.size()) {
            fail("unterminated angle");
        }
        std::size_t used = 0;
        const std::string raw(text.substr(start, pos - start));
        const double value = std::stod(raw, &used);
        if (used != raw.size()) {
            fail("malformed angle '" + raw + "'");
        }
        return value;
    }
};

} // namespace

Circuit parse_qasm(std::string_view text) {
    QasmCursor cur{text};

    if (cur.word() != "OPENQASM") {
        cur.fail("expected OPENQASM header");
    }
    if (cur.word() != "2.0") {
        cur.fail("only OpenQASM 2.0 is supported");
    }
    cur.expect(';');

    std::optional<Circuit> circuit;
    while (!cur.done()) {
        const std::string_view stmt = cur.word();
        if (stmt == "include") {
            cur.expect('"');
            while (cur.pos < cur.text.size() && cur.text[cur.pos] != '"') {
                ++cur.pos;
            }
            cur.expect('"');
            cur.expect(';');
            continue;
        }
        if (stmt == "qreg") {
            if (circuit) {
                cur.fail("multiple qreg declarations");
            }
            const int n = cur.index();
            circuit.emplace(n, "qasm");
            cur.expect(';');
            continue;
        }
        if (!circuit) {
            cur.fail("gate before qreg declaration");
        }
        if (stmt == "x") {
            circuit->push(Gate::x(cur.index()));
        } else if (stmt == "h") {
            circuit->push(Gate::h(cur.index()));
        } else if (stmt == "z") {
            circuit->push(Gate::z(cur.index()));
        } else if (stmt == "ry") {
            cur.expect('(');
            const double theta = cur.angle();
            cur.expect(')');
            circuit->push(Gate::ry(cur.index(), theta));
        } else if (stmt == "cx") {
            const int control = cur.index();
            cur.expect(',');
            const int target = cur.index();
            circuit->push(Gate::cx(control, target));
        } else {
            cur.fail("unsupported statement '" + std::string(stmt) + "'");
        }
        cur.expect(';');
    }
    if (!circuit) {
        cur.fail("missing qreg declaration");
    }
    return *std::move(circuit);
}

void write_probabilities_csv(std::ostream& os, const Statevector& sv) {
    os << "index,probability\n";
    const std::vector<double> probs = sv.probabilities();
    for (std::uint64_t j = 0; j < probs.size(); ++j) {
        os << j << ',' << fmt_angle(probs[j]) << '\n';
    }
}

} // namespace qusp
