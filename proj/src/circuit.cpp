// SPDX-License-Identifier: Apache-2.0
#include "csyn/circuit.hpp"

#include <set>
#include <string>

namespace csyn {

std::string_view gate_name(GateKind kind) noexcept {
    switch (kind) {
        case GateKind::H: return "h";
        case GateKind::X: return "x";
        case GateKind::Y: return "y";
        case GateKind::Z: return "z";
        case GateKind::S: return "s";
        case GateKind::SDG: return "sdg";
        case GateKind::T: return "t";
        case GateKind::TDG: return "tdg";
        case GateKind::RX: return "rx";
        case GateKind::RY: return "ry";
        case GateKind::RZ: return "rz";
        case GateKind::CNOT: return "cx";
        case GateKind::SWAP: return "swap";
        case GateKind::MEASURE: return "measure";
        case GateKind::BARRIER: return "barrier";
    }
    return "?";
}

bool is_two_qubit(GateKind kind) noexcept {
    return kind == GateKind::CNOT || kind == GateKind::SWAP;
}

bool is_parameterized(GateKind kind) noexcept {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

bool is_computational(GateKind kind) noexcept {
    return kind != GateKind::MEASURE && kind != GateKind::BARRIER;
}

Diagnostics validate_circuit(const Circuit& c) {
    Diagnostics out;
    auto report = [&](std::size_t i, const std::string& msg) {
        out.push_back({Severity::Error, "gate " + std::to_string(i) + " (" +
                                            std::string(gate_name(c.gates()[i].kind)) + "): " + msg});
    };
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Gate& g = c.gates()[i];
        const std::size_t arity = g.qubits.size();
        if (is_two_qubit(g.kind)) {
            if (arity != 2) {
                report(i, "expected 2 qubits, got " + std::to_string(arity));
            } else if (g.qubits[0] == g.qubits[1]) {
                report(i, "identical endpoints q" + std::to_string(g.qubits[0]));
            }
        } else if (g.kind == GateKind::BARRIER) {
            if (arity == 0) report(i, "barrier spans no qubits");
            if (std::set<Qubit>(g.qubits.begin(), g.qubits.end()).size() != arity) {
                report(i, "barrier lists a qubit twice");
            }
        } else if (arity != 1) {
            report(i, "expected 1 qubit, got " + std::to_string(arity));
        }
        if (is_parameterized(g.kind) != g.param.has_value()) {
            report(i, is_parameterized(g.kind) ? "missing angle" : "unexpected angle");
        }
        for (Qubit q : g.qubits) {
            if (q >= c.num_qubits()) {
                report(i, "qubit index " + std::to_string(q) + " out of range for " +
                              std::to_string(c.num_qubits()) + " qubits");
            }
        }
    }
    return out;
}

}  // namespace csyn
