// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "csyn/diagnostic.hpp"

namespace csyn {

using Qubit = std::uint32_t;

// SDG and TDG exist so that the Toffoli decomposition and common benchmark
// files can be represented without resorting to RZ rewrites.
enum class GateKind {
    H, X, Y, Z, S, SDG, T, TDG, RX, RY, RZ, CNOT, SWAP, MEASURE, BARRIER
};

[[nodiscard]] std::string_view gate_name(GateKind kind) noexcept;
[[nodiscard]] bool is_two_qubit(GateKind kind) noexcept;
[[nodiscard]] bool is_parameterized(GateKind kind) noexcept;
/// Gates that count toward gate/depth metrics (everything but MEASURE and BARRIER).
[[nodiscard]] bool is_computational(GateKind kind) noexcept;

struct Gate {
    GateKind kind = GateKind::H;
    std::vector<Qubit> qubits;
    std::optional<double> param;

    static Gate single(GateKind kind, Qubit q, std::optional<double> param = std::nullopt) {
        return Gate{kind, {q}, param};
    }
    static Gate cnot(Qubit control, Qubit target) { return Gate{GateKind::CNOT, {control, target}, {}}; }
    static Gate swap(Qubit a, Qubit b) { return Gate{GateKind::SWAP, {a, b}, {}}; }
    static Gate measure(Qubit q) { return Gate{GateKind::MEASURE, {q}, {}}; }
    static Gate barrier(std::vector<Qubit> qs) { return Gate{GateKind::BARRIER, std::move(qs), {}}; }

    friend bool operator==(const Gate&, const Gate&) = default;
};

/// Ordered gate list over logical qubits. Not validated on construction;
/// see validate_circuit.
class Circuit {
public:
    Circuit() = default;
    Circuit(std::string name, std::size_t num_qubits, std::vector<Gate> gates = {})
        : name_(std::move(name)), num_qubits_(num_qubits), gates_(std::move(gates)) {}

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] const std::vector<Gate>& gates() const noexcept { return gates_; }
    [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }

    [[nodiscard]] auto begin() const noexcept { return gates_.begin(); }
    [[nodiscard]] auto end() const noexcept { return gates_.end(); }

    friend bool operator==(const Circuit&, const Circuit&) = default;

private:
    std::string name_;
    std::size_t num_qubits_ = 0;
    std::vector<Gate> gates_;
};

/// One diagnostic per invariant violation; empty iff the circuit is well formed.
[[nodiscard]] Diagnostics validate_circuit(const Circuit& c);

}  // namespace csyn
