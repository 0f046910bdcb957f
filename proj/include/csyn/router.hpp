// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "csyn/circuit.hpp"
#include "csyn/topology.hpp"

namespace csyn {

/// Logical -> physical assignment, bijective over the topology's qubits.
/// Logical indices >= the circuit width stand for idle ancillas.
class Layout {
public:
    Layout() = default;
    explicit Layout(std::vector<Qubit> log_to_phys);

    [[nodiscard]] Qubit physical(Qubit logical) const { return l2p_.at(logical); }
    [[nodiscard]] Qubit logical(Qubit physical) const { return p2l_.at(physical); }
    [[nodiscard]] std::size_t size() const noexcept { return l2p_.size(); }
    [[nodiscard]] const std::vector<Qubit>& mapping() const noexcept { return l2p_; }

    /// Exchanges the logical occupants of two physical qubits.
    void swap_physical(Qubit a, Qubit b);

    friend bool operator==(const Layout&, const Layout&) = default;

private:
    std::vector<Qubit> l2p_;
    std::vector<Qubit> p2l_;
};

struct RoutingMetrics {
    std::size_t depth = 0;
    std::size_t total_gates = 0;      ///< computational gates, SWAP counted once
    std::size_t two_qubit_gates = 0;  ///< CNOT + every SWAP
    std::size_t swap_count = 0;       ///< SWAPs inserted by the router
    std::size_t source_swaps = 0;     ///< SWAPs present in the input circuit

    [[nodiscard]] std::size_t one_qubit_gates() const noexcept { return total_gates - two_qubit_gates; }
    [[nodiscard]] std::size_t cnot_gates() const noexcept { return two_qubit_gates - swap_count - source_swaps; }

    friend bool operator==(const RoutingMetrics&, const RoutingMetrics&) = default;
};

struct RoutingResult {
    Circuit routed;              ///< over physical qubits
    std::vector<bool> inserted;  ///< parallel to routed gates: true for router SWAPs
    Layout final_layout;
    RoutingMetrics metrics;
};

/// Identity layout on `topology_qubits` physical qubits. Throws CapacityError
/// if the circuit needs more qubits than the topology offers.
[[nodiscard]] Layout trivial_layout(std::size_t circuit_qubits, std::size_t topology_qubits);
[[nodiscard]] inline Layout trivial_layout(std::size_t n) { return trivial_layout(n, n); }

/// Trivial layout plus naive SWAP insertion in program order.
///
/// For a non-adjacent two-qubit gate (a, b) the lexicographically smallest
/// shortest path from phys(a) to phys(b) is taken and a's state is swapped
/// along it until it neighbors phys(b). Throws UnroutableGate if the
/// endpoints are disconnected and CapacityError if the circuit is too wide.
[[nodiscard]] RoutingResult route_circuit(const Circuit& c, const Topology& t);

/// True iff every routed two-qubit gate sits on a coupler and undoing the
/// inserted SWAPs recovers the source gate sequence and the final layout.
[[nodiscard]] bool verify_routing(const Circuit& c, const RoutingResult& r, const Topology& t);

[[nodiscard]] RoutingMetrics routed_metrics(const RoutingResult& r);

}  // namespace csyn
