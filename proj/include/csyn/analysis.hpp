// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "csyn/circuit.hpp"

namespace csyn {

using Weight = std::uint32_t;

struct WeightedEdge {
    Qubit u = 0;  ///< always u < v
    Qubit v = 0;
    Weight weight = 0;

    friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Symmetric qubit-pair weights counting two-qubit interactions.
///
/// Stored densely as the strict upper triangle so that lookups are O(1) and
/// construction is O(n^2).
class CorrelationMatrix {
public:
    CorrelationMatrix() = default;
    explicit CorrelationMatrix(std::size_t num_qubits)
        : n_(num_qubits), w_(num_qubits < 2 ? 0 : num_qubits * (num_qubits - 1) / 2, 0) {}

    [[nodiscard]] std::size_t num_qubits() const noexcept { return n_; }

    /// Weight of the unordered pair {a, b}; 0 for a == b or uncorrelated pairs.
    [[nodiscard]] Weight weight(Qubit a, Qubit b) const noexcept {
        return a == b ? 0 : w_[slot(a, b)];
    }
    [[nodiscard]] bool has_edge(Qubit a, Qubit b) const noexcept { return weight(a, b) > 0; }

    void add(Qubit a, Qubit b, Weight w = 1) { w_[slot(a, b)] += w; }

    /// Non-zero entries ordered by (u, v).
    [[nodiscard]] std::vector<WeightedEdge> entries() const;
    [[nodiscard]] std::uint64_t total_weight() const noexcept;

    friend bool operator==(const CorrelationMatrix&, const CorrelationMatrix&) = default;

private:
    [[nodiscard]] std::size_t slot(Qubit a, Qubit b) const noexcept {
        if (a > b) std::swap(a, b);
        // row-major strict upper triangle
        return static_cast<std::size_t>(a) * (2 * n_ - a - 1) / 2 + (b - a - 1);
    }

    std::size_t n_ = 0;
    std::vector<Weight> w_;
};

struct InteractionGraph {
    std::size_t num_nodes = 0;
    std::vector<WeightedEdge> edges;  ///< ordered by (u, v)
};

struct CircuitStats {
    std::size_t depth = 0;
    std::size_t total_gates = 0;
    std::size_t two_qubit_gates = 0;
    std::size_t swap_count = 0;

    friend bool operator==(const CircuitStats&, const CircuitStats&) = default;
};

/// Counts two-qubit gates (CNOT and SWAP each weigh 1) per unordered pair.
[[nodiscard]] CorrelationMatrix build_correlation(const Circuit& c);

[[nodiscard]] InteractionGraph build_interaction_graph(const CorrelationMatrix& m);

/// ASAP depth with unit-time gates (SWAP included). Barriers align their
/// qubits without adding depth; measures and barriers are not counted.
[[nodiscard]] CircuitStats circuit_stats(const Circuit& c);

}  // namespace csyn
