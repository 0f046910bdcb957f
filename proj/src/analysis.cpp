// SPDX-License-Identifier: Apache-2.0
#include "csyn/analysis.hpp"

#include <algorithm>

namespace csyn {

std::vector<WeightedEdge> CorrelationMatrix::entries() const {
    std::vector<WeightedEdge> out;
    for (Qubit a = 0; a < n_; ++a) {
        for (Qubit b = a + 1; b < n_; ++b) {
            if (const Weight w = w_[slot(a, b)]; w > 0) out.push_back({a, b, w});
        }
    }
    return out;
}

std::uint64_t CorrelationMatrix::total_weight() const noexcept {
    std::uint64_t total = 0;
    for (Weight w : w_) total += w;
    return total;
}

CorrelationMatrix build_correlation(const Circuit& c) {
    CorrelationMatrix m(c.num_qubits());
    for (const Gate& g : c) {
        if (is_two_qubit(g.kind)) m.add(g.qubits[0], g.qubits[1]);
    }
    return m;
}

InteractionGraph build_interaction_graph(const CorrelationMatrix& m) {
    return InteractionGraph{m.num_qubits(), m.entries()};
}

CircuitStats circuit_stats(const Circuit& c) {
    CircuitStats s;
    std::vector<std::size_t> level(c.num_qubits(), 0);
    for (const Gate& g : c) {
        if (g.kind == GateKind::MEASURE) continue;
        std::size_t t = 0;
        for (Qubit q : g.qubits) t = std::max(t, level[q]);
        if (g.kind != GateKind::BARRIER) {
            ++t;
            ++s.total_gates;
            if (is_two_qubit(g.kind)) ++s.two_qubit_gates;
            if (g.kind == GateKind::SWAP) ++s.swap_count;
        }
        for (Qubit q : g.qubits) level[q] = t;
        s.depth = std::max(s.depth, t);
    }
    return s;
}

}  // namespace csyn
