// SPDX-License-Identifier: Apache-2.0
// Shared helpers for the test binaries: fixtures, random inputs and the
// reference oracles that the library results are checked against.
#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <filesystem>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "csyn/analysis.hpp"
#include "csyn/circuit.hpp"
#include "csyn/layout.hpp"
#include "csyn/rng.hpp"

namespace csyn::testing {

inline std::filesystem::path data_path(const std::string& rel) {
    return std::filesystem::path(CSYN_TEST_DATA) / rel;
}

/// Mixed-gate circuit exercising every gate kind, including source SWAPs,
/// barriers and measurements.
inline Circuit random_mixed_circuit(Rng& rng, std::size_t n, std::size_t gates) {
    static constexpr GateKind kOne[] = {GateKind::H, GateKind::X,   GateKind::Y, GateKind::Z,  GateKind::S,
                                        GateKind::SDG, GateKind::T, GateKind::TDG, GateKind::RX, GateKind::RY,
                                        GateKind::RZ};
    std::vector<Gate> out;
    for (std::size_t i = 0; i < gates; ++i) {
        const auto roll = rng.below(100);
        if (n >= 2 && roll < 45) {
            const auto a = static_cast<Qubit>(rng.below(n));
            auto b = static_cast<Qubit>(rng.below(n - 1));
            if (b >= a) ++b;
            out.push_back(roll < 40 ? Gate::cnot(a, b) : Gate::swap(a, b));
        } else if (roll < 48) {
            std::vector<Qubit> qs;
            for (Qubit q = 0; q < n; ++q) {
                if (rng.below(2) == 0) qs.push_back(q);
            }
            if (qs.empty()) qs.push_back(0);
            out.push_back(Gate::barrier(qs));
        } else if (roll < 51) {
            out.push_back(Gate::measure(static_cast<Qubit>(rng.below(n))));
        } else {
            const GateKind k = kOne[rng.below(std::size(kOne))];
            std::optional<double> p;
            if (is_parameterized(k)) p = (rng.unit() - 0.5) * 7.0;
            out.push_back(Gate::single(k, static_cast<Qubit>(rng.below(n)), p));
        }
    }
    return Circuit("mixed", n, std::move(out));
}

/// Depth by list scheduling over an explicit dependency DAG: every gate
/// depends on the previous gate touching each of its qubits, nodes are
/// released in Kahn order, and a node starts when all predecessors finish.
/// Barriers are zero-duration nodes; measurements are dropped entirely.
inline std::size_t oracle_depth(const Circuit& c) {
    std::vector<const Gate*> nodes;
    for (const Gate& g : c) {
        if (g.kind != GateKind::MEASURE) nodes.push_back(&g);
    }
    const std::size_t m = nodes.size();
    std::vector<std::set<std::size_t>> succ(m);
    std::vector<std::size_t> indeg(m, 0);
    std::map<Qubit, std::size_t> last;
    for (std::size_t i = 0; i < m; ++i) {
        for (Qubit q : nodes[i]->qubits) {
            if (auto it = last.find(q); it != last.end() && succ[it->second].insert(i).second) ++indeg[i];
            last[q] = i;
        }
    }
    std::vector<std::size_t> start(m, 0);
    std::deque<std::size_t> ready;
    for (std::size_t i = 0; i < m; ++i) {
        if (indeg[i] == 0) ready.push_back(i);
    }
    std::size_t makespan = 0;
    while (!ready.empty()) {
        const std::size_t i = ready.front();
        ready.pop_front();
        const std::size_t finish = start[i] + (nodes[i]->kind == GateKind::BARRIER ? 0 : 1);
        makespan = std::max(makespan, finish);
        for (std::size_t j : succ[i]) {
            start[j] = std::max(start[j], finish);
            if (--indeg[j] == 0) ready.push_back(j);
        }
    }
    return makespan;
}

/// Gate counts straight from the gate list.
inline CircuitStats oracle_stats(const Circuit& c) {
    CircuitStats s;
    s.depth = oracle_depth(c);
    for (const Gate& g : c) {
        if (g.kind == GateKind::MEASURE || g.kind == GateKind::BARRIER) continue;
        ++s.total_gates;
        if (g.qubits.size() == 2) ++s.two_qubit_gates;
        if (g.kind == GateKind::SWAP) ++s.swap_count;
    }
    return s;
}

/// Circuit whose correlation matrix equals the given weights.
inline Circuit circuit_from_weights(std::size_t n, const std::vector<WeightedEdge>& edges) {
    std::vector<Gate> gates;
    for (const WeightedEdge& e : edges) {
        for (Weight k = 0; k < e.weight; ++k) gates.push_back(Gate::cnot(e.u, e.v));
    }
    return Circuit("weights", n, std::move(gates));
}

/// Random weighted graph on n nodes with edge density p and weights 1..wmax.
inline std::vector<WeightedEdge> random_weights(Rng& rng, std::size_t n, double p, Weight wmax) {
    std::vector<WeightedEdge> out;
    for (Qubit a = 0; a < n; ++a) {
        for (Qubit b = a + 1; b < n; ++b) {
            if (rng.unit() < p) out.push_back({a, b, static_cast<Weight>(1 + rng.below(wmax))});
        }
    }
    return out;
}

inline std::set<std::pair<Qubit, Qubit>> edge_set(const PathGraph& p) {
    std::set<std::pair<Qubit, Qubit>> s;
    for (const PathEdge& e : p.edges()) s.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
    return s;
}

// Same greedy rule written independently: adjacency lists and a DFS for the
// cycle test instead of union-find.
inline std::set<std::pair<Qubit, Qubit>> reference_mwpg(std::size_t n, std::vector<WeightedEdge> w) {
    std::sort(w.begin(), w.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    std::vector<std::vector<Qubit>> adj(n);
    auto connected = [&](Qubit s, Qubit t) {
        std::vector<bool> seen(n, false);
        std::vector<Qubit> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            const Qubit x = stack.back();
            stack.pop_back();
            if (x == t) return true;
            for (Qubit y : adj[x]) {
                if (!seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
            }
        }
        return false;
    };
    std::set<std::pair<Qubit, Qubit>> out;
    for (const WeightedEdge& e : w) {
        if (adj[e.u].size() >= 2 || adj[e.v].size() >= 2 || connected(e.u, e.v)) continue;
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
        out.emplace(e.u, e.v);
    }
    return out;
}

inline bool is_hamiltonian_path(const PathGraph& p) {
    const std::size_t n = p.num_nodes();
    if (n == 0) return true;
    if (p.edges().size() != n - 1) return false;
    std::size_t ends = 0;
    for (Qubit q = 0; q < n; ++q) {
        if (p.degree(q) > 2 || (n > 1 && p.degree(q) == 0)) return false;
        ends += p.degree(q) == 1;
    }
    return (n == 1 || ends == 2) && p.is_acyclic();
}

}  // namespace csyn::testing
