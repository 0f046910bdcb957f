// SPDX-License-Identifier: Apache-2.0
#include "csyn/router.hpp"

#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "csyn/analysis.hpp"
#include "csyn/errors.hpp"

namespace csyn {

Layout::Layout(std::vector<Qubit> log_to_phys) : l2p_(std::move(log_to_phys)), p2l_(l2p_.size()) {
    std::vector<bool> hit(l2p_.size(), false);
    for (Qubit l = 0; l < l2p_.size(); ++l) {
        const Qubit p = l2p_[l];
        if (p >= l2p_.size() || hit[p]) throw std::invalid_argument("layout is not a bijection");
        hit[p] = true;
        p2l_[p] = l;
    }
}

void Layout::swap_physical(Qubit a, Qubit b) {
    std::swap(p2l_[a], p2l_[b]);
    l2p_[p2l_[a]] = a;
    l2p_[p2l_[b]] = b;
}

Layout trivial_layout(std::size_t circuit_qubits, std::size_t topology_qubits) {
    if (circuit_qubits > topology_qubits) {
        throw CapacityError("circuit needs " + std::to_string(circuit_qubits) + " qubits but the topology has " +
                            std::to_string(topology_qubits));
    }
    std::vector<Qubit> id(topology_qubits);
    std::iota(id.begin(), id.end(), Qubit{0});
    return Layout(std::move(id));
}

namespace {

constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();

// BFS distances to `target`; walking from the source to the smallest
// neighbor one step closer yields the lexicographically smallest shortest path.
std::vector<std::size_t> distances_to(const std::vector<std::vector<Qubit>>& adj, Qubit target) {
    std::vector<std::size_t> dist(adj.size(), kUnreached);
    std::deque<Qubit> queue{target};
    dist[target] = 0;
    while (!queue.empty()) {
        const Qubit q = queue.front();
        queue.pop_front();
        for (Qubit r : adj[q]) {
            if (dist[r] == kUnreached) {
                dist[r] = dist[q] + 1;
                queue.push_back(r);
            }
        }
    }
    return dist;
}

}  // namespace

RoutingResult route_circuit(const Circuit& c, const Topology& t) {
    Layout layout = trivial_layout(c.num_qubits(), t.num_qubits());
    const auto adj = t.adjacency();

    std::vector<Gate> out;
    std::vector<bool> inserted;
    out.reserve(c.size());
    inserted.reserve(c.size());
    auto emit = [&](Gate g, bool router_swap) {
        out.push_back(std::move(g));
        inserted.push_back(router_swap);
    };

    for (const Gate& g : c) {
        if (!is_two_qubit(g.kind)) {
            Gate mapped = g;
            for (Qubit& q : mapped.qubits) q = layout.physical(q);
            emit(std::move(mapped), false);
            continue;
        }
        Qubit pa = layout.physical(g.qubits[0]);
        const Qubit pb = layout.physical(g.qubits[1]);
        if (!t.has_edge(pa, pb)) {
            const auto dist = distances_to(adj, pb);
            if (dist[pa] == kUnreached) {
                throw UnroutableGate(std::string(gate_name(g.kind)) + " on logical (" + std::to_string(g.qubits[0]) +
                                     ", " + std::to_string(g.qubits[1]) + ") spans disconnected physical qubits " +
                                     std::to_string(pa) + " and " + std::to_string(pb) + " of " + t.name());
            }
            while (dist[pa] > 1) {
                Qubit step = pa;
                for (Qubit r : adj[pa]) {
                    if (dist[r] + 1 == dist[pa]) {
                        step = r;
                        break;
                    }
                }
                emit(Gate::swap(pa, step), true);
                layout.swap_physical(pa, step);
                pa = step;
            }
        }
        emit(Gate{g.kind, {pa, pb}, g.param}, false);
    }

    RoutingResult r;
    r.routed = Circuit(c.name(), t.num_qubits(), std::move(out));
    r.inserted = std::move(inserted);
    r.final_layout = std::move(layout);
    r.metrics = routed_metrics(r);
    return r;
}

bool verify_routing(const Circuit& c, const RoutingResult& r, const Topology& t) {
    if (r.inserted.size() != r.routed.size() || r.routed.num_qubits() != t.num_qubits() ||
        c.num_qubits() > t.num_qubits()) {
        return false;
    }
    Layout layout = trivial_layout(c.num_qubits(), t.num_qubits());
    std::size_t next = 0;
    for (std::size_t i = 0; i < r.routed.size(); ++i) {
        const Gate& g = r.routed.gates()[i];
        for (Qubit q : g.qubits) {
            if (q >= t.num_qubits()) return false;
        }
        if (is_two_qubit(g.kind) && (g.qubits.size() != 2 || !t.has_edge(g.qubits[0], g.qubits[1]))) return false;
        if (r.inserted[i]) {
            if (g.kind != GateKind::SWAP) return false;
            layout.swap_physical(g.qubits[0], g.qubits[1]);
            continue;
        }
        if (next >= c.size()) return false;
        Gate logical = g;
        for (Qubit& q : logical.qubits) q = layout.logical(q);
        if (!(logical == c.gates()[next])) return false;
        ++next;
    }
    return next == c.size() && layout == r.final_layout;
}

RoutingMetrics routed_metrics(const RoutingResult& r) {
    const CircuitStats s = circuit_stats(r.routed);
    RoutingMetrics m;
    m.depth = s.depth;
    m.total_gates = s.total_gates;
    m.two_qubit_gates = s.two_qubit_gates;
    for (std::size_t i = 0; i < r.routed.size(); ++i) {
        if (r.routed.gates()[i].kind != GateKind::SWAP) continue;
        ++(r.inserted[i] ? m.swap_count : m.source_swaps);
    }
    return m;
}

}  // namespace csyn
