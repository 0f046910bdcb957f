// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "csyn/analysis.hpp"
#include "csyn/qasm.hpp"
#include "support.hpp"

using namespace csyn;
using namespace csyn::testing;

TEST_CASE("correlation counts two-qubit gates per pair") {
    std::vector<Gate> g;
    for (int i = 0; i < 3; ++i) g.push_back(Gate::cnot(2, 3));
    g.push_back(Gate::cnot(4, 6));
    g.push_back(Gate::cnot(6, 4));
    g.push_back(Gate::single(GateKind::H, 2));
    const CorrelationMatrix m = build_correlation(Circuit("c", 7, g));
    CHECK(m.weight(2, 3) == 3);
    CHECK(m.weight(3, 2) == 3);
    CHECK(m.weight(4, 6) == 2);
    CHECK(m.weight(2, 2) == 0);
    CHECK(m.total_weight() == 5);
    CHECK(m.entries().size() == 2);
}

TEST_CASE("source SWAPs weigh one, one-qubit gates and measures nothing") {
    const Circuit c("c", 3,
                    {Gate::swap(0, 2), Gate::single(GateKind::H, 0), Gate::measure(1), Gate::barrier({0, 1, 2})});
    const CorrelationMatrix m = build_correlation(c);
    CHECK(m.weight(0, 2) == 1);
    CHECK(m.total_weight() == 1);
}

TEST_CASE("only H gates give an empty matrix") {
    const CorrelationMatrix m =
        build_correlation(Circuit("h", 3, {Gate::single(GateKind::H, 0), Gate::single(GateKind::H, 2)}));
    CHECK(m.entries().empty());
    CHECK(m.total_weight() == 0);
}

TEST_CASE("six-qubit reference circuit") {
    const Circuit c = parse_qasm_file(data_path("fig4a.qasm"));
    const CorrelationMatrix m = build_correlation(c);
    CHECK(m.total_weight() == 8);
    const InteractionGraph ig = build_interaction_graph(m);
    CHECK(ig.num_nodes == 6);
    // distinct pairs of the transcription: (0,1) (1,3) (1,2) (2,4) (3,5) (4,5)
    CHECK(ig.edges.size() == 6);
}

TEST_CASE("interaction graph keeps isolated nodes") {
    const InteractionGraph empty = build_interaction_graph(CorrelationMatrix(4));
    CHECK(empty.num_nodes == 4);
    CHECK(empty.edges.empty());
    CorrelationMatrix m(2);
    m.add(0, 1, 5);
    const InteractionGraph one = build_interaction_graph(m);
    REQUIRE(one.edges.size() == 1);
    CHECK(one.edges[0] == WeightedEdge{0, 1, 5});
}

TEST_CASE("circuit_stats examples") {
    const CircuitStats par = circuit_stats(Circuit("p", 2, {Gate::single(GateKind::H, 0), Gate::single(GateKind::H, 1)}));
    CHECK(par.depth == 1);
    CHECK(par.total_gates == 2);
    CHECK(circuit_stats(Circuit("s", 3, {Gate::cnot(0, 1), Gate::cnot(1, 2)})).depth == 2);
    CHECK(circuit_stats(Circuit("e", 3)).depth == 0);
}

TEST_CASE("barriers align without adding depth") {
    const Circuit c("b", 3,
                    {Gate::single(GateKind::H, 0), Gate::single(GateKind::H, 0), Gate::barrier({0, 1}),
                     Gate::single(GateKind::X, 1), Gate::single(GateKind::X, 2), Gate::measure(2)});
    const CircuitStats s = circuit_stats(c);
    CHECK(s.depth == 3);
    CHECK(s.total_gates == 4);
}

TEST_CASE("stats agree with the list-scheduling oracle") {
    Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        const Circuit c = random_mixed_circuit(rng, 1 + rng.below(9), rng.below(80));
        CHECK(circuit_stats(c) == oracle_stats(c));
    }
}

TEST_CASE("depth bounds") {
    Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 1 + rng.below(9);
        const Circuit c = random_mixed_circuit(rng, n, rng.below(80));
        const CircuitStats s = circuit_stats(c);
        std::vector<std::size_t> busy(n, 0);
        for (const Gate& g : c) {
            if (!is_computational(g.kind)) continue;
            for (Qubit q : g.qubits) ++busy[q];
        }
        CHECK(s.depth <= s.total_gates);
        CHECK(s.depth >= *std::max_element(busy.begin(), busy.end()));
    }
}

TEST_CASE("permutation equivariance") {
    Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 2 + rng.below(10);
        const Circuit c = random_mixed_circuit(rng, n, 60);
        std::vector<Qubit> pi(n);
        std::iota(pi.begin(), pi.end(), Qubit{0});
        rng.shuffle(pi.begin(), pi.end());
        std::vector<Gate> moved;
        for (Gate g : c) {
            for (Qubit& q : g.qubits) q = pi[q];
            moved.push_back(g);
        }
        const CorrelationMatrix a = build_correlation(c);
        const CorrelationMatrix b = build_correlation(Circuit("p", n, moved));
        for (Qubit x = 0; x < n; ++x) {
            for (Qubit y = x + 1; y < n; ++y) CHECK(a.weight(x, y) == b.weight(pi[x], pi[y]));
        }
    }
}

TEST_CASE("adding one CNOT changes exactly one entry by one") {
    Rng rng(14);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 2 + rng.below(10);
        const Circuit c = random_mixed_circuit(rng, n, 40);
        const auto a = static_cast<Qubit>(rng.below(n));
        const auto b = static_cast<Qubit>((a + 1 + rng.below(n - 1)) % n);
        std::vector<Gate> more = c.gates();
        more.insert(more.begin() + static_cast<std::ptrdiff_t>(rng.below(more.size() + 1)), Gate::cnot(a, b));
        const CorrelationMatrix before = build_correlation(c);
        const CorrelationMatrix after = build_correlation(Circuit("m", n, more));
        for (Qubit x = 0; x < n; ++x) {
            for (Qubit y = x + 1; y < n; ++y) {
                const bool hit = (x == std::min(a, b) && y == std::max(a, b));
                CHECK(after.weight(x, y) == before.weight(x, y) + (hit ? 1 : 0));
            }
        }
    }
}

TEST_CASE("total weight equals two-qubit gate count") {
    Rng rng(15);
    for (int i = 0; i < 100; ++i) {
        const Circuit c = random_mixed_circuit(rng, 2 + rng.below(10), 70);
        CHECK(build_correlation(c).total_weight() == circuit_stats(c).two_qubit_gates);
    }
}
