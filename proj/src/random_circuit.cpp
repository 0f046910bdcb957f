// SPDX-License-Identifier: Apache-2.0
#include <array>
#include <numeric>

#include "csyn/bench.hpp"
#include "csyn/rng.hpp"

namespace csyn {

Circuit gen_random_circuit(std::size_t n, std::size_t target_gates, std::uint64_t seed, const GeneratorConfig& cfg) {
    static constexpr std::array<GateKind, 4> kOneQubit = {GateKind::H, GateKind::X, GateKind::S, GateKind::T};
    Rng rng(seed);
    const auto pairs = static_cast<std::size_t>(static_cast<double>(n) * cfg.pair_fraction / 2.0);

    std::vector<Qubit> order(n);
    std::vector<Gate> gates;
    gates.reserve(target_gates + n);
    while (gates.size() < target_gates) {
        const std::size_t before = gates.size();
        std::iota(order.begin(), order.end(), Qubit{0});
        rng.shuffle(order.begin(), order.end());
        for (std::size_t k = 0; k < pairs; ++k) gates.push_back(Gate::cnot(order[2 * k], order[2 * k + 1]));
        for (std::size_t k = 2 * pairs; k < n; ++k) {
            if (rng.unit() < cfg.one_qubit_prob) gates.push_back(Gate::single(kOneQubit[rng.below(4)], order[k]));
        }
        // An empty layer can only repeat forever if nothing can ever be emitted.
        if (gates.size() == before && pairs == 0 && cfg.one_qubit_prob <= 0.0) break;
    }
    return Circuit("random_n" + std::to_string(n) + "_s" + std::to_string(seed), n, std::move(gates));
}

}  // namespace csyn
