// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csyn/circuit.hpp"
#include "csyn/router.hpp"
#include "csyn/topology.hpp"

namespace csyn {

/// Depolarizing-style error rates: epsilon per one-qubit gate,
/// epsilon * two_qubit_factor per two-qubit gate.
struct NoiseParams {
    double epsilon = 0.0;
    double two_qubit_factor = 5.0;
};

/// Throws std::invalid_argument unless 0 <= epsilon and epsilon * factor <= 1.
void check_noise(const NoiseParams& p);

/// Closed-form success probability (1 - e)^N1 * (1 - e * factor)^N2 where
/// every SWAP is expanded to three CNOTs in N2.
[[nodiscard]] double estimate_fidelity(const RoutingMetrics& m, const NoiseParams& p);

struct GeneratorConfig {
    double pair_fraction = 0.5;   ///< floor(n * pair_fraction / 2) CNOTs per layer
    double one_qubit_prob = 0.7;  ///< chance an unpaired qubit gets H/X/S/T
};

/// Layered random circuit with at least `target_gates` gates; reproducible from `seed`.
[[nodiscard]] Circuit gen_random_circuit(std::size_t n, std::size_t target_gates, std::uint64_t seed,
                                         const GeneratorConfig& cfg = {});

/// Label used for the synthesized topology in reports.
inline constexpr std::string_view kSynthLabel = "cacore";

struct BenchmarkCase {
    Circuit circuit;
    std::optional<std::uint64_t> seed;
};

enum class CellStatus { Ok, Skipped, Failed };

struct CellResult {
    std::string circuit;
    std::optional<std::uint64_t> seed;
    std::size_t qubits = 0;
    std::string topology;
    CellStatus status = CellStatus::Ok;
    std::string message;  ///< reason for a skip or failure
    RoutingMetrics metrics;
    std::vector<double> fidelity;  ///< one per epsilon

    friend bool operator==(const CellResult&, const CellResult&) = default;
};

struct TopologySummary {
    std::size_t qubits = 0;
    std::string topology;
    std::size_t samples = 0;
    double depth = 0;
    double gates = 0;
    double swaps = 0;
    std::vector<double> fidelity;

    friend bool operator==(const TopologySummary&, const TopologySummary&) = default;
};

/// Percent reductions (baseline - synth) / baseline * 100 over circuits where
/// both routings succeeded; fidelity is the relative improvement instead.
struct Reduction {
    std::size_t qubits = 0;
    std::string baseline;
    std::size_t pairs = 0;
    double depth_pct = 0;
    double gates_pct = 0;
    double swaps_pct = 0;
    std::vector<double> fidelity_pct;

    friend bool operator==(const Reduction&, const Reduction&) = default;
};

struct ReportConfig {
    std::vector<double> epsilons;
    double two_qubit_factor = 5.0;
    std::vector<std::string> baselines;
    std::size_t target_gates = 0;  ///< 0 when circuits were supplied, not generated

    friend bool operator==(const ReportConfig&, const ReportConfig&) = default;
};

struct BenchmarkReport {
    ReportConfig config;
    std::vector<CellResult> cells;  ///< circuit-major, synth topology first
    std::vector<TopologySummary> summaries;
    std::vector<Reduction> reductions;

    [[nodiscard]] std::size_t failures() const;
    [[nodiscard]] std::size_t skips() const;

    friend bool operator==(const BenchmarkReport&, const BenchmarkReport&) = default;
};

/// Synthesizes a topology per circuit, routes every circuit on it and on each
/// baseline, and aggregates per qubit count. Cells run in parallel (OpenMP);
/// the result does not depend on scheduling.
[[nodiscard]] BenchmarkReport run_comparison(const std::vector<BenchmarkCase>& cases,
                                             const std::vector<Topology>& baselines,
                                             const std::vector<double>& epsilons, double two_qubit_factor = 5.0);

/// Single-threaded reference of run_comparison.
[[nodiscard]] BenchmarkReport run_comparison_serial(const std::vector<BenchmarkCase>& cases,
                                                    const std::vector<Topology>& baselines,
                                                    const std::vector<double>& epsilons,
                                                    double two_qubit_factor = 5.0);

/// Recomputes summaries and reductions from report.cells.
void aggregate(BenchmarkReport& report);

[[nodiscard]] std::string report_to_csv(const BenchmarkReport& r);
[[nodiscard]] std::string report_to_json(const BenchmarkReport& r);
/// Throws FormatError.
[[nodiscard]] BenchmarkReport report_from_json(std::string_view text);

/// Writes `<dir>/report.csv` and `<dir>/report.json`. Throws IOError.
void emit_report(const BenchmarkReport& r, const std::filesystem::path& dir);

}  // namespace csyn
