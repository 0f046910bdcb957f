// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <map>
#include <stdexcept>

#include "csyn/bench.hpp"
#include "csyn/errors.hpp"
#include "csyn/layout.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace csyn {

void check_noise(const NoiseParams& p) {
    if (!(p.epsilon >= 0.0) || !(p.two_qubit_factor >= 0.0) || p.epsilon * p.two_qubit_factor > 1.0) {
        throw std::invalid_argument("noise parameters need 0 <= epsilon and epsilon * factor <= 1");
    }
}

double estimate_fidelity(const RoutingMetrics& m, const NoiseParams& p) {
    check_noise(p);
    const auto n1 = static_cast<double>(m.one_qubit_gates());
    const auto swaps = m.swap_count + m.source_swaps;
    const auto n2 = static_cast<double>(m.cnot_gates() + 3 * swaps);
    return std::pow(1.0 - p.epsilon, n1) * std::pow(1.0 - p.epsilon * p.two_qubit_factor, n2);
}

std::size_t BenchmarkReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(cells.begin(), cells.end(), [](const CellResult& c) { return c.status == CellStatus::Failed; }));
}

std::size_t BenchmarkReport::skips() const {
    return static_cast<std::size_t>(
        std::count_if(cells.begin(), cells.end(), [](const CellResult& c) { return c.status == CellStatus::Skipped; }));
}

namespace {

struct Synthesized {
    std::optional<Topology> topology;
    std::string error;
};

Synthesized try_synthesize(const BenchmarkCase& bc) {
    try {
        return {synthesize_topology(bc.circuit, {std::string(kSynthLabel), true}), {}};
    } catch (const std::exception& e) {
        return {std::nullopt, e.what()};
    }
}

CellResult evaluate_cell(const BenchmarkCase& bc, const Topology* topo, std::string_view label,
                         std::string_view synth_error, const std::vector<double>& eps, double factor) {
    CellResult cell;
    cell.circuit = bc.circuit.name();
    cell.seed = bc.seed;
    cell.qubits = bc.circuit.num_qubits();
    cell.topology = std::string(label);
    if (topo == nullptr) {
        cell.status = CellStatus::Failed;
        cell.message = "synthesis failed: " + std::string(synth_error);
        return cell;
    }
    if (bc.circuit.num_qubits() > topo->num_qubits()) {
        cell.status = CellStatus::Skipped;
        cell.message = "circuit needs " + std::to_string(bc.circuit.num_qubits()) + " qubits, topology has " +
                       std::to_string(topo->num_qubits());
        return cell;
    }
    try {
        const RoutingResult r = route_circuit(bc.circuit, *topo);
        if (!verify_routing(bc.circuit, r, *topo)) {
            cell.status = CellStatus::Failed;
            cell.message = "routing failed verification";
            return cell;
        }
        cell.metrics = r.metrics;
        for (double e : eps) cell.fidelity.push_back(estimate_fidelity(r.metrics, {e, factor}));
    } catch (const std::exception& e) {
        cell.status = CellStatus::Failed;
        cell.message = e.what();
    }
    return cell;
}

BenchmarkReport make_report(const std::vector<Topology>& baselines, const std::vector<double>& eps, double factor) {
    for (double e : eps) check_noise({e, factor});
    BenchmarkReport report;
    report.config.epsilons = eps;
    report.config.two_qubit_factor = factor;
    for (const Topology& t : baselines) report.config.baselines.push_back(t.name());
    return report;
}

}  // namespace

BenchmarkReport run_comparison(const std::vector<BenchmarkCase>& cases, const std::vector<Topology>& baselines,
                               const std::vector<double>& epsilons, double two_qubit_factor) {
    BenchmarkReport report = make_report(baselines, epsilons, two_qubit_factor);
    const auto ncases = static_cast<std::ptrdiff_t>(cases.size());
    const std::size_t width = baselines.size() + 1;
    std::vector<Synthesized> synth(cases.size());

#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < ncases; ++i) {
        synth[static_cast<std::size_t>(i)] = try_synthesize(cases[static_cast<std::size_t>(i)]);
    }

    const auto ncells = static_cast<std::ptrdiff_t>(cases.size() * width);
    report.cells.resize(cases.size() * width);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < ncells; ++k) {
        const auto idx = static_cast<std::size_t>(k);
        const std::size_t i = idx / width;
        const std::size_t j = idx % width;
        const Synthesized& s = synth[i];
        if (j == 0) {
            report.cells[idx] = evaluate_cell(cases[i], s.topology ? &*s.topology : nullptr, kSynthLabel, s.error,
                                              epsilons, two_qubit_factor);
        } else {
            const Topology& t = baselines[j - 1];
            report.cells[idx] = evaluate_cell(cases[i], &t, t.name(), {}, epsilons, two_qubit_factor);
        }
    }
    aggregate(report);
    return report;
}

BenchmarkReport run_comparison_serial(const std::vector<BenchmarkCase>& cases, const std::vector<Topology>& baselines,
                                      const std::vector<double>& epsilons, double two_qubit_factor) {
    BenchmarkReport report = make_report(baselines, epsilons, two_qubit_factor);
    for (const BenchmarkCase& bc : cases) {
        const Synthesized s = try_synthesize(bc);
        report.cells.push_back(evaluate_cell(bc, s.topology ? &*s.topology : nullptr, kSynthLabel, s.error, epsilons,
                                             two_qubit_factor));
        for (const Topology& t : baselines) {
            report.cells.push_back(evaluate_cell(bc, &t, t.name(), {}, epsilons, two_qubit_factor));
        }
    }
    aggregate(report);
    return report;
}

void aggregate(BenchmarkReport& report) {
    report.summaries.clear();
    report.reductions.clear();
    const std::size_t width = report.config.baselines.size() + 1;
    if (width == 0 || report.cells.size() % width != 0) {
        throw FormatError("report cells do not form whole circuit rows");
    }
    const std::size_t neps = report.config.epsilons.size();
    std::vector<std::string> labels{std::string(kSynthLabel)};
    labels.insert(labels.end(), report.config.baselines.begin(), report.config.baselines.end());

    // circuit rows grouped by width, in ascending qubit count
    std::map<std::size_t, std::vector<std::size_t>> rows_by_qubits;
    for (std::size_t row = 0; row * width < report.cells.size(); ++row) {
        rows_by_qubits[report.cells[row * width].qubits].push_back(row);
    }

    for (const auto& [qubits, rows] : rows_by_qubits) {
        for (std::size_t j = 0; j < width; ++j) {
            TopologySummary s;
            s.qubits = qubits;
            s.topology = labels[j];
            s.fidelity.assign(neps, 0.0);
            for (std::size_t row : rows) {
                const CellResult& c = report.cells[row * width + j];
                if (c.status != CellStatus::Ok) continue;
                ++s.samples;
                s.depth += static_cast<double>(c.metrics.depth);
                s.gates += static_cast<double>(c.metrics.total_gates);
                s.swaps += static_cast<double>(c.metrics.swap_count);
                for (std::size_t e = 0; e < neps; ++e) s.fidelity[e] += c.fidelity[e];
            }
            if (s.samples == 0) continue;
            const auto k = static_cast<double>(s.samples);
            s.depth /= k;
            s.gates /= k;
            s.swaps /= k;
            for (double& f : s.fidelity) f /= k;
            report.summaries.push_back(std::move(s));
        }
        for (std::size_t j = 1; j < width; ++j) {
            Reduction red;
            red.qubits = qubits;
            red.baseline = labels[j];
            double sd = 0, sg = 0, ss = 0, bd = 0, bg = 0, bs = 0;
            std::vector<double> sf(neps, 0.0), bf(neps, 0.0);
            for (std::size_t row : rows) {
                const CellResult& own = report.cells[row * width];
                const CellResult& base = report.cells[row * width + j];
                if (own.status != CellStatus::Ok || base.status != CellStatus::Ok) continue;
                ++red.pairs;
                sd += static_cast<double>(own.metrics.depth);
                sg += static_cast<double>(own.metrics.total_gates);
                ss += static_cast<double>(own.metrics.swap_count);
                bd += static_cast<double>(base.metrics.depth);
                bg += static_cast<double>(base.metrics.total_gates);
                bs += static_cast<double>(base.metrics.swap_count);
                for (std::size_t e = 0; e < neps; ++e) {
                    sf[e] += own.fidelity[e];
                    bf[e] += base.fidelity[e];
                }
            }
            if (red.pairs == 0) continue;
            auto pct = [](double base, double own) { return base == 0.0 ? 0.0 : (base - own) / base * 100.0; };
            red.depth_pct = pct(bd, sd);
            red.gates_pct = pct(bg, sg);
            red.swaps_pct = pct(bs, ss);
            for (std::size_t e = 0; e < neps; ++e) red.fidelity_pct.push_back(bf[e] == 0.0 ? 0.0 : (sf[e] - bf[e]) / bf[e] * 100.0);
            report.reductions.push_back(std::move(red));
        }
    }
}

}  // namespace csyn
