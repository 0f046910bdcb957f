// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "csyn/analysis.hpp"
#include "csyn/bench.hpp"
#include "csyn/errors.hpp"
#include "csyn/layout.hpp"
#include "csyn/qasm.hpp"
#include "support.hpp"

using namespace csyn;
using namespace csyn::testing;

namespace {

std::vector<BenchmarkCase> random_cases(std::initializer_list<std::size_t> widths, std::uint64_t seeds,
                                        std::size_t gates) {
    std::vector<BenchmarkCase> out;
    for (std::size_t n : widths)
        for (std::uint64_t s = 1; s <= seeds; ++s) out.push_back({gen_random_circuit(n, gates, s), s});
    return out;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("generator is deterministic") {
    CHECK(gen_random_circuit(10, 2000, 1) == gen_random_circuit(10, 2000, 1));
    CHECK_FALSE(gen_random_circuit(10, 2000, 1) == gen_random_circuit(10, 2000, 2));
    CHECK(gen_random_circuit(10, 2000, 1).name() == "random_n10_s1");
}

TEST_CASE("generator gate count bound") {
    for (std::size_t n : {2, 3, 5, 10, 16, 33}) {
        for (std::uint64_t s = 1; s <= 5; ++s) {
            for (std::size_t target : {1, 100, 2000}) {
                const Circuit c = gen_random_circuit(n, target, s);
                CHECK(c.size() >= target);
                CHECK(c.size() <= target + 2 * n);
                CHECK(validate_circuit(c).empty());
            }
        }
    }
}

TEST_CASE("generator layer structure") {
    const Circuit c = gen_random_circuit(8, 500, 3);
    // first layer: floor(8/4) = 2 disjoint CNOTs, then one-qubit gates on other qubits
    REQUIRE(c.size() >= 2);
    CHECK(c.gates()[0].kind == GateKind::CNOT);
    CHECK(c.gates()[1].kind == GateKind::CNOT);
    std::set<Qubit> used(c.gates()[0].qubits.begin(), c.gates()[0].qubits.end());
    for (Qubit q : c.gates()[1].qubits) CHECK(used.insert(q).second);
    for (const Gate& g : c) {
        const bool allowed = g.kind == GateKind::CNOT || g.kind == GateKind::H || g.kind == GateKind::X ||
                             g.kind == GateKind::S || g.kind == GateKind::T;
        CHECK(allowed);
    }
}

TEST_CASE("16-qubit depth stays within a factor two of 200") {
    for (std::uint64_t s = 1; s <= 100; ++s) {
        const std::size_t d = circuit_stats(gen_random_circuit(16, 2000, s)).depth;
        CHECK(d >= 100);
        CHECK(d <= 400);
    }
}

TEST_CASE("fidelity proxy examples") {
    RoutingMetrics m;
    m.total_gates = 1;
    m.two_qubit_gates = 1;
    CHECK(estimate_fidelity(m, {0.001, 5}) == doctest::Approx(0.995).epsilon(1e-12));
    CHECK(estimate_fidelity(m, {0.0, 5}) == 1.0);
    RoutingMetrics s = m;
    s.total_gates = 2;
    s.two_qubit_gates = 2;
    s.swap_count = 1;  // one CNOT plus a SWAP worth three
    CHECK(estimate_fidelity(s, {0.001, 5}) == doctest::Approx(std::pow(0.995, 4)));
    CHECK_THROWS_AS(check_noise({-0.1, 5}), std::invalid_argument);
    CHECK_THROWS_AS(check_noise({0.3, 5}), std::invalid_argument);
    CHECK_NOTHROW(check_noise({0.2, 5}));
}

TEST_CASE("fidelity bounds and monotonicity") {
    Rng rng(41);
    for (int i = 0; i < 500; ++i) {
        RoutingMetrics m;
        m.swap_count = rng.below(50);
        m.source_swaps = rng.below(5);
        m.two_qubit_gates = m.swap_count + m.source_swaps + rng.below(200);
        m.total_gates = m.two_qubit_gates + rng.below(300);
        const double e = rng.unit() * 0.19 + 0.001;
        const double f = estimate_fidelity(m, {e, 5});
        CHECK(f >= 0.0);
        CHECK(f <= 1.0);
        CHECK(estimate_fidelity(m, {e * 1.05, 5}) <= f);
        // strict only while f is representable; deep circuits underflow to 0
        const bool strict = std::isnormal(f);
        auto lower = [&](double g) { return strict ? g < f : g <= f; };
        RoutingMetrics more_one = m;
        ++more_one.total_gates;
        CHECK(lower(estimate_fidelity(more_one, {e, 5})));
        RoutingMetrics more_two = m;
        ++more_two.total_gates;
        ++more_two.two_qubit_gates;
        CHECK(lower(estimate_fidelity(more_two, {e, 5})));
        if (m.swap_count > 0) {
            RoutingMetrics fewer = m;
            --fewer.swap_count;
            --fewer.two_qubit_gates;
            --fewer.total_gates;
            const double g = estimate_fidelity(fewer, {e, 5});
            CHECK((std::isnormal(g) ? g > f : g >= f));
        }
    }
}

TEST_CASE("comparison layout and skips") {
    const std::vector<Topology> base{builtin_topology("almaden20"), builtin_topology("cairo27")};
    const auto cases = random_cases({10, 22}, 2, 300);
    const BenchmarkReport r = run_comparison(cases, base, {0.001, 0.002});
    REQUIRE(r.cells.size() == cases.size() * 3);
    CHECK(r.cells[0].topology == "cacore");
    CHECK(r.cells[1].topology == "almaden20");
    CHECK(r.cells[2].topology == "cairo27");
    CHECK(r.failures() == 0);
    CHECK(r.skips() == 2);  // the two 22-qubit circuits on almaden20
    for (const CellResult& c : r.cells) {
        if (c.qubits == 22 && c.topology == "almaden20") {
            CHECK(c.status == CellStatus::Skipped);
            CHECK(c.message.find("22") != std::string::npos);
        } else {
            CHECK(c.status == CellStatus::Ok);
            CHECK(c.fidelity.size() == 2);
        }
    }
    // 22-qubit row has no almaden reduction
    CHECK(std::none_of(r.reductions.begin(), r.reductions.end(),
                       [](const Reduction& d) { return d.qubits == 22 && d.baseline == "almaden20"; }));
    CHECK(r.reductions.size() == 3);
    CHECK(r.summaries.size() == 5);
}

TEST_CASE("synthesized topology against itself gives zero reduction") {
    // A baseline named like the synthesized topology for one circuit.
    const Circuit c = gen_random_circuit(12, 400, 9);
    const Topology own = synthesize_topology(c, {"self", true});
    const BenchmarkReport r = run_comparison({{c, 9}}, {own}, {0.001});
    REQUIRE(r.reductions.size() == 1);
    CHECK(r.reductions[0].depth_pct == 0.0);
    CHECK(r.reductions[0].gates_pct == 0.0);
    CHECK(r.reductions[0].swaps_pct == 0.0);
    CHECK(r.reductions[0].fidelity_pct[0] == 0.0);
}

TEST_CASE("reductions follow the baseline-minus-synth orientation") {
    const auto cases = random_cases({16}, 10, 2000);
    const BenchmarkReport r = run_comparison(cases, {builtin_topology("cairo27")}, {0.001});
    REQUIRE(r.reductions.size() == 1);
    const Reduction& d = r.reductions[0];
    CHECK(d.pairs == 10);
    double own = 0, base = 0;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        own += static_cast<double>(r.cells[2 * i].metrics.swap_count);
        base += static_cast<double>(r.cells[2 * i + 1].metrics.swap_count);
    }
    CHECK(d.swaps_pct == doctest::Approx((base - own) / base * 100.0));
    CHECK(d.swaps_pct > 0.0);
}

TEST_CASE("failures are recorded and the run continues") {
    const Topology split("split", 12, {{0, 1}});
    const auto cases = random_cases({10}, 2, 100);
    const BenchmarkReport r = run_comparison(cases, {split, builtin_topology("cairo27")}, {0.001});
    CHECK(r.failures() == 2);
    for (std::size_t i = 0; i < cases.size(); ++i) {
        CHECK(r.cells[3 * i + 1].status == CellStatus::Failed);
        CHECK_FALSE(r.cells[3 * i + 1].message.empty());
        CHECK(r.cells[3 * i + 2].status == CellStatus::Ok);
    }
    // an empty circuit cannot be synthesized; its synth cell fails
    const BenchmarkReport e = run_comparison({{Circuit("empty", 0), std::nullopt}}, {line_topology(2)}, {0.001});
    CHECK(e.cells[0].status == CellStatus::Failed);
    CHECK(e.cells[0].message.find("synthesis") != std::string::npos);
}

TEST_CASE("parallel and serial drivers agree") {
    std::vector<Topology> base;
    for (const char* n : {"almaden20", "cairo27", "prague33", "sycamore53"}) base.push_back(builtin_topology(n));
    const auto cases = random_cases({6, 13, 21}, 3, 500);
    const BenchmarkReport par = run_comparison(cases, base, {0.0005, 0.001});
    const BenchmarkReport ser = run_comparison_serial(cases, base, {0.0005, 0.001});
    CHECK(par == ser);
    CHECK(report_to_json(par) == report_to_json(ser));
    CHECK(report_to_csv(par) == report_to_csv(ser));
}

TEST_CASE("report reproducibility") {
    const std::vector<Topology> base{builtin_topology("cairo27")};
    const auto cases = random_cases({10, 11}, 2, 300);
    CHECK(report_to_json(run_comparison(cases, base, {0.001})) == report_to_json(run_comparison(cases, base, {0.001})));
}

TEST_CASE("csv layout") {
    BenchmarkReport empty;
    empty.config.epsilons = {0.001, 0.005};
    CHECK(report_to_csv(empty) == "circuit,seed,qubits,topology,depth,gates,swaps,fidelity@0.001,fidelity@0.005\n");

    const std::vector<Topology> base{builtin_topology("almaden20"), builtin_topology("prague33")};
    const auto cases = random_cases({8, 25}, 2, 200);
    const BenchmarkReport r = run_comparison(cases, base, {0.001});
    const std::string csv = report_to_csv(r);
    CHECK(count_lines(csv) == 1 + cases.size() * 3 - r.skips());
    CHECK(csv.find("random_n8_s1,1,8,cacore,") != std::string::npos);
}

TEST_CASE("json round trip and recomputable aggregates") {
    const std::vector<Topology> base{builtin_topology("almaden20"), builtin_topology("sycamore53")};
    auto cases = random_cases({9, 21}, 2, 300);
    cases.push_back({parse_qasm_file(data_path("fig4a.qasm")), std::nullopt});
    BenchmarkReport r = run_comparison(cases, base, {0.0005, 0.001, 0.002});
    r.config.target_gates = 300;
    const BenchmarkReport back = report_from_json(report_to_json(r));
    CHECK(back == r);
    BenchmarkReport again = back;
    again.summaries.clear();
    again.reductions.clear();
    aggregate(again);
    CHECK(again.summaries == r.summaries);
    CHECK(again.reductions == r.reductions);
    CHECK_THROWS_AS((void)report_from_json("{}"), FormatError);
    CHECK_THROWS_AS((void)report_from_json("not json"), FormatError);
}

TEST_CASE("emit_report writes both files") {
    const auto dir = std::filesystem::temp_directory_path() / "csyn_bench_emit";
    std::filesystem::remove_all(dir);
    const BenchmarkReport r = run_comparison(random_cases({6}, 1, 100), {line_topology(6)}, {0.001});
    emit_report(r, dir);
    CHECK(slurp(dir / "report.csv") == report_to_csv(r));
    CHECK(slurp(dir / "report.json") == report_to_json(r));
    CHECK_THROWS_AS(emit_report(r, "/proc/csyn_no_such_dir"), IOError);
}
