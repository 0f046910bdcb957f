// SPDX-License-Identifier: Apache-2.0
// Command-line front end: synth, route, bench, gen, validate.
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "csyn/analysis.hpp"
#include "csyn/bench.hpp"
#include "csyn/errors.hpp"
#include "csyn/layout.hpp"
#include "csyn/qasm.hpp"
#include "csyn/router.hpp"
#include "csyn/topology.hpp"

namespace {

using namespace csyn;

enum Exit : int { kOk = 0, kUsage = 1, kInput = 2, kPipeline = 3, kPartial = 4 };

/// Bad flag values discovered after parsing (unknown baseline, bad range).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Topology resolve_topology(const std::string& spec) {
    if (is_builtin_topology(spec)) return builtin_topology(spec);
    if (std::filesystem::is_regular_file(spec)) return load_topology(spec);
    throw UsageError("unknown topology '" + spec + "' (not a builtin name or an existing file)");
}

void write_file(const std::filesystem::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IOError("cannot write " + path.string());
    out << body;
    if (!out.flush()) throw IOError("write failed: " + path.string());
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) {
        const auto b = item.find_first_not_of(' ');
        const auto e = item.find_last_not_of(' ');
        if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

std::size_t parse_count(std::string_view s, const char* what) {
    std::size_t v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size()) throw UsageError(std::string("bad ") + what + " '" + std::string(s) + "'");
    return v;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const std::size_t v = parse_count(s, "qubit range");
        return {v, v};
    }
    const std::size_t lo = parse_count(std::string_view(s).substr(0, dots), "qubit range");
    const std::size_t hi = parse_count(std::string_view(s).substr(dots + 2), "qubit range");
    if (lo > hi) throw UsageError("empty qubit range '" + s + "'");
    return {lo, hi};
}

std::vector<double> parse_eps(const std::string& s) {
    std::vector<double> out;
    for (const std::string& item : split_list(s)) {
        double v = 0;
        auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc() || end != item.data() + item.size()) throw UsageError("bad epsilon '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw UsageError("empty epsilon list");
    return out;
}

// ---- synth -----------------------------------------------------------------

struct SynthArgs {
    std::string circuit;
    std::string out;
    std::string name;
    bool drop_synthetic = false;
};

int cmd_synth(const SynthArgs& a) {
    const Circuit c = parse_qasm_file(a.circuit);
    const Topology t = synthesize_topology(c, {a.name, !a.drop_synthetic});
    for (const Diagnostic& d : validate_topology(t)) {
        std::cerr << "csyn: " << (d.severity == Severity::Error ? "error" : "warning") << ": " << d.message << '\n';
    }
    if (has_errors(validate_topology(t))) return kPipeline;
    save_topology(t, a.out);
    const auto synthetic = std::count_if(t.edges().begin(), t.edges().end(), [](const Coupler& e) { return e.synthetic; });
    std::cout << a.out << ": " << t.num_qubits() << " qubits, " << t.edges().size() << " couplers (" << synthetic
              << " synthetic)\n";
    return kOk;
}

// ---- route -----------------------------------------------------------------

struct RouteArgs {
    std::string circuit;
    std::string topology;
    std::string metrics;
    std::string qasm;
    std::string eps;
};

int cmd_route(const RouteArgs& a) {
    const Topology t = resolve_topology(a.topology);
    const std::vector<double> eps = a.eps.empty() ? std::vector<double>{} : parse_eps(a.eps);
    for (double e : eps) {
        try {
            check_noise({e, 5.0});
        } catch (const std::invalid_argument& ex) {
            throw UsageError(ex.what());
        }
    }
    const Circuit c = parse_qasm_file(a.circuit);
    const RoutingResult r = route_circuit(c, t);
    if (!verify_routing(c, r, t)) throw Error("routed circuit failed verification");

    nlohmann::ordered_json j;
    j["circuit"] = c.name();
    j["topology"] = t.name();
    j["qubits"] = c.num_qubits();
    j["depth"] = r.metrics.depth;
    j["gates"] = r.metrics.total_gates;
    j["two_qubit_gates"] = r.metrics.two_qubit_gates;
    j["swaps"] = r.metrics.swap_count;
    j["source_swaps"] = r.metrics.source_swaps;
    j["verified"] = true;
    j["final_layout"] = r.final_layout.mapping();
    if (!eps.empty()) {
        nlohmann::ordered_json f = nlohmann::ordered_json::array();
        for (double e : eps) f.push_back({{"epsilon", e}, {"fidelity", estimate_fidelity(r.metrics, {e, 5.0})}});
        j["fidelity"] = std::move(f);
    }
    const std::string body = j.dump(2) + "\n";
    if (a.metrics.empty() || a.metrics == "-") {
        std::cout << body;
    } else {
        write_file(a.metrics, body);
    }
    if (!a.qasm.empty()) write_file(a.qasm, to_qasm(r.routed));
    return kOk;
}

// ---- bench -----------------------------------------------------------------

struct BenchArgs {
    std::string qubits = "10..20";
    std::size_t seeds = 10;
    std::size_t gates = 2000;
    std::string baselines = "almaden20,cairo27,prague33,sycamore53";
    std::string eps = "0.0005,0.001,0.002,0.005";
    double factor = 5.0;
    std::vector<std::string> circuits;
    std::string out = "bench_out";
    bool save_topologies = false;
    bool serial = false;
};

void print_reductions(const BenchmarkReport& r) {
    std::cout << "qubits  baseline        pairs   depth%   gates%   swaps%\n";
    for (const Reduction& d : r.reductions) {
        char line[128];
        std::snprintf(line, sizeof line, "%6zu  %-14s %6zu %8.2f %8.2f %8.2f\n", d.qubits, d.baseline.c_str(), d.pairs,
                      d.depth_pct, d.gates_pct, d.swaps_pct);
        std::cout << line;
    }
}

int cmd_bench(const BenchArgs& a) {
    std::vector<Topology> baselines;
    for (const std::string& name : split_list(a.baselines)) baselines.push_back(resolve_topology(name));
    const std::vector<double> eps = parse_eps(a.eps);
    for (double e : eps) {
        try {
            check_noise({e, a.factor});
        } catch (const std::invalid_argument& ex) {
            throw UsageError(ex.what());
        }
    }

    std::vector<BenchmarkCase> cases;
    if (!a.circuits.empty()) {
        for (const std::string& f : a.circuits) cases.push_back({parse_qasm_file(f), std::nullopt});
    } else {
        const auto [lo, hi] = parse_range(a.qubits);
        if (lo < 2) throw UsageError("random circuits need at least 2 qubits");
        if (a.seeds == 0) throw UsageError("--seeds must be positive");
        for (std::size_t n = lo; n <= hi; ++n)
            for (std::uint64_t s = 1; s <= a.seeds; ++s) cases.push_back({gen_random_circuit(n, a.gates, s), s});
    }

    BenchmarkReport r = a.serial ? run_comparison_serial(cases, baselines, eps, a.factor)
                                 : run_comparison(cases, baselines, eps, a.factor);
    r.config.target_gates = a.circuits.empty() ? a.gates : 0;
    emit_report(r, a.out);
    if (a.save_topologies) {
        const auto dir = std::filesystem::path(a.out) / "topologies";
        std::filesystem::create_directories(dir);
        for (const BenchmarkCase& bc : cases) {
            try {
                save_topology(synthesize_topology(bc.circuit), dir / (bc.circuit.name() + ".json"));
            } catch (const DegenerateInput&) {
            }
        }
    }
    print_reductions(r);
    std::cout << r.cells.size() << " cells, " << r.skips() << " skipped, " << r.failures() << " failed; wrote "
              << (std::filesystem::path(a.out) / "report.{csv,json}").string() << '\n';
    for (const CellResult& c : r.cells) {
        if (c.status == CellStatus::Failed) std::cerr << "csyn: " << c.circuit << " on " << c.topology << ": " << c.message << '\n';
    }
    const std::size_t attempted = r.cells.size() - r.skips();
    if (r.failures() > 0 && r.failures() == attempted) return kPipeline;
    if (r.failures() > 0) return kPartial;
    return kOk;
}

// ---- gen / validate --------------------------------------------------------

struct GenArgs {
    std::size_t n = 0;
    std::size_t gates = 2000;
    std::uint64_t seed = 1;
    std::string out;
};

int cmd_gen(const GenArgs& a) {
    if (a.n < 2) throw UsageError("--n must be at least 2");
    const Circuit c = gen_random_circuit(a.n, a.gates, a.seed);
    if (a.out.empty() || a.out == "-") {
        std::cout << to_qasm(c);
    } else {
        write_file(a.out, to_qasm(c));
    }
    return kOk;
}

int cmd_validate(const std::string& target) {
    Diagnostics diags;
    std::string what;
    if (is_builtin_topology(target) || std::filesystem::path(target).extension() == ".json") {
        const Topology t = is_builtin_topology(target) ? builtin_topology(target) : load_topology(target);
        diags = validate_topology(t);
        what = "topology " + t.name() + ": " + std::to_string(t.num_qubits()) + " qubits, " +
               std::to_string(t.edges().size()) + " couplers";
    } else {
        const Circuit c = parse_qasm_file(target);
        diags = validate_circuit(c);
        what = "circuit " + c.name() + ": " + std::to_string(c.num_qubits()) + " qubits, " + std::to_string(c.size()) + " gates";
    }
    for (const Diagnostic& d : diags) {
        std::cerr << target << ": " << (d.severity == Severity::Error ? "error" : "warning") << ": " << d.message << '\n';
    }
    if (has_errors(diags)) return kInput;
    std::cout << what << ", ok\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Circuit-aware coupling-map synthesis and topology comparison"};
    app.require_subcommand(1);

    SynthArgs sa;
    auto* synth = app.add_subcommand("synth", "Synthesize a coupling map for a QASM circuit");
    synth->add_option("circuit", sa.circuit, "OpenQASM 2.0 input")->required();
    synth->add_option("-o,--output", sa.out, "Topology JSON to write")->required();
    synth->add_option("--name", sa.name, "Topology name (default <circuit>_cacore)");
    synth->add_flag("--drop-synthetic", sa.drop_synthetic, "Omit zero-correlation joining couplers");

    RouteArgs ra;
    auto* route = app.add_subcommand("route", "Route a circuit on a topology and report metrics");
    route->add_option("circuit", ra.circuit, "OpenQASM 2.0 input")->required();
    route->add_option("-t,--topology", ra.topology, "Builtin name (e.g. cairo27, line(5)) or topology JSON")->required();
    route->add_option("-m,--metrics", ra.metrics, "Metrics JSON to write (default stdout)");
    route->add_option("--qasm", ra.qasm, "Also write the routed circuit as QASM");
    route->add_option("--eps", ra.eps, "Comma-separated error rates for the fidelity proxy");

    BenchArgs ba;
    auto* bench = app.add_subcommand("bench", "Compare synthesized topologies against baselines");
    bench->add_option("--qubits", ba.qubits, "Qubit range a..b for random circuits")->capture_default_str();
    bench->add_option("--seeds", ba.seeds, "Random circuits per qubit count (seeds 1..k)")->capture_default_str();
    bench->add_option("--gates", ba.gates, "Target gate count of random circuits")->capture_default_str();
    bench->add_option("--baselines", ba.baselines, "Comma-separated builtin names or JSON files")->capture_default_str();
    bench->add_option("--eps", ba.eps, "Comma-separated one-qubit error rates")->capture_default_str();
    bench->add_option("--factor", ba.factor, "Two-qubit error multiplier")->capture_default_str();
    bench->add_option("--circuit", ba.circuits, "QASM files to use instead of random circuits");
    bench->add_option("-o,--output", ba.out, "Output directory")->capture_default_str();
    bench->add_flag("--save-topologies", ba.save_topologies, "Also write every synthesized topology");
    bench->add_flag("--serial", ba.serial, "Use the single-threaded driver");

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "Write a seeded random circuit as QASM");
    gen->add_option("-n,--n", ga.n, "Qubits")->required();
    gen->add_option("--gates", ga.gates, "Minimum gate count")->capture_default_str();
    gen->add_option("--seed", ga.seed, "Seed")->capture_default_str();
    gen->add_option("-o,--output", ga.out, "QASM file to write (default stdout)");

    std::string vtarget;
    auto* validate = app.add_subcommand("validate", "Check a topology (JSON or builtin name) or a QASM circuit");
    validate->add_option("target", vtarget, "File or builtin topology name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (*synth) return cmd_synth(sa);
        if (*route) return cmd_route(ra);
        if (*bench) return cmd_bench(ba);
        if (*gen) return cmd_gen(ga);
        return cmd_validate(vtarget);
    } catch (const UsageError& e) {
        std::cerr << "csyn: usage: " << e.what() << '\n';
        return kUsage;
    } catch (const csyn::UnknownTopology& e) {
        std::cerr << "csyn: usage: " << e.what() << '\n';
        return kUsage;
    } catch (const csyn::ParseError& e) {
        std::cerr << "csyn: input: " << e.what() << '\n';
        return kInput;
    } catch (const csyn::IOError& e) {
        std::cerr << "csyn: io: " << e.what() << '\n';
        return kInput;
    } catch (const csyn::FormatError& e) {
        std::cerr << "csyn: input: " << e.what() << '\n';
        return kInput;
    } catch (const std::exception& e) {
        std::cerr << "csyn: error: " << e.what() << '\n';
        return kPipeline;
    }
}
