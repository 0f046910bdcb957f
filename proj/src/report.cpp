// SPDX-License-Identifier: Apache-2.0
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "csyn/bench.hpp"
#include "csyn/errors.hpp"

namespace csyn {

namespace {

using ojson = nlohmann::ordered_json;

std::string shortest(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string_view status_name(CellStatus s) {
    switch (s) {
        case CellStatus::Ok: return "ok";
        case CellStatus::Skipped: return "skipped";
        case CellStatus::Failed: return "failed";
    }
    return "ok";
}

CellStatus parse_status(const std::string& s) {
    if (s == "ok") return CellStatus::Ok;
    if (s == "skipped") return CellStatus::Skipped;
    if (s == "failed") return CellStatus::Failed;
    throw FormatError("unknown cell status '" + s + "'");
}

}  // namespace

std::string report_to_csv(const BenchmarkReport& r) {
    std::ostringstream out;
    out << "circuit,seed,qubits,topology,depth,gates,swaps";
    for (double e : r.config.epsilons) out << ",fidelity@" << shortest(e);
    out << '\n';
    for (const CellResult& c : r.cells) {
        if (c.status == CellStatus::Skipped) continue;
        out << csv_field(c.circuit) << ',' << (c.seed ? std::to_string(*c.seed) : "") << ',' << c.qubits << ','
            << csv_field(c.topology);
        if (c.status == CellStatus::Failed) {
            // failed cells keep their row so the row count stays predictable
            out << ",,,";
            for (std::size_t e = 0; e < r.config.epsilons.size(); ++e) out << ',';
        } else {
            out << ',' << c.metrics.depth << ',' << c.metrics.total_gates << ',' << c.metrics.swap_count;
            for (double f : c.fidelity) out << ',' << shortest(f);
        }
        out << '\n';
    }
    return out.str();
}

std::string report_to_json(const BenchmarkReport& r) {
    ojson doc;
    ojson cfg;
    cfg["epsilons"] = r.config.epsilons;
    cfg["two_qubit_factor"] = r.config.two_qubit_factor;
    cfg["baselines"] = r.config.baselines;
    cfg["target_gates"] = r.config.target_gates;
    doc["config"] = std::move(cfg);

    ojson cells = ojson::array();
    for (const CellResult& c : r.cells) {
        ojson j;
        j["circuit"] = c.circuit;
        j["seed"] = c.seed ? ojson(*c.seed) : ojson(nullptr);
        j["qubits"] = c.qubits;
        j["topology"] = c.topology;
        j["status"] = status_name(c.status);
        j["message"] = c.message;
        j["depth"] = c.metrics.depth;
        j["gates"] = c.metrics.total_gates;
        j["two_qubit_gates"] = c.metrics.two_qubit_gates;
        j["swaps"] = c.metrics.swap_count;
        j["source_swaps"] = c.metrics.source_swaps;
        j["fidelity"] = c.fidelity;
        cells.push_back(std::move(j));
    }
    doc["cells"] = std::move(cells);

    ojson sums = ojson::array();
    for (const TopologySummary& s : r.summaries) {
        sums.push_back(ojson{{"qubits", s.qubits}, {"topology", s.topology}, {"samples", s.samples},
                             {"depth", s.depth}, {"gates", s.gates}, {"swaps", s.swaps}, {"fidelity", s.fidelity}});
    }
    doc["summaries"] = std::move(sums);

    ojson reds = ojson::array();
    for (const Reduction& d : r.reductions) {
        reds.push_back(ojson{{"qubits", d.qubits},
                             {"baseline", d.baseline},
                             {"pairs", d.pairs},
                             {"depth_pct", d.depth_pct},
                             {"gates_pct", d.gates_pct},
                             {"swaps_pct", d.swaps_pct},
                             {"fidelity_pct", d.fidelity_pct}});
    }
    doc["reductions"] = std::move(reds);
    return doc.dump(2) + "\n";
}

BenchmarkReport report_from_json(std::string_view text) {
    BenchmarkReport r;
    try {
        const ojson doc = ojson::parse(text);
        const ojson& cfg = doc.at("config");
        r.config.epsilons = cfg.at("epsilons").get<std::vector<double>>();
        r.config.two_qubit_factor = cfg.at("two_qubit_factor").get<double>();
        r.config.baselines = cfg.at("baselines").get<std::vector<std::string>>();
        r.config.target_gates = cfg.at("target_gates").get<std::size_t>();
        for (const ojson& j : doc.at("cells")) {
            CellResult c;
            c.circuit = j.at("circuit").get<std::string>();
            if (!j.at("seed").is_null()) c.seed = j.at("seed").get<std::uint64_t>();
            c.qubits = j.at("qubits").get<std::size_t>();
            c.topology = j.at("topology").get<std::string>();
            c.status = parse_status(j.at("status").get<std::string>());
            c.message = j.at("message").get<std::string>();
            c.metrics.depth = j.at("depth").get<std::size_t>();
            c.metrics.total_gates = j.at("gates").get<std::size_t>();
            c.metrics.two_qubit_gates = j.at("two_qubit_gates").get<std::size_t>();
            c.metrics.swap_count = j.at("swaps").get<std::size_t>();
            c.metrics.source_swaps = j.at("source_swaps").get<std::size_t>();
            c.fidelity = j.at("fidelity").get<std::vector<double>>();
            r.cells.push_back(std::move(c));
        }
        for (const ojson& j : doc.at("summaries")) {
            TopologySummary s;
            s.qubits = j.at("qubits").get<std::size_t>();
            s.topology = j.at("topology").get<std::string>();
            s.samples = j.at("samples").get<std::size_t>();
            s.depth = j.at("depth").get<double>();
            s.gates = j.at("gates").get<double>();
            s.swaps = j.at("swaps").get<double>();
            s.fidelity = j.at("fidelity").get<std::vector<double>>();
            r.summaries.push_back(std::move(s));
        }
        for (const ojson& j : doc.at("reductions")) {
            Reduction d;
            d.qubits = j.at("qubits").get<std::size_t>();
            d.baseline = j.at("baseline").get<std::string>();
            d.pairs = j.at("pairs").get<std::size_t>();
            d.depth_pct = j.at("depth_pct").get<double>();
            d.gates_pct = j.at("gates_pct").get<double>();
            d.swaps_pct = j.at("swaps_pct").get<double>();
            d.fidelity_pct = j.at("fidelity_pct").get<std::vector<double>>();
            r.reductions.push_back(std::move(d));
        }
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("report: ") + e.what());
    }
    return r;
}

void emit_report(const BenchmarkReport& r, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IOError("cannot create " + dir.string() + ": " + ec.message());
    auto write = [](const std::filesystem::path& p, const std::string& body) {
        std::ofstream out(p, std::ios::binary);
        if (!out) throw IOError("cannot write " + p.string());
        out << body;
        if (!out.flush()) throw IOError("write failed: " + p.string());
    };
    write(dir / "report.csv", report_to_csv(r));
    write(dir / "report.json", report_to_json(r));
}

}  // namespace csyn
