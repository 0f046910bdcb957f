// SPDX-License-Identifier: Apache-2.0
#include "csyn/topology.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "csyn/errors.hpp"
#include "json.hpp"

#ifndef CSYN_DATA_DIR
#define CSYN_DATA_DIR "data/topologies"
#endif

namespace csyn {

using nlohmann::json;

Topology::Topology(std::string name, std::size_t num_qubits, std::vector<Coupler> edges,
                   std::optional<std::vector<Cell>> positions, std::string provenance)
    : name_(std::move(name)),
      num_qubits_(num_qubits),
      edges_(std::move(edges)),
      positions_(std::move(positions)),
      provenance_(std::move(provenance)) {
    for (Coupler& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::stable_sort(edges_.begin(), edges_.end(),
                     [](const Coupler& a, const Coupler& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
}

bool Topology::has_edge(Qubit a, Qubit b) const noexcept {
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{a, b},
                               [](const Coupler& e, const std::pair<Qubit, Qubit>& k) {
                                   return std::tie(e.u, e.v) < std::tie(k.first, k.second);
                               });
    return it != edges_.end() && it->u == a && it->v == b;
}

std::vector<std::vector<Qubit>> Topology::adjacency() const {
    std::vector<std::vector<Qubit>> adj(num_qubits_);
    for (const Coupler& e : edges_) {
        if (e.u >= num_qubits_ || e.v >= num_qubits_ || e.u == e.v) continue;
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& list : adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return adj;
}

std::vector<std::size_t> Topology::components() const {
    const auto adj = adjacency();
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> comp(num_qubits_, unset);
    std::size_t next = 0;
    std::vector<Qubit> stack;
    for (Qubit s = 0; s < num_qubits_; ++s) {
        if (comp[s] != unset) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const Qubit q = stack.back();
            stack.pop_back();
            for (Qubit r : adj[q]) {
                if (comp[r] == unset) {
                    comp[r] = next;
                    stack.push_back(r);
                }
            }
        }
        ++next;
    }
    return comp;
}

Topology Topology::renamed(std::string name) const {
    Topology t = *this;
    t.name_ = std::move(name);
    return t;
}

Topology Topology::with_edge(Qubit a, Qubit b) const {
    auto edges = edges_;
    edges.push_back({a, b, false});
    return Topology(name_, num_qubits_, std::move(edges), positions_, provenance_);
}

Topology Topology::without_synthetic() const {
    std::vector<Coupler> kept;
    std::copy_if(edges_.begin(), edges_.end(), std::back_inserter(kept), [](const Coupler& e) { return !e.synthetic; });
    return Topology(name_, num_qubits_, std::move(kept), positions_, provenance_);
}

Diagnostics validate_topology(const Topology& t) {
    Diagnostics out;
    auto error = [&](std::string msg) { out.push_back({Severity::Error, std::move(msg)}); };
    auto pair_str = [](Qubit a, Qubit b) { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; };

    std::set<std::pair<Qubit, Qubit>> seen;
    for (const Coupler& e : t.edges()) {
        if (e.u == e.v) error("self-edge " + pair_str(e.u, e.v));
        if (e.u >= t.num_qubits() || e.v >= t.num_qubits()) {
            error("edge " + pair_str(e.u, e.v) + " references a qubit >= " + std::to_string(t.num_qubits()));
        }
        if (!seen.insert({e.u, e.v}).second) error("duplicate edge " + pair_str(e.u, e.v));
    }
    if (!t.positions()) return out;

    const auto& pos = *t.positions();
    if (pos.size() != t.num_qubits()) {
        error("positions list has " + std::to_string(pos.size()) + " entries for " +
              std::to_string(t.num_qubits()) + " qubits");
        return out;
    }
    std::map<Cell, Qubit> owner;
    for (Qubit q = 0; q < pos.size(); ++q) {
        auto [it, fresh] = owner.emplace(pos[q], q);
        if (!fresh) {
            error("qubits " + std::to_string(it->second) + " and " + std::to_string(q) + " share position (" +
                  std::to_string(pos[q].row) + ", " + std::to_string(pos[q].col) + ")");
        }
    }

    // Unit cell (top-left corner) spanned by each diagonal coupler.
    std::map<Cell, std::vector<std::pair<Qubit, Qubit>>> diagonal_cells;
    for (const Coupler& e : t.edges()) {
        if (e.u >= pos.size() || e.v >= pos.size()) continue;
        const Cell a = pos[e.u];
        const Cell b = pos[e.v];
        if (std::abs(a.row - b.row) == 1 && std::abs(a.col - b.col) == 1) {
            diagonal_cells[Cell{std::min(a.row, b.row), std::min(a.col, b.col)}].push_back({e.u, e.v});
        }
    }
    for (const auto& [cell, diags] : diagonal_cells) {
        for (const Cell next : {Cell{cell.row, cell.col + 1}, Cell{cell.row + 1, cell.col}}) {
            auto it = diagonal_cells.find(next);
            if (it == diagonal_cells.end()) continue;
            out.push_back({Severity::Warning, "diagonal couplers " + pair_str(diags[0].first, diags[0].second) +
                                                  " and " + pair_str(it->second[0].first, it->second[0].second) +
                                                  " occupy side-sharing cells (frequency-collision risk)"});
        }
    }
    return out;
}

std::string topology_to_json(const Topology& t) {
    std::ostringstream out;
    out << "{\n  \"name\": " << json(t.name()).dump() << ",\n";
    if (!t.provenance().empty()) out << "  \"provenance\": " << json(t.provenance()).dump() << ",\n";
    out << "  \"num_qubits\": " << t.num_qubits() << ",\n  \"edges\": [";
    for (std::size_t i = 0; i < t.edges().size(); ++i) {
        out << (i ? ", " : "") << '[' << t.edges()[i].u << ", " << t.edges()[i].v << ']';
    }
    out << ']';
    const bool any_synthetic =
        std::any_of(t.edges().begin(), t.edges().end(), [](const Coupler& e) { return e.synthetic; });
    if (any_synthetic) {
        out << ",\n  \"synthetic\": [";
        for (std::size_t i = 0; i < t.edges().size(); ++i) {
            out << (i ? ", " : "") << (t.edges()[i].synthetic ? "true" : "false");
        }
        out << ']';
    }
    if (t.positions()) {
        out << ",\n  \"positions\": [";
        const auto& pos = *t.positions();
        for (std::size_t i = 0; i < pos.size(); ++i) {
            out << (i ? ", " : "") << '[' << pos[i].row << ", " << pos[i].col << ']';
        }
        out << ']';
    }
    out << "\n}\n";
    return out.str();
}

namespace {

std::int64_t as_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw FormatError(where + ": expected an integer");
    return j.get<std::int64_t>();
}

}  // namespace

Topology topology_from_json(std::string_view text, std::string_view source) {
    const std::string src(source);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(src + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!doc.is_object()) throw FormatError(src + ": top level must be an object");
    static const std::set<std::string> known = {"name", "provenance", "num_qubits", "edges", "synthetic", "positions"};
    for (const auto& item : doc.items()) {
        if (!known.count(item.key())) throw FormatError(src + ": unknown field '" + item.key() + "'");
    }
    for (const char* field : {"name", "num_qubits", "edges"}) {
        if (!doc.contains(field)) throw FormatError(src + ": missing field '" + field + "'");
    }
    if (!doc["name"].is_string()) throw FormatError(src + ": name: expected a string");
    const std::int64_t n = as_int(doc["num_qubits"], src + ": num_qubits");
    if (n < 0) throw FormatError(src + ": num_qubits: must be non-negative");
    std::string provenance;
    if (doc.contains("provenance")) {
        if (!doc["provenance"].is_string()) throw FormatError(src + ": provenance: expected a string");
        provenance = doc["provenance"].get<std::string>();
    }

    const json& edges = doc["edges"];
    if (!edges.is_array()) throw FormatError(src + ": edges: expected an array");
    std::vector<Coupler> couplers;
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string where = src + ": edges[" + std::to_string(i) + "]";
        if (!edges[i].is_array() || edges[i].size() != 2) throw FormatError(where + ": expected [i, j]");
        const std::int64_t a = as_int(edges[i][0], where);
        const std::int64_t b = as_int(edges[i][1], where);
        const std::string pair = "[" + std::to_string(a) + ", " + std::to_string(b) + "]";
        if (a < 0 || b < 0 || a >= n || b >= n) throw FormatError(where + ": " + pair + " out of range");
        if (a >= b) throw FormatError(where + ": " + pair + " must satisfy i < j");
        if (!seen.insert({a, b}).second) throw FormatError(where + ": duplicate edge " + pair);
        couplers.push_back({static_cast<Qubit>(a), static_cast<Qubit>(b), false});
    }
    if (doc.contains("synthetic")) {
        const json& syn = doc["synthetic"];
        if (!syn.is_array() || syn.size() != couplers.size()) {
            throw FormatError(src + ": synthetic: expected " + std::to_string(couplers.size()) + " booleans");
        }
        for (std::size_t i = 0; i < syn.size(); ++i) {
            if (!syn[i].is_boolean()) throw FormatError(src + ": synthetic[" + std::to_string(i) + "]: expected a boolean");
            couplers[i].synthetic = syn[i].get<bool>();
        }
    }
    std::optional<std::vector<Cell>> positions;
    if (doc.contains("positions")) {
        const json& pj = doc["positions"];
        if (!pj.is_array() || pj.size() != static_cast<std::size_t>(n)) {
            throw FormatError(src + ": positions: expected " + std::to_string(n) + " [row, col] pairs");
        }
        positions.emplace();
        std::set<Cell> used;
        for (std::size_t i = 0; i < pj.size(); ++i) {
            const std::string where = src + ": positions[" + std::to_string(i) + "]";
            if (!pj[i].is_array() || pj[i].size() != 2) throw FormatError(where + ": expected [row, col]");
            const Cell c{static_cast<std::int32_t>(as_int(pj[i][0], where)),
                         static_cast<std::int32_t>(as_int(pj[i][1], where))};
            if (!used.insert(c).second) throw FormatError(where + ": position already taken");
            positions->push_back(c);
        }
    }
    return Topology(doc["name"].get<std::string>(), static_cast<std::size_t>(n), std::move(couplers),
                    std::move(positions), std::move(provenance));
}

void save_topology(const Topology& t, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IOError("cannot write " + path.string());
    out << topology_to_json(t);
    if (!out.flush()) throw IOError("failed writing " + path.string());
}

Topology load_topology(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IOError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return topology_from_json(ss.str(), path.string());
}

Topology line_topology(std::size_t n) {
    std::vector<Coupler> edges;
    std::vector<Cell> pos;
    for (std::size_t i = 0; i < n; ++i) {
        pos.push_back({0, static_cast<std::int32_t>(i)});
        if (i + 1 < n) edges.push_back({static_cast<Qubit>(i), static_cast<Qubit>(i + 1), false});
    }
    return Topology("line(" + std::to_string(n) + ")", n, std::move(edges), std::move(pos));
}

Topology grid_topology(std::size_t nrow, std::size_t ncol) {
    std::vector<Coupler> edges;
    std::vector<Cell> pos;
    auto id = [ncol](std::size_t r, std::size_t c) { return static_cast<Qubit>(r * ncol + c); };
    for (std::size_t r = 0; r < nrow; ++r) {
        for (std::size_t c = 0; c < ncol; ++c) {
            pos.push_back({static_cast<std::int32_t>(r), static_cast<std::int32_t>(c)});
            if (c + 1 < ncol) edges.push_back({id(r, c), id(r, c + 1), false});
            if (r + 1 < nrow) edges.push_back({id(r, c), id(r + 1, c), false});
        }
    }
    return Topology("grid(" + std::to_string(nrow) + "," + std::to_string(ncol) + ")", nrow * ncol, std::move(edges),
                    std::move(pos));
}

Topology half_sycamore24() {
    // Rows are staggered: even rows lean right, odd rows lean left.
    constexpr std::size_t rows = 6;
    constexpr std::size_t cols = 4;
    std::vector<Coupler> edges;
    auto id = [](std::size_t r, std::size_t c) { return static_cast<Qubit>(r * cols + c); };
    for (std::size_t r = 0; r + 1 < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            edges.push_back({id(r, c), id(r + 1, c), false});
            if (r % 2 == 0 && c + 1 < cols) edges.push_back({id(r, c), id(r + 1, c + 1), false});
            if (r % 2 == 1 && c > 0) edges.push_back({id(r, c), id(r + 1, c - 1), false});
        }
    }
    return Topology("half_sycamore24", rows * cols, std::move(edges), std::nullopt,
                    "6x4 staggered Sycamore-pattern patch, all couplers enabled; generated");
}

std::filesystem::path topology_data_dir() {
    if (const char* env = std::getenv("CSYN_DATA_DIR"); env && *env) return env;
    return CSYN_DATA_DIR;
}

const std::vector<std::string>& device_topology_names() {
    static const std::vector<std::string> names = {"almaden20", "cairo27", "prague33", "sycamore53", "half_sycamore24"};
    return names;
}

namespace {

// Parses "name(a)" or "name(a,b)"; returns the integer arguments.
std::optional<std::vector<std::size_t>> call_args(std::string_view spec, std::string_view fn) {
    if (spec.size() < fn.size() + 2 || spec.substr(0, fn.size()) != fn || spec[fn.size()] != '(' ||
        spec.back() != ')') {
        return std::nullopt;
    }
    std::vector<std::size_t> args;
    std::string_view body = spec.substr(fn.size() + 1, spec.size() - fn.size() - 2);
    while (true) {
        const std::size_t comma = body.find(',');
        std::string_view tok = body.substr(0, comma);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string_view::npos || tok.size() > 6) {
            return std::nullopt;
        }
        args.push_back(static_cast<std::size_t>(std::stoul(std::string(tok))));
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
    }
    return args;
}

}  // namespace

bool is_builtin_topology(std::string_view spec) {
    const auto& names = device_topology_names();
    if (std::find(names.begin(), names.end(), spec) != names.end()) return true;
    if (auto a = call_args(spec, "line"); a && a->size() == 1 && (*a)[0] >= 1) return true;
    if (auto a = call_args(spec, "grid"); a && a->size() == 2 && (*a)[0] >= 1 && (*a)[1] >= 1) return true;
    return false;
}

Topology builtin_topology(std::string_view spec) {
    if (!is_builtin_topology(spec)) throw UnknownTopology("unknown topology '" + std::string(spec) + "'");
    if (spec == "half_sycamore24") return half_sycamore24();
    if (auto a = call_args(spec, "line")) return line_topology((*a)[0]);
    if (auto a = call_args(spec, "grid")) return grid_topology((*a)[0], (*a)[1]);
    const auto path = topology_data_dir() / (std::string(spec) + ".json");
    try {
        return load_topology(path);
    } catch (const IOError&) {
        throw UnknownTopology("device map for '" + std::string(spec) + "' not found at " + path.string());
    }
}

}  // namespace csyn
