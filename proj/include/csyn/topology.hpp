// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csyn/circuit.hpp"
#include "csyn/diagnostic.hpp"

namespace csyn {

/// Grid coordinate of a physical qubit.
struct Cell {
    std::int32_t row = 0;
    std::int32_t col = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct Coupler {
    Qubit u = 0;  ///< u < v after canonicalization
    Qubit v = 0;
    bool synthetic = false;  ///< joins otherwise uncorrelated path pieces

    friend bool operator==(const Coupler&, const Coupler&) = default;
};

/// Physical coupling map: qubits, undirected couplers, optional grid positions.
///
/// The constructor only canonicalizes (u < v, edges sorted); invariants are
/// checked by validate_topology.
class Topology {
public:
    Topology() = default;
    Topology(std::string name, std::size_t num_qubits, std::vector<Coupler> edges,
             std::optional<std::vector<Cell>> positions = std::nullopt, std::string provenance = {});

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] const std::vector<Coupler>& edges() const noexcept { return edges_; }
    [[nodiscard]] const std::optional<std::vector<Cell>>& positions() const noexcept { return positions_; }
    /// Free-text origin note carried by bundled device files.
    [[nodiscard]] const std::string& provenance() const noexcept { return provenance_; }

    [[nodiscard]] bool has_edge(Qubit a, Qubit b) const noexcept;
    /// Neighbor lists, each sorted ascending.
    [[nodiscard]] std::vector<std::vector<Qubit>> adjacency() const;
    /// Connected-component id per qubit (ids in order of smallest member).
    [[nodiscard]] std::vector<std::size_t> components() const;

    [[nodiscard]] Topology renamed(std::string name) const;
    /// Copy with one extra coupler; used for monotonicity experiments.
    [[nodiscard]] Topology with_edge(Qubit a, Qubit b) const;
    /// Copy without synthetic couplers.
    [[nodiscard]] Topology without_synthetic() const;

    friend bool operator==(const Topology&, const Topology&) = default;

private:
    std::string name_;
    std::size_t num_qubits_ = 0;
    std::vector<Coupler> edges_;
    std::optional<std::vector<Cell>> positions_;
    std::string provenance_;
};

/// Errors for broken invariants; warnings for diagonal couplers that sit in
/// side-sharing unit cells (frequency-collision risk), when positions exist.
[[nodiscard]] Diagnostics validate_topology(const Topology& t);

/// Canonical JSON text: name, [provenance], num_qubits, edges, [synthetic], [positions].
[[nodiscard]] std::string topology_to_json(const Topology& t);
/// Throws FormatError naming the offending location (`source` prefixes messages).
[[nodiscard]] Topology topology_from_json(std::string_view text, std::string_view source = "<json>");

void save_topology(const Topology& t, const std::filesystem::path& path);
[[nodiscard]] Topology load_topology(const std::filesystem::path& path);

[[nodiscard]] Topology line_topology(std::size_t n);
[[nodiscard]] Topology grid_topology(std::size_t nrow, std::size_t ncol);
/// 6x4 Sycamore-pattern patch with every coupler enabled.
[[nodiscard]] Topology half_sycamore24();

/// Resolves `almaden20`, `cairo27`, `prague33`, `sycamore53`, `half_sycamore24`,
/// `line(N)` and `grid(R,C)`. Device maps are read from the bundled data
/// directory (override with the CSYN_DATA_DIR environment variable).
/// Throws UnknownTopology.
[[nodiscard]] Topology builtin_topology(std::string_view spec);
[[nodiscard]] bool is_builtin_topology(std::string_view spec);
[[nodiscard]] const std::vector<std::string>& device_topology_names();

/// Directory holding the bundled device maps.
[[nodiscard]] std::filesystem::path topology_data_dir();

}  // namespace csyn
