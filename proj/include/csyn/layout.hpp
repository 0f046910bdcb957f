// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "csyn/analysis.hpp"
#include "csyn/circuit.hpp"
#include "csyn/topology.hpp"

namespace csyn {

struct PathEdge {
    Qubit u = 0;  ///< u < v
    Qubit v = 0;
    Weight weight = 0;
    bool synthetic = false;

    friend bool operator==(const PathEdge&, const PathEdge&) = default;
};

/// Degree-bounded (<= 2) weighted graph; a union of simple paths once built
/// by generate_mwpg, a single Hamiltonian path after join_components.
class PathGraph {
public:
    PathGraph() = default;
    explicit PathGraph(std::size_t num_nodes) : nbr_(num_nodes) {}

    [[nodiscard]] std::size_t num_nodes() const noexcept { return nbr_.size(); }
    [[nodiscard]] const std::vector<PathEdge>& edges() const noexcept { return edges_; }
    [[nodiscard]] std::size_t degree(Qubit q) const noexcept { return nbr_[q].count; }
    [[nodiscard]] std::vector<Qubit> neighbors(Qubit q) const;
    [[nodiscard]] bool has_edge(Qubit a, Qubit b) const noexcept;

    /// Throws std::logic_error if either endpoint already has two edges.
    void add_edge(Qubit a, Qubit b, Weight w, bool synthetic = false);

    /// Node sets of the connected pieces, each listed in walk order from its
    /// smaller endpoint; pieces ordered by smallest member. Requires acyclicity.
    [[nodiscard]] std::vector<std::vector<Qubit>> pieces() const;
    [[nodiscard]] bool is_acyclic() const;

    friend bool operator==(const PathGraph&, const PathGraph&) = default;

private:
    struct Slots {
        std::array<Qubit, 2> at{};
        std::size_t count = 0;
        friend bool operator==(const Slots&, const Slots&) = default;
    };
    std::vector<Slots> nbr_;
    std::vector<PathEdge> edges_;
};

struct GridDims {
    std::size_t nrow = 0;
    std::size_t ncol = 0;

    friend bool operator==(const GridDims&, const GridDims&) = default;
};

/// Qubit positions on an nrow x ncol grid (the position matrix).
class GridLayout {
public:
    GridLayout() = default;
    GridLayout(GridDims dims, std::vector<Cell> pos);

    [[nodiscard]] GridDims dims() const noexcept { return dims_; }
    [[nodiscard]] std::size_t nrow() const noexcept { return dims_.nrow; }
    [[nodiscard]] std::size_t ncol() const noexcept { return dims_.ncol; }
    [[nodiscard]] const std::vector<Cell>& positions() const noexcept { return pos_; }
    [[nodiscard]] Cell position(Qubit q) const { return pos_.at(q); }
    /// Occupant of (row, col), if any; out-of-grid coordinates yield nullopt.
    [[nodiscard]] std::optional<Qubit> at(std::int64_t row, std::int64_t col) const noexcept;

private:
    GridDims dims_;
    std::vector<Cell> pos_;
    std::vector<std::optional<Qubit>> occupant_;
};

enum class EdgeKind { Path, Adjacent, Diagonal };

struct GridEdge {
    Qubit u = 0;  ///< u < v
    Qubit v = 0;
    Weight weight = 0;
    EdgeKind kind = EdgeKind::Path;
    bool synthetic = false;

    friend bool operator==(const GridEdge&, const GridEdge&) = default;
};

class GridGraph {
public:
    GridGraph() = default;
    explicit GridGraph(GridLayout layout);

    [[nodiscard]] const GridLayout& layout() const noexcept { return layout_; }
    [[nodiscard]] const std::vector<GridEdge>& edges() const noexcept { return edges_; }
    [[nodiscard]] bool has_edge(Qubit a, Qubit b) const noexcept;
    /// Adds the edge unless the pair is already present; returns whether it was added.
    bool add(GridEdge e);
    /// Removes every edge for which `drop` returns true.
    void remove_if(const std::function<bool(const GridEdge&)>& drop);

private:
    GridLayout layout_;
    std::vector<GridEdge> edges_;
    std::vector<bool> present_;  // n x n adjacency bits
};

/// Checkerboard split of diagonal edges by the unit cell they span.
struct DiagonalPartition {
    std::vector<GridEdge> g1;  ///< cells with (row + col) even
    std::vector<GridEdge> g2;  ///< cells with (row + col) odd
    std::uint64_t g1_weight = 0;
    std::uint64_t g2_weight = 0;
};

/// Top-left corner of the unit cell spanned by a diagonal between a and b.
[[nodiscard]] Cell diagonal_cell(Cell a, Cell b) noexcept;

/// Greedy max-weight path forest: edges scanned by weight descending, ties
/// by (u, v) ascending; an edge is kept iff both endpoints have degree < 2
/// and it closes no cycle.
[[nodiscard]] PathGraph generate_mwpg(const InteractionGraph& ig, const CorrelationMatrix& m);

/// Chains the path pieces into one Hamiltonian path with weight-0 synthetic
/// edges. Pieces are joined in order of their smallest member, each time
/// linking the smallest free endpoint of the chain so far to the smallest
/// free endpoint of the next piece.
[[nodiscard]] PathGraph join_components(PathGraph p);

/// ncol = ceil(sqrt(n)), nrow = ceil(n / ncol). Throws DegenerateInput for n == 0.
[[nodiscard]] GridDims choose_grid_dims(std::size_t n);

/// Lays the path out serpentine (row 0 left to right, row 1 right to left,
/// ...), starting from the endpoint with the smaller index.
/// Throws DegenerateInput if the path is disconnected or does not fit.
[[nodiscard]] GridLayout place_on_grid(const PathGraph& p, GridDims dims);

/// Seeds the grid graph with the path edges and adds correlated
/// horizontal/vertical neighbors.
[[nodiscard]] GridGraph connect_adjacent(GridLayout layout, const PathGraph& p, const CorrelationMatrix& m);

/// Adds correlated lower-left and lower-right diagonal neighbors.
[[nodiscard]] GridGraph connect_diagonals(GridGraph g, const CorrelationMatrix& m);

[[nodiscard]] DiagonalPartition partition_diagonals(const GridGraph& g);

/// Drops every diagonal of the lighter group (G2 on a tie).
[[nodiscard]] GridGraph prune_diagonals(GridGraph g, const DiagonalPartition& part);

[[nodiscard]] Topology to_topology(const GridGraph& g, std::string name, bool keep_synthetic = true);

struct SynthesisOptions {
    std::string name;  ///< topology name; defaults to "<circuit>_cacore"
    /// Keep zero-correlation joining couplers. Dropping them can disconnect
    /// qubits that interact in the circuit.
    bool keep_synthetic = true;
};

/// Every intermediate of the pipeline, for inspection and testing.
struct SynthesisResult {
    CorrelationMatrix correlation;
    InteractionGraph interaction;
    PathGraph mwpg;
    PathGraph path;
    GridGraph unpruned;
    DiagonalPartition partition;
    GridGraph grid;
    Topology topology;
};

[[nodiscard]] SynthesisResult synthesize(const Circuit& c, const SynthesisOptions& opts = {});
[[nodiscard]] Topology synthesize_topology(const Circuit& c, const SynthesisOptions& opts = {});

}  // namespace csyn
