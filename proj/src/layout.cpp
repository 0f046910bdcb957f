// SPDX-License-Identifier: Apache-2.0
#include "csyn/layout.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "csyn/errors.hpp"

namespace csyn {

// ---------------------------------------------------------------------------
// PathGraph

std::vector<Qubit> PathGraph::neighbors(Qubit q) const {
    const Slots& s = nbr_[q];
    return {s.at.begin(), s.at.begin() + static_cast<std::ptrdiff_t>(s.count)};
}

bool PathGraph::has_edge(Qubit a, Qubit b) const noexcept {
    const Slots& s = nbr_[a];
    return (s.count > 0 && s.at[0] == b) || (s.count > 1 && s.at[1] == b);
}

void PathGraph::add_edge(Qubit a, Qubit b, Weight w, bool synthetic) {
    if (a == b) throw std::logic_error("path graph: self-loop");
    if (nbr_[a].count >= 2 || nbr_[b].count >= 2) throw std::logic_error("path graph: degree would exceed 2");
    nbr_[a].at[nbr_[a].count++] = b;
    nbr_[b].at[nbr_[b].count++] = a;
    edges_.push_back({std::min(a, b), std::max(a, b), w, synthetic});
}

bool PathGraph::is_acyclic() const {
    // A forest has exactly (nodes - components) edges.
    std::vector<Qubit> parent(num_nodes());
    std::iota(parent.begin(), parent.end(), Qubit{0});
    auto find = [&](Qubit x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const PathEdge& e : edges_) {
        const Qubit a = find(e.u);
        const Qubit b = find(e.v);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

std::vector<std::vector<Qubit>> PathGraph::pieces() const {
    if (!is_acyclic()) throw std::logic_error("path graph: contains a cycle");
    std::vector<bool> seen(num_nodes(), false);
    std::vector<std::vector<Qubit>> out;
    for (Qubit s = 0; s < num_nodes(); ++s) {
        if (seen[s]) continue;
        // Collect the piece, then walk it from its smaller endpoint.
        std::vector<Qubit> members{s};
        seen[s] = true;
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (Qubit r : neighbors(members[i])) {
                if (!seen[r]) {
                    seen[r] = true;
                    members.push_back(r);
                }
            }
        }
        Qubit start = members[0];
        bool found = false;
        for (Qubit q : members) {
            if (degree(q) < 2 && (!found || q < start)) {
                start = q;
                found = true;
            }
        }
        std::vector<Qubit> walk{start};
        Qubit prev = start;
        Qubit cur = start;
        while (walk.size() < members.size()) {
            const auto nb = neighbors(cur);
            const Qubit next = (nb[0] != prev || cur == start) ? nb[0] : nb[1];
            prev = cur;
            cur = next;
            walk.push_back(cur);
        }
        out.push_back(std::move(walk));
    }
    return out;
}

// ---------------------------------------------------------------------------
// GridLayout / GridGraph

GridLayout::GridLayout(GridDims dims, std::vector<Cell> pos)
    : dims_(dims), pos_(std::move(pos)), occupant_(dims.nrow * dims.ncol) {
    for (Qubit q = 0; q < pos_.size(); ++q) {
        const Cell c = pos_[q];
        if (c.row < 0 || c.col < 0 || static_cast<std::size_t>(c.row) >= dims_.nrow ||
            static_cast<std::size_t>(c.col) >= dims_.ncol) {
            throw DegenerateInput("qubit " + std::to_string(q) + " placed outside the grid");
        }
        auto& slot = occupant_[static_cast<std::size_t>(c.row) * dims_.ncol + static_cast<std::size_t>(c.col)];
        if (slot) throw DegenerateInput("two qubits placed on the same cell");
        slot = q;
    }
}

std::optional<Qubit> GridLayout::at(std::int64_t row, std::int64_t col) const noexcept {
    if (row < 0 || col < 0 || static_cast<std::size_t>(row) >= dims_.nrow ||
        static_cast<std::size_t>(col) >= dims_.ncol) {
        return std::nullopt;
    }
    return occupant_[static_cast<std::size_t>(row) * dims_.ncol + static_cast<std::size_t>(col)];
}

GridGraph::GridGraph(GridLayout layout)
    : layout_(std::move(layout)), present_(layout_.positions().size() * layout_.positions().size(), false) {}

bool GridGraph::has_edge(Qubit a, Qubit b) const noexcept {
    return present_[static_cast<std::size_t>(a) * layout_.positions().size() + b];
}

bool GridGraph::add(GridEdge e) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (has_edge(e.u, e.v)) return false;
    const std::size_t n = layout_.positions().size();
    present_[e.u * n + e.v] = present_[e.v * n + e.u] = true;
    edges_.push_back(e);
    return true;
}

void GridGraph::remove_if(const std::function<bool(const GridEdge&)>& drop) {
    const std::size_t n = layout_.positions().size();
    std::erase_if(edges_, [&](const GridEdge& e) {
        if (!drop(e)) return false;
        present_[e.u * n + e.v] = present_[e.v * n + e.u] = false;
        return true;
    });
}

Cell diagonal_cell(Cell a, Cell b) noexcept {
    return {std::min(a.row, b.row), std::min(a.col, b.col)};
}

// ---------------------------------------------------------------------------
// Pipeline steps

PathGraph generate_mwpg(const InteractionGraph& ig, const CorrelationMatrix& m) {
    std::vector<WeightedEdge> order = ig.edges;
    std::sort(order.begin(), order.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });

    PathGraph path(ig.num_nodes);
    std::vector<Qubit> parent(ig.num_nodes);
    std::iota(parent.begin(), parent.end(), Qubit{0});
    auto find = [&](Qubit x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    for (const WeightedEdge& e : order) {
        if (path.degree(e.u) >= 2 || path.degree(e.v) >= 2) continue;
        const Qubit ru = find(e.u);
        const Qubit rv = find(e.v);
        if (ru == rv) continue;  // would close a loop
        parent[ru] = rv;
        path.add_edge(e.u, e.v, m.weight(e.u, e.v));
    }
    return path;
}

PathGraph join_components(PathGraph p) {
    auto pieces = p.pieces();
    if (pieces.size() <= 1) return p;
    std::vector<Qubit> chain = std::move(pieces[0]);
    for (std::size_t k = 1; k < pieces.size(); ++k) {
        std::vector<Qubit>& next = pieces[k];
        const Qubit a = std::min(chain.front(), chain.back());
        const Qubit b = next.front();  // pieces walk from their smaller endpoint
        p.add_edge(a, b, 0, true);
        if (a == chain.back()) {
            chain.insert(chain.end(), next.begin(), next.end());
        } else {
            std::reverse(next.begin(), next.end());
            next.insert(next.end(), chain.begin(), chain.end());
            chain = std::move(next);
        }
    }
    return p;
}

GridDims choose_grid_dims(std::size_t n) {
    if (n == 0) throw DegenerateInput("cannot size a grid for zero qubits");
    auto ncol = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    while (ncol * ncol < n) ++ncol;
    while (ncol > 1 && (ncol - 1) * (ncol - 1) >= n) --ncol;
    return {(n + ncol - 1) / ncol, ncol};
}

GridLayout place_on_grid(const PathGraph& p, GridDims dims) {
    const std::size_t n = p.num_nodes();
    if (n == 0) throw DegenerateInput("cannot place an empty path");
    if (n > dims.nrow * dims.ncol) {
        throw DegenerateInput(std::to_string(n) + " qubits do not fit a " + std::to_string(dims.nrow) + "x" +
                              std::to_string(dims.ncol) + " grid");
    }
    const auto pieces = p.pieces();
    if (pieces.size() != 1) throw DegenerateInput("path graph is not connected");

    std::vector<Cell> pos(n);
    const auto& walk = pieces[0];
    for (std::size_t i = 0; i < walk.size(); ++i) {
        const std::size_t r = i / dims.ncol;
        const std::size_t k = i % dims.ncol;
        const std::size_t c = (r % 2 == 0) ? k : dims.ncol - 1 - k;
        pos[walk[i]] = Cell{static_cast<std::int32_t>(r), static_cast<std::int32_t>(c)};
    }
    return GridLayout(dims, std::move(pos));
}

GridGraph connect_adjacent(GridLayout layout, const PathGraph& p, const CorrelationMatrix& m) {
    GridGraph g(std::move(layout));
    for (const PathEdge& e : p.edges()) {
        g.add({e.u, e.v, m.weight(e.u, e.v), EdgeKind::Path, e.synthetic});
    }
    const GridLayout& grid = g.layout();
    const auto nrow = static_cast<std::int64_t>(grid.nrow());
    const auto ncol = static_cast<std::int64_t>(grid.ncol());
    auto link = [&](std::optional<Qubit> a, std::optional<Qubit> b) {
        if (a && b && m.has_edge(*a, *b)) g.add({*a, *b, m.weight(*a, *b), EdgeKind::Adjacent, false});
    };
    // vertical neighbors, then horizontal ones
    for (std::int64_t r = 0; r + 1 < nrow; ++r) {
        for (std::int64_t c = 0; c < ncol; ++c) link(grid.at(r, c), grid.at(r + 1, c));
    }
    for (std::int64_t r = 0; r < nrow; ++r) {
        for (std::int64_t c = 0; c + 1 < ncol; ++c) link(grid.at(r, c), grid.at(r, c + 1));
    }
    return g;
}

GridGraph connect_diagonals(GridGraph g, const CorrelationMatrix& m) {
    const GridLayout grid = g.layout();
    const auto nrow = static_cast<std::int64_t>(grid.nrow());
    const auto ncol = static_cast<std::int64_t>(grid.ncol());
    for (std::int64_t r = 0; r + 1 < nrow; ++r) {
        for (std::int64_t c = 0; c < ncol; ++c) {
            const auto n1 = grid.at(r, c);
            if (!n1) continue;
            for (const std::int64_t dc : {-1, 1}) {
                const auto n2 = grid.at(r + 1, c + dc);
                if (n2 && m.has_edge(*n1, *n2)) {
                    g.add({*n1, *n2, m.weight(*n1, *n2), EdgeKind::Diagonal, false});
                }
            }
        }
    }
    return g;
}

DiagonalPartition partition_diagonals(const GridGraph& g) {
    DiagonalPartition part;
    for (const GridEdge& e : g.edges()) {
        if (e.kind != EdgeKind::Diagonal) continue;
        const Cell cell = diagonal_cell(g.layout().position(e.u), g.layout().position(e.v));
        if ((cell.row + cell.col) % 2 == 0) {
            part.g1.push_back(e);
            part.g1_weight += e.weight;
        } else {
            part.g2.push_back(e);
            part.g2_weight += e.weight;
        }
    }
    return part;
}

GridGraph prune_diagonals(GridGraph g, const DiagonalPartition& part) {
    const auto& dropped = part.g1_weight >= part.g2_weight ? part.g2 : part.g1;
    std::set<std::pair<Qubit, Qubit>> drop;
    for (const GridEdge& e : dropped) drop.insert({e.u, e.v});
    g.remove_if([&](const GridEdge& e) { return e.kind == EdgeKind::Diagonal && drop.count({e.u, e.v}) > 0; });
    return g;
}

Topology to_topology(const GridGraph& g, std::string name, bool keep_synthetic) {
    std::vector<Coupler> couplers;
    for (const GridEdge& e : g.edges()) {
        if (e.synthetic && !keep_synthetic) continue;
        couplers.push_back({e.u, e.v, e.synthetic});
    }
    return Topology(std::move(name), g.layout().positions().size(), std::move(couplers), g.layout().positions());
}

SynthesisResult synthesize(const Circuit& c, const SynthesisOptions& opts) {
    SynthesisResult r;
    r.correlation = build_correlation(c);
    r.interaction = build_interaction_graph(r.correlation);
    r.mwpg = generate_mwpg(r.interaction, r.correlation);
    r.path = join_components(r.mwpg);
    const GridLayout layout = place_on_grid(r.path, choose_grid_dims(c.num_qubits()));
    r.unpruned = connect_diagonals(connect_adjacent(layout, r.path, r.correlation), r.correlation);
    r.partition = partition_diagonals(r.unpruned);
    r.grid = prune_diagonals(r.unpruned, r.partition);
    r.topology = to_topology(r.grid, opts.name.empty() ? c.name() + "_cacore" : opts.name, opts.keep_synthetic);
    return r;
}

Topology synthesize_topology(const Circuit& c, const SynthesisOptions& opts) {
    return synthesize(c, opts).topology;
}

}  // namespace csyn
