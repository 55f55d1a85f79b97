#pragma once

#include <sminor/digraph.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace sminor {

/// Strongly-connected components in a topological order of the condensation:
/// every edge between distinct parts goes from an earlier part to a later one.
struct SccDecomposition {
    std::vector<VertexSet> parts;
    /// part_of[v] is the index of v's part; no_vertex for vertices outside the
    /// decomposed subset.
    std::vector<std::size_t> part_of;

    [[nodiscard]] std::size_t count() const { return parts.size(); }
    /// Union of all parts but the last (empty when strongly connected).
    [[nodiscard]] VertexSet source_set() const;
    [[nodiscard]] const VertexSet & sink_set() const { return parts.back(); }
};

/// Throws GraphError("empty") when `within` is empty.
[[nodiscard]] SccDecomposition scc_decompose(const Digraph & d, const VertexSet & within);
[[nodiscard]] SccDecomposition scc_decompose(const Digraph & d);

[[nodiscard]] bool is_strongly_connected(const Digraph & d, const VertexSet & within);
[[nodiscard]] bool is_strongly_connected(const Digraph & d);

/// Vertices of `within` reachable from `from` inside D[within] along edges
/// (Direction::out) or against them (Direction::in).
enum class Direction { out, in };

[[nodiscard]] VertexSet reachable(const Digraph & d, const VertexSet & from, const VertexSet & within,
                                  Direction dir = Direction::out);

/// Minimum vertex cut of D[within]: a smallest set X with D[within] - X not
/// strongly connected. `cut` is empty when `size` is 0 or when `size` reached
/// the cap. For complete digraphs
/// no cut exists; `complete` is set and `size` is |within| - 1.
struct VertexCut {
    std::size_t size = 0;
    VertexSet cut;
    bool complete = false;
};

/// Menger cut via vertex-split max-flow over all non-adjacent ordered pairs.
/// Flows are capped at `cap` (pass a small cap when only a threshold matters).
[[nodiscard]] VertexCut min_vertex_cut(const Digraph & d, const VertexSet & within,
                                       std::size_t cap = no_vertex);

/// |within| >= k + 1 and D[within] stays strongly connected after removing any
/// k - 1 vertices.
[[nodiscard]] bool is_k_strongly_connected(const Digraph & d, std::size_t k, const VertexSet & within);
[[nodiscard]] bool is_k_strongly_connected(const Digraph & d, std::size_t k);

/// Same predicate by removing every subset of size <= k - 1. Exponential; kept
/// as a cross-check for small instances.
[[nodiscard]] bool is_k_strongly_connected_exhaustive(const Digraph & d, std::size_t k);

struct BfsTree {
    Vertex root = 0;
    Direction direction = Direction::out;
    /// parent[w] is the next vertex towards the root; no_vertex for the root
    /// and for vertices outside the tree.
    std::vector<Vertex> parent;
    std::vector<std::size_t> layer;
    std::vector<VertexSet> layers;

    [[nodiscard]] bool contains(Vertex v) const { return layer[v] != no_vertex; }

    /// The tree path between v and the root, listed in edge direction:
    /// root..v for an out-tree and v..root for an in-tree.
    [[nodiscard]] std::vector<Vertex> path(Vertex v) const;
};

/// BFS tree of D[within] rooted at `root`, siblings visited by ascending id.
/// Throws GraphError("not strongly connected") if some vertex of `within` is
/// not reached.
[[nodiscard]] BfsTree bfs_tree(const Digraph & d, Vertex root, Direction dir, const VertexSet & within);
[[nodiscard]] BfsTree bfs_tree(const Digraph & d, Vertex root, Direction dir);

/// Shortest directed path from `from` to the nearest vertex of `targets`
/// inside D[within]; among equally near targets the lowest id wins.
/// Throws GraphError when no target is reachable.
[[nodiscard]] std::vector<Vertex> shortest_path_to_set(const Digraph & d, Vertex from, const VertexSet & targets,
                                                       const VertexSet & within);

[[nodiscard]] std::vector<Vertex> shortest_path(const Digraph & d, Vertex from, Vertex to,
                                                const VertexSet & within);
[[nodiscard]] std::vector<Vertex> shortest_path(const Digraph & d, Vertex from, Vertex to);

/// Tournament overload: additionally checks that every edge between path
/// vertices at path distance >= 2 points backwards (throws std::logic_error
/// otherwise).
[[nodiscard]] std::vector<Vertex> shortest_path(const Tournament & t, Vertex from, Vertex to,
                                                const VertexSet & within);

/// True when for all i + 2 <= j the edge x_j -> x_i is present.
[[nodiscard]] bool is_backward_closed(const Digraph & d, const std::vector<Vertex> & path);

enum class DominationMode { out, in, both };

/// out: every vertex of within - S has an in-neighbour in S; in: an
/// out-neighbour in S; both: the conjunction.
[[nodiscard]] bool dominates(const Digraph & d, const VertexSet & s, DominationMode mode,
                             const VertexSet & within);
[[nodiscard]] bool dominates(const Digraph & d, const VertexSet & s, DominationMode mode);

} // namespace sminor
