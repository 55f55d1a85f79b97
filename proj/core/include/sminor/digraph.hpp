#pragma once

#include <sminor/vertex_set.hpp>

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sminor {

/// Raised for malformed graphs and violated preconditions on graph inputs.
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Edge {
    Vertex from = 0;
    Vertex to = 0;

    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Simple loop-free digraph on vertices [0, n). Digons are allowed.
///
/// Adjacency is stored as out- and in-neighbourhood bit vectors, so the
/// structure is cheap to query and to restrict to vertex subsets. Once built
/// it is never mutated by any algorithm in the library.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(std::size_t n);
    Digraph(std::size_t n, std::span<const Edge> edges);

    [[nodiscard]] std::size_t size() const { return out_.size(); }
    [[nodiscard]] std::size_t edge_count() const { return edge_count_; }

    /// Throws GraphError on loops, duplicates and out-of-range endpoints.
    void add_edge(Vertex u, Vertex v);

    [[nodiscard]] bool has_edge(Vertex u, Vertex v) const { return out_[u].contains(v); }
    [[nodiscard]] const VertexSet & out(Vertex v) const { return out_[v]; }
    [[nodiscard]] const VertexSet & in(Vertex v) const { return in_[v]; }

    [[nodiscard]] std::size_t out_degree(Vertex v) const { return out_[v].size(); }
    [[nodiscard]] std::size_t in_degree(Vertex v) const { return in_[v].size(); }
    [[nodiscard]] std::size_t out_degree(Vertex v, const VertexSet & within) const;
    [[nodiscard]] std::size_t in_degree(Vertex v, const VertexSet & within) const;

    /// Minimum out-degree over `within` of the subdigraph induced by `within`.
    [[nodiscard]] std::size_t min_out_degree(const VertexSet & within) const;
    [[nodiscard]] std::size_t min_out_degree() const { return min_out_degree(vertices()); }

    [[nodiscard]] VertexSet vertices() const { return VertexSet::full(size()); }
    [[nodiscard]] VertexSet empty_set() const { return VertexSet(size()); }

    /// All edges in lexicographic order.
    [[nodiscard]] std::vector<Edge> edges() const;

    /// True when every unordered pair carries exactly one orientation.
    [[nodiscard]] bool is_tournament() const;
    [[nodiscard]] bool has_digon() const;

    /// Union of out-neighbourhoods of `s`, and of in-neighbourhoods.
    [[nodiscard]] VertexSet out_of(const VertexSet & s) const;
    [[nodiscard]] VertexSet in_of(const VertexSet & s) const;

    /// True when some edge goes from a vertex of `a` to a vertex of `b`.
    [[nodiscard]] bool has_edge_between(const VertexSet & a, const VertexSet & b) const;

    friend bool operator==(const Digraph & a, const Digraph & b) { return a.out_ == b.out_; }

private:
    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;
    std::size_t edge_count_ = 0;
};

/// A subdigraph relabelled to [0, k) together with the map back to the
/// parent's vertex ids (`original[i]` is the parent id of vertex i).
struct InducedSubgraph {
    Digraph graph;
    std::vector<Vertex> original;

    [[nodiscard]] VertexSet lift(const VertexSet & local, std::size_t parent_size) const;
    [[nodiscard]] std::vector<Vertex> lift(const std::vector<Vertex> & local) const;
};

[[nodiscard]] InducedSubgraph induced_subgraph(const Digraph & d, const VertexSet & keep);

/// Tournament wrapper: validated once on construction.
class Tournament {
public:
    Tournament() = default;
    explicit Tournament(Digraph d);

    [[nodiscard]] const Digraph & graph() const { return graph_; }
    [[nodiscard]] std::size_t size() const { return graph_.size(); }
    operator const Digraph &() const { return graph_; } // NOLINT(google-explicit-constructor)

private:
    Digraph graph_;
};

} // namespace sminor
