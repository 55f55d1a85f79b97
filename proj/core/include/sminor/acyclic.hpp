#pragma once

#include <sminor/digraph.hpp>

#include <optional>
#include <vector>

namespace sminor {

/// Acyclic vertex set with a topological order of the subdigraph it induces.
/// In a tournament the order is the unique transitive order.
struct AcyclicSet {
    VertexSet vertices;
    std::vector<Vertex> order;

    [[nodiscard]] Vertex source() const { return order.front(); }
    [[nodiscard]] Vertex sink() const { return order.back(); }
    [[nodiscard]] std::size_t size() const { return order.size(); }
};

/// Topological order of D[within] (smallest available id first), or nullopt
/// when D[within] has a directed cycle.
[[nodiscard]] std::optional<std::vector<Vertex>> topological_order(const Digraph & d, const VertexSet & within);

[[nodiscard]] bool is_acyclic(const Digraph & d, const VertexSet & within);

/// Position in `order` at which `c` can be inserted so every induced edge
/// points forward, or nullopt. The lowest such position is returned.
[[nodiscard]] std::optional<std::size_t> insertion_position(const Digraph & d, const std::vector<Vertex> & order,
                                                            Vertex c);

/// Insertion-maximal acyclic subset of `within`: candidates are scanned once
/// in `scan_order` (ascending ids when empty). No vertex of `within` outside
/// the result can be inserted anywhere in `order`.
[[nodiscard]] AcyclicSet maximal_acyclic_set(const Digraph & d, const VertexSet & within,
                                             const std::vector<Vertex> & scan_order = {});
[[nodiscard]] AcyclicSet maximal_acyclic_set(const Digraph & d);

/// Insertion-maximal transitive set whose sink is `sink`: no vertex of
/// `within` outside the result can be inserted strictly before the sink.
[[nodiscard]] AcyclicSet maximal_acyclic_set_with_sink(const Tournament & t, Vertex sink, const VertexSet & within);
[[nodiscard]] AcyclicSet maximal_acyclic_set_with_sink(const Tournament & t, Vertex sink);

/// Extends `base` (an acyclic order) by candidates inserted at positions
/// >= `min_position`, scanning `candidates` in ascending order.
[[nodiscard]] AcyclicSet extend_acyclic_set(const Digraph & d, std::vector<Vertex> base, const VertexSet & candidates,
                                            std::size_t min_position);

} // namespace sminor
