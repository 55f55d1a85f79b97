#pragma once

#include <sminor/digraph.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace sminor {

/// A generated digraph with one role label per vertex.
struct LabelledDigraph {
    Digraph digraph;
    std::vector<std::string> labels;
};

/// Disjoint union of H, G, D (vertex blocks in that order) plus every edge
/// H -> G, G -> D and D -> H.
[[nodiscard]] Digraph delta_compose(const Digraph & h, const Digraph & g, const Digraph & d);

/// S_1 = K_1, S_r = delta(K_1, S_{r-1}, S_{r-1}). Vertex 0 is the apex, then
/// the A copy, then the B copy. Labels: "apex", "copy-A/<label>",
/// "copy-B/<label>".
[[nodiscard]] LabelledDigraph gen_S(std::size_t r);

/// G_1 = K_1. G_{r+1}: the transitive tournament T_{r+1} (i -> j for i < j)
/// on ids 0..r, followed by one copy of G_r per edge v -> w in lexicographic
/// order, each copy vertex u getting u -> v and w -> u. Labels: "T vertex i"
/// and "copy (v,w)/<label>".
[[nodiscard]] LabelledDigraph gen_G(std::size_t r);

/// D_1 is the directed triangle 0 -> 1 -> 2 -> 0. D_{k+1}: the vertices of
/// D_k, then for each x of D_k in id order the block A_x (k + 1 vertices)
/// followed by x'. Labels: "base/<label>", "A_x of x=<x>", "x' of x=<x>".
[[nodiscard]] LabelledDigraph gen_D(std::size_t k);

/// i -> j for all i < j.
[[nodiscard]] Tournament gen_transitive(std::size_t n);

/// Pair {i, j} with i < j is visited in lexicographic order and oriented
/// i -> j iff the top bit of the next SplitMix64(seed) draw is set.
[[nodiscard]] Tournament gen_random_tournament(std::size_t n, std::uint64_t seed);

/// Ordered pair (i, j), i != j, visited in lexicographic order, kept iff the
/// next SplitMix64(seed) uniform draw is < p.
[[nodiscard]] Digraph gen_random_digraph(std::size_t n, double p, std::uint64_t seed);

/// Rotational tournament on n = 2q + 1 vertices (i -> i + 1..q mod n) with
/// vertex ids shuffled by SplitMix64(seed).
[[nodiscard]] Tournament gen_regular_tournament(std::size_t n, std::uint64_t seed);

/// Layered tournament with minimum out-degree d and `levels` cut vertices.
///
/// Blocks in id order: A_1, rho_1, A_2, rho_2, ..., A_L, rho_L, B, where
/// |A_i| = d - (i - 1) and B is a regular tournament on 2(d - L) + 1
/// vertices. With U_i the union of all blocks after rho_i: A_i -> U_i,
/// rho_i -> A_i, U_i -> rho_i. A-block internals are random.
/// Requires levels >= 1 and d >= levels.
[[nodiscard]] LabelledDigraph gen_layered(std::size_t d, std::size_t levels, std::uint64_t seed);

} // namespace sminor
