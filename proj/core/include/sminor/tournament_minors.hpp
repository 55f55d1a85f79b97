#pragma once

#include <sminor/acyclic.hpp>
#include <sminor/digraph.hpp>
#include <sminor/oracles.hpp>
#include <sminor/witness.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sminor {

/// Which strongly connected component of the remainder a peeling recursion
/// continues in.
enum class ComponentRule {
    largest, ///< most vertices, earliest in topological order on ties
    max_chi, ///< largest exact dichromatic number, then as `largest`
    exhaustive, ///< every component, keeping the largest resulting family
};

/// Strong minor by peeling insertion-maximal transitive sets closed by a
/// shortest return path. A component that is a single vertex ends the
/// recursion with a singleton branch set. At least ceil(chi / 3) sets when
/// the rule is max_chi or exhaustive.
[[nodiscard]] StrongMinorWitness peel_transitive_plus_path(const Tournament & t,
                                                           ComponentRule rule = ComponentRule::largest);

/// The named parts of a dominating core R = S(x) + S + V(P) + W.
struct DominatingCore {
    /// The vertex set the core was built in.
    VertexSet within;
    VertexSet R;
    Vertex x = no_vertex;
    Vertex y = no_vertex;
    AcyclicSet S_of_x;
    Vertex w_star = no_vertex;
    VertexSet F;
    /// F_1 = F+ (members of F with an out-neighbour outside F), F_{i+1} the
    /// in-neighbours of F_i among the not yet layered part of F.
    std::vector<VertexSet> F_layers;
    /// Empty when F is empty.
    AcyclicSet S;
    /// Shortest path inside F from the sink of S to F_1; empty when F is empty.
    std::vector<Vertex> P;
    std::optional<Vertex> w;
    /// Two classes: S(x) with R on odd F-layers, and W with R on even F-layers.
    Coloring two_coloring;
};

/// Strongly connected, dominating, 2-chromatic core of T[within]. Throws
/// GraphError("not strongly connected") unless T[within] is strongly
/// connected with at least 3 vertices; throws std::logic_error if a
/// constructed part violates its guarantee.
[[nodiscard]] DominatingCore dominating_core(const Tournament & t, const VertexSet & within);
[[nodiscard]] DominatingCore dominating_core(const Tournament & t);

/// Strong minor by repeatedly emitting a dominating core. At least
/// ceil(chi / 2) sets when the rule is max_chi or exhaustive.
[[nodiscard]] StrongMinorWitness strong_minor_by_domination(const Tournament & t,
                                                            ComponentRule rule = ComponentRule::largest);

/// Two-set strong minor by the triangle loop. When A_1 -> C_1 -> B_1 and
/// A_1 -> B_1 the search descends into A_1 and then into B_1. Returns nullopt
/// only when neither side yields a witness, which certifies chi(T) <= 2.
[[nodiscard]] std::optional<StrongMinorWitness> strong_k2_minor(const Tournament & t);

struct NearlyRegularSet {
    VertexSet set;
    /// true: d- <= d+ <= 4 d- on the set; false: d+ <= d- <= 4 d+.
    bool out_heavy = true;
};

/// The larger of the two ratio classes (the out-heavy one on ties). Throws
/// GraphError("below lemma regime") for fewer than 20 vertices.
[[nodiscard]] NearlyRegularSet nearly_regular_subset(const Tournament & t);

/// What remains of T[within] after deleting vertices of out-degree < d until
/// none is left.
[[nodiscard]] VertexSet out_core(const Digraph & d, const VertexSet & within, std::size_t min_out);

/// Vertex-minimal induced subtournament of T[within] with minimum out-degree
/// >= d: for each returned vertex v the d-out-core of (result - v) is empty.
/// Throws GraphError if T[within] has minimum out-degree below d.
[[nodiscard]] VertexSet minimal_outdegree_subtournament(const Tournament & t, std::size_t d,
                                                        const VertexSet & within);
[[nodiscard]] VertexSet minimal_outdegree_subtournament(const Tournament & t, std::size_t d);

/// Disjoint edges w_i -> v_i (stored as Edge{w_i, v_i}) and a set F avoiding
/// them, with |N+(v_i) & F| >= |F| - m and |N-(w_i) & F| >= |F| - d.
struct EdgeMatchingSystem {
    std::vector<Edge> S;
    VertexSet F;
    std::size_t m = 0;
    std::size_t d = 0;
    /// Matching size contributed by each round.
    std::vector<std::size_t> rounds;
};

/// Either an edge system or an m-strongly-connected subtournament.
struct EdgeSystemOutcome {
    std::optional<EdgeMatchingSystem> system;
    std::optional<VertexSet> connected;
};

/// Iterates minimal subtournament, smallest cut R, source/sink sets A and B
/// of T_k - R, low-forward-degree cut vertices R', maximum matching R' -> A,
/// until the matchings hold at least m edges. T and every T_k are first
/// tested for m-strong connectivity. Requires m >= 2 and minimum out-degree
/// >= d >= 1; throws GraphError when the degree budget d - 2 * (edges so
/// far) drops below 1 first.
[[nodiscard]] EdgeSystemOutcome extract_edge_system(const Tournament & t, std::size_t m, std::size_t d);

/// Recounts the four EdgeMatchingSystem bounds.
[[nodiscard]] Verdict verify_edge_system(const Digraph & d, const EdgeMatchingSystem & s);

struct AlgorithmConfig {
    double C0 = 24.0;
    double C_prime = 960.0;
    double c_kt = 1.0;
    /// 1600 * max(C_prime, 62 * c_kt).
    double C = 1600.0 * 960.0;
    std::size_t linkage_constant = 452;
    std::optional<std::size_t> m_override;
    std::optional<std::size_t> d_override;
    std::size_t sample_attempts = 64;
    std::uint64_t node_budget = 2'000'000;

    /// ceil(factor * r * sqrt(ln r)), natural logarithm.
    [[nodiscard]] static std::size_t scaled(double factor, std::size_t r);
    [[nodiscard]] std::size_t m(std::size_t r) const;
    [[nodiscard]] std::size_t d(std::size_t r) const;
    /// max(ceil(C0 r sqrt(ln r)), 2r).
    [[nodiscard]] std::size_t slice_size(std::size_t r) const;
};

struct ConnectivityOutcome {
    std::optional<StrongMinorWitness> witness;
    /// Stage that failed ("nearly-regular", "slice", "weak-minor",
    /// "neighbours", "linkage"), empty on success.
    std::string stage;
    std::string reason;
    /// T is ceil(C' r sqrt(ln r))-strongly-connected.
    bool hypothesis_met = false;
    /// Weak minor, sources and sinks handed to the linkage search.
    std::optional<WeakMinorWitness> weak;
    std::vector<Vertex> link_from;
    std::vector<Vertex> link_to;
};

/// Weak minor in a slice of a nearly-regular set, repaired into a strong
/// minor: for every branch set that is not strongly connected, s1 lies in its
/// source component and s2 in its sink component, u2 is a fresh out-neighbour
/// of s2 and u1 a fresh in-neighbour of s1 outside the slice, and a path
/// u2 ~> u1 outside the slice closes the cycle s2 -> u2 ~> u1 -> s1.
[[nodiscard]] ConnectivityOutcome strong_minor_from_connectivity(const Tournament & t, std::size_t r,
                                                                 const AlgorithmConfig & cfg);

/// One sampled z-vector with its statistics.
struct TriangleSample {
    std::uint64_t seed = 0;
    std::vector<Vertex> z;
    /// Number of distinct z values.
    std::size_t X = 0;
    /// Unordered pairs of triangles without edges in both directions.
    std::size_t Y = 0;
    /// X^2 - 40 Y - m^2 / 9.
    double potential = 0.0;
};

struct TriangleSystem {
    /// (w_i, v_i, z_i) for the accepted sample.
    std::vector<std::array<Vertex, 3>> triangles;
    /// L_i = N+(v_i) & N-(w_i) & F.
    std::vector<VertexSet> L_sets;
    std::size_t X = 0;
    std::size_t Y = 0;
    /// Triangle indices at the first occurrence of each distinct z.
    std::vector<std::size_t> U;
    /// Vertex j stands for triangle U[j]; edges join good pairs.
    Graph auxiliary_graph;
    /// Every sample drawn, accepted or not, in attempt order.
    std::vector<TriangleSample> samples;
    std::optional<std::size_t> accepted;
};

struct OutdegreeOutcome {
    std::optional<StrongMinorWitness> witness;
    /// Failing stage ("edge-system", "triangles", "sampling", "clique-minor",
    /// or a connectivity stage prefixed with "connectivity/"), empty on
    /// success.
    std::string stage;
    std::string reason;
    std::size_t m = 0;
    std::size_t d = 0;
    std::optional<EdgeMatchingSystem> system;
    std::optional<TriangleSystem> triangles;
    /// Set when an m-strongly-connected subtournament routed the run to
    /// strong_minor_from_connectivity.
    std::optional<VertexSet> connected;
};

/// Triangle assembly behind large minimum out-degree. Throws GraphError when
/// the minimum out-degree is below d.
[[nodiscard]] OutdegreeOutcome strong_minor_from_outdegree(const Tournament & t, std::size_t r,
                                                           const AlgorithmConfig & cfg, std::uint64_t seed);

/// Edges in both directions between the vertex sets of two triangles.
[[nodiscard]] bool is_good_pair(const Digraph & d, const std::array<Vertex, 3> & a, const std::array<Vertex, 3> & b);

} // namespace sminor
