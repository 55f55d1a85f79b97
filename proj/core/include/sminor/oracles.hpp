#pragma once

#include <sminor/acyclic.hpp>
#include <sminor/digraph.hpp>
#include <sminor/witness.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace sminor {

/// Three-valued outcome of an exact search.
enum class SearchStatus { found, none, budget_exceeded };

[[nodiscard]] const char * to_string(SearchStatus s);

/// Search nodes an exact solver may expand before giving up.
inline constexpr std::uint64_t default_node_budget = 50'000'000;

/// Exact solvers work on 64-bit masks.
inline constexpr std::size_t max_exact_vertices = 64;

struct ChiResult {
    /// found: `chi` is exact and `coloring` attains it. budget_exceeded:
    /// lower <= chi(D) <= upper and `coloring` attains `upper`.
    SearchStatus status = SearchStatus::found;
    std::size_t chi = 0;
    std::size_t lower = 0;
    std::size_t upper = 0;
    Coloring coloring;
};

/// Dichromatic number of D[within] by branch and bound over colour classes
/// (fewest-feasible-classes vertex first, incremental cycle test per class),
/// iterating k upwards from a lower bound. Vertices outside `within` get
/// no_color. chi of the empty set is 0.
[[nodiscard]] ChiResult exact_chi(const Digraph & d, const VertexSet & within,
                                  std::uint64_t node_budget = default_node_budget);
[[nodiscard]] ChiResult exact_chi(const Digraph & d, std::uint64_t node_budget = default_node_budget);

/// Colouring by repeatedly peeling insertion-maximal acyclic sets.
[[nodiscard]] Coloring greedy_coloring(const Digraph & d, const VertexSet & within);

struct SmResult {
    /// found: `r` is sm(D) (or max_r when that cap was reached) with a witness
    /// of that size; for the empty digraph r = 0 and the witness is empty.
    /// budget_exceeded: `r` is the best size found so far, `upper` a bound.
    SearchStatus status = SearchStatus::found;
    std::size_t r = 0;
    std::size_t upper = 0;
    StrongMinorWitness witness;
};

/// Largest strong complete minor. Enumerates strongly connected subsets once,
/// sorted by (size, mask), then searches pairwise compatible families.
/// Practical for |V| <= ~20.
[[nodiscard]] SmResult exact_sm(const Digraph & d, std::optional<std::size_t> max_r = std::nullopt,
                                std::uint64_t node_budget = default_node_budget);

template <class W>
struct SearchResult {
    SearchStatus status = SearchStatus::none;
    std::optional<W> witness;

    [[nodiscard]] bool found() const { return status == SearchStatus::found; }
};

enum class SearchMode { exact, greedy };

/// Weak complete minor in a tournament (every vertex set of a tournament is
/// weakly connected). Exact mode labels vertices with restricted growth and
/// prunes on unsatisfied ordered pairs; greedy mode grows r seeds.
[[nodiscard]] SearchResult<WeakMinorWitness> find_weak_minor(const Tournament & t, std::size_t r,
                                                             SearchMode mode = SearchMode::exact,
                                                             std::uint64_t node_budget = default_node_budget);
/// As above restricted to the vertices of `within`.
[[nodiscard]] SearchResult<WeakMinorWitness> find_weak_minor(const Tournament & t, std::size_t r,
                                                             const VertexSet & within, SearchMode mode,
                                                             std::uint64_t node_budget = default_node_budget);

/// Vertex-disjoint paths sources[i] ~> sinks[i] inside D[within]. Backtracks
/// over simple paths in ascending neighbour order; a path never passes
/// through another pair's terminal.
[[nodiscard]] SearchResult<Linkage> find_linkage(const Digraph & d, const std::vector<Vertex> & sources,
                                                 const std::vector<Vertex> & sinks, const VertexSet & within,
                                                 std::uint64_t node_budget = default_node_budget);
[[nodiscard]] SearchResult<Linkage> find_linkage(const Digraph & d, const std::vector<Vertex> & sources,
                                                 const std::vector<Vertex> & sinks,
                                                 std::uint64_t node_budget = default_node_budget);

/// Simple undirected graph.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

    [[nodiscard]] std::size_t size() const { return adj_.size(); }
    void add_edge(Vertex u, Vertex v);
    [[nodiscard]] bool has_edge(Vertex u, Vertex v) const { return adj_[u].contains(v); }
    [[nodiscard]] const VertexSet & neighbours(Vertex v) const { return adj_[v]; }
    [[nodiscard]] std::size_t edge_count() const;

private:
    std::vector<VertexSet> adj_;
};

/// r disjoint connected vertex sets, pairwise joined by an edge.
struct CliqueMinorWitness {
    std::vector<VertexSet> branch_sets;
};

[[nodiscard]] bool is_connected(const Graph & g, const VertexSet & within);
[[nodiscard]] Verdict verify_clique_minor(const Graph & g, const CliqueMinorWitness & w);

/// Exact mode enumerates connected subsets (|V| <= ~20); greedy mode deletes
/// low-degree vertices and contracts along edges with few common neighbours.
[[nodiscard]] SearchResult<CliqueMinorWitness> find_undirected_clique_minor(
    const Graph & g, std::size_t r, SearchMode mode = SearchMode::exact,
    std::uint64_t node_budget = default_node_budget);

struct AcyclicResult {
    SearchStatus status = SearchStatus::found;
    /// Maximum acyclic set when found, best set seen otherwise.
    AcyclicSet set;
};

[[nodiscard]] AcyclicResult max_acyclic_set_exact(const Digraph & d, std::uint64_t node_budget = default_node_budget);

struct EvenCycleResult {
    /// found: an even cycle exists (`cycle` lists it). none: no even cycle of
    /// length <= length_bound exists. budget_exceeded: undecided.
    SearchStatus status = SearchStatus::none;
    std::vector<Vertex> cycle;
    std::size_t length_bound = 0;
};

/// Simple-cycle enumeration rooted at each cycle's smallest vertex.
[[nodiscard]] EvenCycleResult has_even_cycle(const Digraph & d, std::size_t max_length = no_vertex,
                                             std::uint64_t node_budget = default_node_budget);

} // namespace sminor
