#pragma once

#include <sminor/digraph.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace sminor {

/// r pairwise-disjoint nonempty branch sets, each strongly connected, with an
/// edge from every set to every other set. Sets need not cover V.
struct StrongMinorWitness {
    std::vector<VertexSet> branch_sets;
};

/// As StrongMinorWitness with weak connectivity only.
struct WeakMinorWitness {
    std::vector<VertexSet> branch_sets;
};

/// Disjoint nonempty parts with an edge from every part to every other part.
struct TemplateWitness {
    std::vector<VertexSet> parts;
};

/// Template-like family in which flagged sets are strongly connected.
struct PartialMinorWitness {
    std::vector<VertexSet> branch_sets;
    std::vector<bool> strong_flags;

    [[nodiscard]] std::size_t m() const;
};

inline constexpr std::size_t no_color = no_vertex;

/// color[v] in [0, k) for coloured vertices, no_color for vertices outside the
/// coloured subset.
struct Coloring {
    std::vector<std::size_t> color;
    std::size_t k = 0;

    [[nodiscard]] std::vector<VertexSet> classes() const;
};

/// paths[i] runs from sources[i] to sinks[i].
struct Linkage {
    std::vector<std::vector<Vertex>> paths;
};

/// Result of a verifier: `locus` names the first violated condition.
struct Verdict {
    bool ok = true;
    std::string locus;

    explicit operator bool() const { return ok; }
    static Verdict pass() { return {}; }
    static Verdict fail(std::string why) { return {false, std::move(why)}; }
};

[[nodiscard]] bool is_weakly_connected(const Digraph & d, const VertexSet & within);

[[nodiscard]] Verdict verify_strong_minor(const Digraph & d, const StrongMinorWitness & w);
[[nodiscard]] Verdict verify_weak_minor(const Digraph & d, const WeakMinorWitness & w);
[[nodiscard]] Verdict verify_template(const Digraph & d, const TemplateWitness & w);
[[nodiscard]] Verdict verify_partial_minor(const Digraph & d, const PartialMinorWitness & w);

/// Every coloured vertex of `within` has a colour below k and every class is
/// acyclic. Vertices outside `within` are ignored.
[[nodiscard]] Verdict verify_coloring(const Digraph & d, const Coloring & c, const VertexSet & within);
[[nodiscard]] Verdict verify_coloring(const Digraph & d, const Coloring & c);

[[nodiscard]] Verdict verify_linkage(const Digraph & d, const std::vector<Vertex> & sources,
                                     const std::vector<Vertex> & sinks, const Linkage & l);

} // namespace sminor
