#pragma once

#include <sminor/connectivity.hpp>
#include <sminor/digraph.hpp>
#include <sminor/oracles.hpp>
#include <sminor/tournament_minors.hpp>
#include <sminor/witness.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace sminor {

/// Peels insertion-maximal acyclic sets until nothing is left. Every vertex of
/// a later part has an in- and an out-neighbour in every earlier part, so the
/// first r parts form a K_r-template for any r up to the part count, which is
/// at least chi(D). Throws GraphError("empty") on the empty digraph.
[[nodiscard]] TemplateWitness find_templates(const Digraph & d, const VertexSet & within);
[[nodiscard]] TemplateWitness find_templates(const Digraph & d);

enum class LayerMode { exact, heuristic };

struct LayerChoice {
    std::size_t index = 0;
    /// layer & X
    VertexSet set;
    /// exact: exact_chi of the chosen set. heuristic: the score's lower bound
    /// (2 with a cycle, 1 when nonempty, 0 otherwise).
    std::size_t chi = 0;
    /// false in heuristic mode; no bound is claimed then.
    bool exact = true;
    /// budget_exceeded when some layer's exact_chi ran out of nodes.
    SearchStatus status = SearchStatus::found;
};

/// Layer of `tree` whose intersection with X has the largest dichromatic
/// number, lowest index on ties. In exact mode the result is at least
/// ceil(chi(D[X]) / 2) when D[tree vertices] is strongly connected. Heuristic
/// mode ranks layers by cycle presence, then greedy colour count, then size.
[[nodiscard]] LayerChoice best_layer(const Digraph & d, const BfsTree & tree, const VertexSet & x, LayerMode mode,
                                     std::uint64_t node_budget = default_node_budget);

/// Makes the first unflagged branch set strongly connected by adding the
/// in-tree path to v and the out-tree path from v of each of its vertices.
/// Throws GraphError when v lies in a branch set, when every set is already
/// flagged, or when an added path meets another branch set (the message names
/// the vertex and the set).
[[nodiscard]] PartialMinorWitness escalate_partial(const Digraph & d, const PartialMinorWitness & w, Vertex v,
                                                   const BfsTree & t_out, const BfsTree & t_in);

struct EscalationOutcome {
    std::optional<StrongMinorWitness> witness;
    /// Failing stage ("templates", "escalation", "budget"), empty on success.
    std::string stage;
    std::string reason;
    /// Deepest partial witness produced, when any.
    std::optional<PartialMinorWitness> partial;
};

/// Strong K_r minor from an r-partial minor built by halving the dichromatic
/// number twice per level on BFS layers around the lowest vertex of a chosen
/// strongly connected component. Exact mode picks the component of largest
/// exact_chi and exact layers; heuristic mode the largest component and
/// heuristic layers. Any returned witness has passed verify_strong_minor.
[[nodiscard]] EscalationOutcome strong_minor_by_escalation(const Digraph & d, std::size_t r, LayerMode mode,
                                                           std::uint64_t node_budget = default_node_budget);

} // namespace sminor
