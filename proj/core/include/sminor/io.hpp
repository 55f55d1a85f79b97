#pragma once

#include <sminor/constructions.hpp>
#include <sminor/digraph.hpp>
#include <sminor/tournament_minors.hpp>
#include <sminor/witness.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

namespace sminor {

/// Malformed document. The message starts with the diagnostic ("malformed
/// JSON", "index out of range", "duplicate edge", "loop", "missing field",
/// "wrong type") followed by the locus.
class FormatError : public GraphError {
public:
    using GraphError::GraphError;
};

/// {"n": n, "edges": [[u, v], ...], "labels": {"0": "...", ...}}. Edges are
/// written sorted; labels are omitted when empty.
[[nodiscard]] LabelledDigraph parse_digraph(std::string_view text);
[[nodiscard]] std::string format_digraph(const Digraph & d, const std::vector<std::string> & labels = {});

[[nodiscard]] LabelledDigraph read_digraph(const std::filesystem::path & path);
void write_digraph(const Digraph & d, const std::filesystem::path & path, const std::vector<std::string> & labels = {});

/// `digraph {` with one `u -> v;` line per edge and one `v;` line per
/// isolated vertex.
[[nodiscard]] std::string format_dot(const Digraph & d);
void export_dot(const Digraph & d, const std::filesystem::path & path);

enum class WitnessKind {
    strong_minor,
    weak_minor,
    template_,
    partial_minor,
    coloring,
    dominating_core,
    triangle_system,
};

[[nodiscard]] std::string_view to_string(WitnessKind kind);
/// Throws FormatError for an unknown name.
[[nodiscard]] WitnessKind parse_witness_kind(std::string_view name);

using WitnessPayload = std::variant<StrongMinorWitness, WeakMinorWitness, TemplateWitness, PartialMinorWitness,
                                    Coloring, DominatingCore, TriangleSystem>;

/// {"kind": ..., "payload": ...}. Verdicts are never stored.
struct WitnessDocument {
    WitnessPayload payload;

    [[nodiscard]] WitnessKind kind() const;
};

/// `universe` is the vertex count of the digraph the witness refers to;
/// out-of-range vertex ids are rejected.
[[nodiscard]] WitnessDocument parse_witness(std::string_view text, std::size_t universe);
[[nodiscard]] std::string format_witness(const WitnessDocument & doc);

[[nodiscard]] WitnessDocument read_witness(const std::filesystem::path & path, std::size_t universe);
void write_witness(const WitnessDocument & doc, const std::filesystem::path & path);

/// Recomputes every property the kind promises: the matching verify_* for
/// minors, templates and colourings; strong connectivity, domination and a
/// proper 2-colouring for dominating cores; triangle edges, L-set membership,
/// recounted X and Y per sample and auxiliary edges for triangle systems.
[[nodiscard]] Verdict verify_witness(const Digraph & d, const WitnessDocument & doc);

} // namespace sminor
