#include <doctest.h>

#include "support/fixtures.hpp"

#include <sminor/constructions.hpp>
#include <sminor/digraph_minors.hpp>
#include <sminor/io.hpp>
#include <sminor/oracles.hpp>
#include <sminor/tournament_minors.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace sminor;
using fixtures::cycle3;

namespace {

std::string slurp(const std::filesystem::path & p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string diagnostic(std::string_view text)
{
    try {
        (void)parse_digraph(text);
    }
    catch (const FormatError & e) {
        return e.what();
    }
    return {};
}

bool starts_with(const std::string & s, std::string_view prefix) { return s.rfind(prefix, 0) == 0; }

std::optional<TriangleSystem> some_triangle_system(Digraph & host)
{
    for (std::size_t d = 6; d <= 12; d += 2)
        for (std::size_t levels = 1; levels <= 3; ++levels) {
            Tournament t(gen_layered(d, levels, d + levels).digraph);
            AlgorithmConfig cfg;
            cfg.C0 = 1.0;
            cfg.m_override = 3;
            cfg.d_override = d;
            auto res = strong_minor_from_outdegree(t, 2, cfg, 7);
            if (res.triangles) {
                host = t.graph();
                return res.triangles;
            }
        }
    return std::nullopt;
}

} // namespace

TEST_CASE("digraph documents round-trip")
{
    auto s3 = gen_S(3);
    const std::string text = format_digraph(s3.digraph, s3.labels);
    auto back = parse_digraph(text);
    CHECK(back.digraph == s3.digraph);
    CHECK(back.labels == s3.labels);
    CHECK(format_digraph(back.digraph, back.labels) == text);

    CHECK(format_digraph(cycle3()) == "{\"n\":3,\"edges\":[[0,1],[1,2],[2,0]]}\n");
    auto plain = parse_digraph("{\"n\": 2, \"edges\": [[1, 0]]}");
    CHECK(plain.digraph.has_edge(1, 0));
    CHECK(plain.labels.empty());

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto d = gen_random_digraph(1 + seed % 15, 0.3, seed);
        CHECK(parse_digraph(format_digraph(d)).digraph == d);
    }

    const auto path = std::filesystem::temp_directory_path() / "sminor_io_roundtrip.json";
    write_digraph(s3.digraph, path, s3.labels);
    CHECK(slurp(path) == text);
    CHECK(read_digraph(path).digraph == s3.digraph);
    std::filesystem::remove(path);
}

TEST_CASE("malformed digraph documents name the diagnostic and the locus")
{
    CHECK(starts_with(diagnostic("{\"n\":2,\"edges\":[[0,0]]}"), "loop"));
    CHECK(starts_with(diagnostic("{\"n\":2,\"edges\":[[0,1],[0,1]]}"), "duplicate edge"));
    CHECK(starts_with(diagnostic("{\"n\":2,\"edges\":[[0,2]]}"), "index out of range"));
    CHECK(starts_with(diagnostic("{\"n\":2,\"edges\":[[0,1]"), "malformed JSON"));
    CHECK(starts_with(diagnostic("{\"edges\":[]}"), "missing field"));
    CHECK(starts_with(diagnostic("{\"n\":\"two\",\"edges\":[]}"), "wrong type"));
    CHECK(starts_with(diagnostic("{\"n\":2,\"edges\":[[0]]}"), "wrong type"));
    CHECK(diagnostic("{\"n\":2,\"edges\":[[0,1],[1,1]]}").find("1") != std::string::npos);
    CHECK_THROWS_AS((void)read_digraph("/nonexistent/sminor.json"), GraphError);
}

TEST_CASE("dot export")
{
    Digraph d(3);
    d.add_edge(1, 0);
    CHECK(format_dot(d) == "digraph {\n  2;\n  1 -> 0;\n}\n");
}

TEST_CASE("witness kinds have stable names")
{
    for (auto kind : {WitnessKind::strong_minor, WitnessKind::weak_minor, WitnessKind::template_,
                      WitnessKind::partial_minor, WitnessKind::coloring, WitnessKind::dominating_core,
                      WitnessKind::triangle_system})
        CHECK(parse_witness_kind(to_string(kind)) == kind);
    CHECK(to_string(WitnessKind::template_) == "template");
    CHECK_THROWS_AS((void)parse_witness_kind("clique"), FormatError);
}

TEST_CASE("witness documents round-trip and re-verify")
{
    auto t = fixtures::strong_tournament(14, 4);
    const Digraph & g = t.graph();
    std::vector<WitnessDocument> docs;
    docs.push_back({peel_transitive_plus_path(t)});
    docs.push_back({WeakMinorWitness{peel_transitive_plus_path(t).branch_sets}});
    docs.push_back({find_templates(g)});
    docs.push_back({exact_chi(g).coloring});
    docs.push_back({dominating_core(t)});
    auto tmpl = find_templates(g);
    docs.push_back({PartialMinorWitness{{tmpl.parts[0], tmpl.parts[1]}, {false, false}}});

    for (const auto & doc : docs) {
        CAPTURE(to_string(doc.kind()));
        REQUIRE(verify_witness(g, doc).ok);
        const std::string text = format_witness(doc);
        auto back = parse_witness(text, g.size());
        CHECK(back.kind() == doc.kind());
        CHECK(format_witness(back) == text);
        CHECK(verify_witness(g, back).ok);
    }

    Digraph host;
    auto tri = some_triangle_system(host);
    REQUIRE(tri.has_value());
    WitnessDocument tdoc{*tri};
    CHECK(verify_witness(host, tdoc).ok);
    auto tback = parse_witness(format_witness(tdoc), host.size());
    CHECK(format_witness(tback) == format_witness(tdoc));
    CHECK(verify_witness(host, tback).ok);

    const auto path = std::filesystem::temp_directory_path() / "sminor_io_witness.json";
    write_witness(docs[0], path);
    CHECK(format_witness(read_witness(path, g.size())) == format_witness(docs[0]));
    std::filesystem::remove(path);
}

TEST_CASE("tampered witnesses fail verification")
{
    auto t = fixtures::strong_tournament(12, 2);
    const Digraph & g = t.graph();

    auto minor = peel_transitive_plus_path(t);
    REQUIRE(minor.branch_sets.size() >= 2);
    minor.branch_sets[1] = minor.branch_sets[0];
    CHECK_FALSE(verify_witness(g, {minor}).ok);

    auto coloring = exact_chi(g).coloring;
    coloring.color.assign(g.size(), 0);
    CHECK_FALSE(verify_witness(g, {coloring}).ok);

    auto core = dominating_core(t);
    for (Vertex v : core.R)
        core.two_coloring.color[v] = 0;
    CHECK_FALSE(verify_witness(g, {core}).ok);

    auto shrunk = dominating_core(t);
    shrunk.R = VertexSet(g.size(), {shrunk.R.first()});
    CHECK_FALSE(verify_witness(g, {shrunk}).ok);

    Digraph host;
    auto tri = some_triangle_system(host);
    REQUIRE(tri.has_value());
    REQUIRE_FALSE(tri->samples.empty());
    tri->samples[0].Y += 1;
    CHECK_FALSE(verify_witness(host, {*tri}).ok);

    CHECK_THROWS_AS((void)parse_witness("{\"kind\":\"strong-minor\",\"payload\":{\"branch_sets\":[[0,99]]}}", 12),
                    FormatError);
    CHECK_THROWS_AS((void)parse_witness("{\"kind\":\"clique\",\"payload\":{}}", 12), FormatError);
}
