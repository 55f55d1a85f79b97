#include <doctest.h>

#include "support/brute_force.hpp"
#include "support/fixtures.hpp"

#include <sminor/acyclic.hpp>
#include <sminor/connectivity.hpp>
#include <sminor/constructions.hpp>

#include <algorithm>
#include <map>

using namespace sminor;
using fixtures::cycle3;
using fixtures::make;

TEST_CASE("vertex sets iterate in ascending order and support set algebra")
{
    VertexSet a(130, {129, 3, 64, 0});
    CHECK(a.to_vector() == std::vector<Vertex>{0, 3, 64, 129});
    CHECK(a.size() == 4);
    CHECK(a.first() == 0);
    VertexSet b(130, {3, 100});
    CHECK((a & b).to_vector() == std::vector<Vertex>{3});
    CHECK((a | b).size() == 5);
    CHECK((a - b).to_vector() == std::vector<Vertex>{0, 64, 129});
    CHECK(a.intersects(b));
    CHECK(VertexSet(130, {3}).is_subset_of(b));
    CHECK(VertexSet(130).first() == no_vertex);
    CHECK(VertexSet::full(70).size() == 70);
}

TEST_CASE("digraphs reject loops, duplicates and out-of-range edges")
{
    Digraph d(3);
    d.add_edge(0, 1);
    CHECK_THROWS_AS(d.add_edge(0, 1), GraphError);
    CHECK_THROWS_AS(d.add_edge(1, 1), GraphError);
    CHECK_THROWS_AS(d.add_edge(0, 3), GraphError);
    d.add_edge(1, 0);
    CHECK(d.has_digon());
    CHECK_FALSE(d.is_tournament());
    CHECK_THROWS_AS((void)Tournament(d), GraphError);
    CHECK(Tournament(cycle3()).size() == 3);
}

TEST_CASE("scc_decompose examples")
{
    CHECK_THROWS_WITH_AS((void)scc_decompose(Digraph(0)), "empty", GraphError);

    auto c = scc_decompose(cycle3());
    REQUIRE(c.count() == 1);
    CHECK(c.parts[0].size() == 3);

    auto t = scc_decompose(gen_transitive(4));
    REQUIRE(t.count() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(t.parts[i].to_vector() == std::vector<Vertex>{i});

    auto s3 = scc_decompose(gen_S(3).digraph);
    REQUIRE(s3.count() == 1);
    CHECK(s3.parts[0].size() == 7);
    CHECK(brute::strongly_connected(gen_S(3).digraph, brute::full(7)));
}

TEST_CASE("scc parts partition V and every cross edge goes forward")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto d = gen_random_digraph(4 + seed % 9, 0.18, seed);
        auto scc = scc_decompose(d);
        VertexSet seen(d.size());
        for (std::size_t i = 0; i < scc.count(); ++i) {
            CHECK_FALSE(seen.intersects(scc.parts[i]));
            seen |= scc.parts[i];
            CHECK(brute::strongly_connected(d, brute::mask_of(scc.parts[i])));
        }
        CHECK(seen == d.vertices());
        for (const auto & e : d.edges())
            CHECK(scc.part_of[e.from] <= scc.part_of[e.to]);
    }
}

TEST_CASE("strong connectivity examples")
{
    CHECK(is_strongly_connected(cycle3()));
    CHECK_FALSE(is_strongly_connected(make(2, {{0, 1}})));
    CHECK(is_strongly_connected(gen_D(2).digraph));
    CHECK(brute::strongly_connected(gen_D(2).digraph, brute::full(12)));
}

TEST_CASE("k-strong connectivity")
{
    CHECK(is_k_strongly_connected(cycle3(), 1));
    CHECK_FALSE(is_k_strongly_connected(cycle3(), 2));
    CHECK_THROWS_AS((void)is_k_strongly_connected(cycle3(), 0), GraphError);

    auto t = gen_random_tournament(9, 7);
    CHECK(is_k_strongly_connected(t, 2) == brute::k_strong(t, 2));

    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t n = 5 + seed % 6;
        Digraph d = seed % 2 ? gen_random_tournament(n, seed).graph() : gen_random_digraph(n, 0.6, seed);
        for (std::size_t k = 1; k <= 3; ++k) {
            CHECK(is_k_strongly_connected(d, k) == brute::k_strong(d, k));
            CHECK(is_k_strongly_connected_exhaustive(d, k) == brute::k_strong(d, k));
        }
    }
}

TEST_CASE("minimum vertex cut separates and is minimum")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto t = gen_random_tournament(6 + seed % 5, 100 + seed);
        if (!is_strongly_connected(t.graph()))
            continue;
        auto cut = min_vertex_cut(t.graph(), t.graph().vertices());
        if (cut.complete)
            continue;
        CHECK(cut.cut.size() == cut.size);
        CHECK_FALSE(is_strongly_connected(t.graph(), t.graph().vertices() - cut.cut));
        CHECK(brute::k_strong(t, cut.size));
        CHECK_FALSE(brute::k_strong(t, cut.size + 1));
    }
}

TEST_CASE("bfs trees")
{
    auto out = bfs_tree(cycle3(), 0, Direction::out);
    REQUIRE(out.layers.size() == 3);
    for (const auto & layer : out.layers)
        CHECK(layer.size() == 1);

    auto in = bfs_tree(cycle3(), 0, Direction::in);
    CHECK(in.layer[2] == 1);
    CHECK(in.layer[1] == 2);
    CHECK(in.path(1) == std::vector<Vertex>{1, 2, 0});

    CHECK_THROWS_WITH_AS((void)bfs_tree(make(2, {{0, 1}}), 1, Direction::out), "not strongly connected",
                         GraphError);

    auto s3 = gen_S(3).digraph;
    auto dist = brute::distances(s3, brute::full(7));
    auto tree = bfs_tree(s3, 0, Direction::out);
    for (Vertex w = 0; w < 7; ++w)
        CHECK(tree.layer[w] == dist[0][w]);
}

TEST_CASE("bfs layer histogram matches all-pairs distances")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto d = gen_random_digraph(5 + seed % 8, 0.35, seed);
        if (!is_strongly_connected(d))
            continue;
        auto dist = brute::distances(d, brute::full(d.size()));
        for (Vertex root = 0; root < d.size(); ++root) {
            for (auto dir : {Direction::out, Direction::in}) {
                auto tree = bfs_tree(d, root, dir);
                for (Vertex w = 0; w < d.size(); ++w) {
                    const auto expected = dir == Direction::out ? dist[root][w] : dist[w][root];
                    CHECK(tree.layer[w] == expected);
                    auto p = tree.path(w);
                    CHECK(p.size() == expected + 1);
                    for (std::size_t i = 0; i + 1 < p.size(); ++i)
                        CHECK(d.has_edge(p[i], p[i + 1]));
                }
            }
        }
    }
}

TEST_CASE("maximal acyclic sets")
{
    auto tt = gen_transitive(6);
    CHECK(maximal_acyclic_set(tt).size() == 6);
    CHECK(maximal_acyclic_set(cycle3()).size() == 2);
    CHECK(maximal_acyclic_set(gen_S(3).digraph).size() == 3);
    CHECK(brute::max_acyclic(gen_S(3).digraph) == 4);

    auto c = maximal_acyclic_set_with_sink(Tournament(cycle3()), 0);
    CHECK(c.order == std::vector<Vertex>{2, 0});
    CHECK(maximal_acyclic_set_with_sink(tt, 5).size() == 6);
    CHECK(maximal_acyclic_set_with_sink(tt, 0).order == std::vector<Vertex>{0});
}

TEST_CASE("no outside vertex fits anywhere in a maximal acyclic set")
{
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        auto t = gen_random_tournament(4 + seed % 12, seed);
        auto a = maximal_acyclic_set(t);
        CHECK(brute::acyclic(t, brute::mask_of(a.vertices)));
        for (std::size_t i = 0; i < a.order.size(); ++i)
            for (std::size_t j = i + 1; j < a.order.size(); ++j)
                CHECK(t.graph().has_edge(a.order[i], a.order[j]));
        for (Vertex w : t.graph().vertices() - a.vertices) {
            for (std::size_t pos = 0; pos <= a.order.size(); ++pos) {
                auto order = a.order;
                order.insert(order.begin() + static_cast<std::ptrdiff_t>(pos), w);
                bool forward = true;
                for (std::size_t i = 0; i < order.size(); ++i)
                    for (std::size_t j = i + 1; j < order.size(); ++j)
                        forward = forward && t.graph().has_edge(order[i], order[j]);
                CHECK_FALSE(forward);
            }
        }
    }
}

TEST_CASE("domination")
{
    auto c = cycle3();
    for (auto mode : {DominationMode::out, DominationMode::in, DominationMode::both})
        CHECK(dominates(c, c.vertices(), mode));
    // {0}: vertex 1 has in-neighbour 0, vertex 2 has out-neighbour 0, nothing more
    const VertexSet a(3, {0});
    CHECK(dominates(c, a, DominationMode::out) == (c.has_edge(0, 1) && c.has_edge(0, 2)));
    CHECK(dominates(c, a, DominationMode::in) == (c.has_edge(1, 0) && c.has_edge(2, 0)));
    CHECK_FALSE(dominates(c, a, DominationMode::both));

    auto tt = gen_transitive(4);
    CHECK_FALSE(dominates(tt, VertexSet(4, {3}), DominationMode::out));
}

TEST_CASE("shortest paths")
{
    CHECK(shortest_path(cycle3(), 1, 1) == std::vector<Vertex>{1});
    CHECK(shortest_path(cycle3(), 0, 2) == std::vector<Vertex>{0, 1, 2});
    CHECK_THROWS_AS((void)shortest_path(make(2, {{0, 1}}), 1, 0), GraphError);

    auto t = fixtures::strong_tournament(10, 1);
    auto dist = brute::distances(t, brute::full(10));
    for (Vertex u = 0; u < 10; ++u)
        for (Vertex v = 0; v < 10; ++v) {
            auto p = shortest_path(t, u, v, t.graph().vertices());
            CHECK(p.size() == dist[u][v] + 1);
            CHECK(is_backward_closed(t, p));
        }
}

TEST_CASE("induced subgraphs lift back to the parent")
{
    auto t = gen_random_tournament(9, 4);
    VertexSet keep(9, {1, 4, 6, 8});
    auto sub = induced_subgraph(t, keep);
    CHECK(sub.graph.size() == 4);
    CHECK(sub.lift(sub.graph.vertices(), 9) == keep);
    for (Vertex a = 0; a < 4; ++a)
        for (Vertex b = 0; b < 4; ++b)
            if (a != b)
                CHECK(sub.graph.has_edge(a, b) == t.graph().has_edge(sub.original[a], sub.original[b]));
}
