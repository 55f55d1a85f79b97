#include <doctest.h>

#include "support/brute_force.hpp"
#include "support/fixtures.hpp"

#include <sminor/connectivity.hpp>
#include <sminor/constructions.hpp>
#include <sminor/oracles.hpp>
#include <sminor/random.hpp>
#include <sminor/tournament_minors.hpp>

using namespace sminor;
using fixtures::cycle3;
using fixtures::make;

TEST_CASE("exact_chi examples")
{
    for (std::size_t n : {1, 2, 5, 9})
        CHECK(exact_chi(gen_transitive(n)).chi == 1);
    CHECK(exact_chi(cycle3()).chi == 2);
    auto s4 = exact_chi(gen_S(4).digraph);
    CHECK(s4.status == SearchStatus::found);
    CHECK(s4.chi == 4);
    CHECK(verify_coloring(gen_S(4).digraph, s4.coloring).ok);
    CHECK(exact_chi(Digraph(0)).chi == 0);
}

TEST_CASE("exact_chi agrees with partition enumeration")
{
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        auto d = gen_random_digraph(1 + seed % 7, 0.15 + 0.1 * static_cast<double>(seed % 6), seed);
        auto res = exact_chi(d);
        REQUIRE(res.status == SearchStatus::found);
        CHECK(res.chi == brute::chi(d));
        CHECK(verify_coloring(d, res.coloring).ok);
        CHECK(res.coloring.k == res.chi);
    }
}

TEST_CASE("exact_chi is monotone along induced subset chains")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto d = gen_random_digraph(10, 0.4, seed);
        VertexSet s = d.vertices();
        std::size_t previous = exact_chi(d, s).chi;
        SplitMix64 rng(seed);
        while (!s.empty()) {
            auto members = s.to_vector();
            s.erase(members[rng.below(members.size())]);
            const std::size_t chi = exact_chi(d, s).chi;
            CHECK(chi <= previous);
            previous = chi;
        }
    }
}

TEST_CASE("exact_chi reports budget exhaustion with bounds")
{
    auto t = gen_random_tournament(26, 3);
    auto res = exact_chi(t, 5);
    CHECK(res.status == SearchStatus::budget_exceeded);
    CHECK(res.lower <= res.upper);
    CHECK(verify_coloring(t, res.coloring).ok);
    CHECK(res.coloring.k == res.upper);
}

TEST_CASE("exact_sm examples")
{
    CHECK(exact_sm(gen_transitive(5)).r == 1);
    CHECK(exact_sm(gen_S(2).digraph).r == 1);
    auto d2 = exact_sm(gen_D(2).digraph);
    CHECK(d2.status == SearchStatus::found);
    CHECK(d2.r == 2);
    CHECK(verify_strong_minor(gen_D(2).digraph, d2.witness).ok);
    CHECK(exact_sm(Digraph(0)).r == 0);
}

TEST_CASE("exact_sm agrees with unpruned family enumeration")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t n = 2 + seed % 7;
        Digraph d = seed % 3 == 0 ? gen_random_tournament(n, seed).graph()
                                  : gen_random_digraph(n, 0.3 + 0.1 * static_cast<double>(seed % 4), seed);
        auto res = exact_sm(d);
        REQUIRE(res.status == SearchStatus::found);
        CHECK(res.r == brute::sm(d));
        CHECK(res.witness.branch_sets.size() == res.r);
        CHECK(verify_strong_minor(d, res.witness).ok);
    }
}

TEST_CASE("exact_sm honours max_r and the vertex limit")
{
    auto t = gen_random_tournament(12, 5);
    auto capped = exact_sm(t, 1);
    CHECK(capped.r == 1);
    CHECK(verify_strong_minor(t, capped.witness).ok);
    CHECK_THROWS_AS((void)exact_sm(gen_transitive(31)), GraphError);
}

TEST_CASE("witness verifiers")
{
    auto c = cycle3();
    CHECK(verify_strong_minor(c, {{VertexSet(3, {1})}}).ok);
    auto missing = verify_strong_minor(c, {{VertexSet(3, {0}), VertexSet(3, {1})}});
    CHECK_FALSE(missing.ok);
    CHECK(missing.locus == "no edge from branch set 1 to branch set 0");

    CHECK(verify_weak_minor(c, {{VertexSet(3, {0, 2})}}).ok);
    CHECK(verify_template(c, {{VertexSet(3, {0, 1}), VertexSet(3, {2})}}).ok);
    // 0 -> 1 exists but 1 -> 0 does not
    CHECK_FALSE(verify_template(c, {{VertexSet(3, {0}), VertexSet(3, {1}), VertexSet(3, {2})}}).ok);

    auto t = gen_random_tournament(14, 3);
    auto w = peel_transitive_plus_path(t);
    CHECK(verify_strong_minor(t, w).ok);
    CHECK(verify_weak_minor(t, {w.branch_sets}).ok);
}

TEST_CASE("find_weak_minor")
{
    auto one = find_weak_minor(Tournament(cycle3()), 1);
    REQUIRE(one.found());
    CHECK(one.witness->branch_sets.size() == 1);
    CHECK_FALSE(find_weak_minor(Tournament(cycle3()), 3).found());

    auto t = gen_random_tournament(10, 5);
    const bool exists = brute::largest_family(t, brute::Connectivity::weak) >= 3;
    auto res = find_weak_minor(t, 3);
    CHECK(res.found() == exists);
    if (res.found())
        CHECK(verify_weak_minor(t, *res.witness).ok);

    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto s = gen_random_tournament(5 + seed % 4, 40 + seed);
        const auto best = brute::largest_family(s, brute::Connectivity::weak);
        for (std::size_t r = 1; r <= 4; ++r) {
            auto found = find_weak_minor(s, r);
            CHECK(found.found() == (r <= best));
            if (found.found())
                CHECK(verify_weak_minor(s, *found.witness).ok);
        }
    }
}

TEST_CASE("find_linkage")
{
    auto c = cycle3();
    auto single = find_linkage(c, {0}, {2});
    REQUIRE(single.found());
    CHECK(single.witness->paths[0] == std::vector<Vertex>{0, 1, 2});

    auto two = make(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    auto pair = find_linkage(two, {0, 3}, {2, 5});
    REQUIRE(pair.found());
    CHECK(verify_linkage(two, {0, 3}, {2, 5}, *pair.witness).ok);

    auto t = gen_random_tournament(12, 2);
    for (Vertex a = 0; a < 4; ++a) {
        const std::vector<Vertex> sources{a, 11 - a};
        const std::vector<Vertex> sinks{static_cast<Vertex>(a + 4), static_cast<Vertex>(7 - a)};
        auto res = find_linkage(t, sources, sinks);
        CHECK(res.found() == brute::linkable(t, sources, sinks));
        if (res.found())
            CHECK(verify_linkage(t, sources, sinks, *res.witness).ok);
    }

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto d = gen_random_digraph(7, 0.3, seed);
        const std::vector<Vertex> sources{0, 1};
        const std::vector<Vertex> sinks{2, 3};
        auto res = find_linkage(d, sources, sinks);
        CHECK(res.found() == brute::linkable(d, sources, sinks));
    }
    CHECK_THROWS_AS((void)find_linkage(c, {0, 0}, {1, 2}), GraphError);
}

TEST_CASE("undirected clique minors")
{
    Graph k4(4);
    for (Vertex a = 0; a < 4; ++a)
        for (Vertex b = a + 1; b < 4; ++b)
            k4.add_edge(a, b);
    auto res = find_undirected_clique_minor(k4, 4);
    REQUIRE(res.found());
    for (const auto & b : res.witness->branch_sets)
        CHECK(b.size() == 1);

    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK_FALSE(find_undirected_clique_minor(path, 3).found());

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::size_t n = seed == 0 ? 10 : 6 + seed % 3;
        SplitMix64 rng(seed == 0 ? 4 : seed);
        Graph g(n);
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                if (rng.uniform() < 0.5)
                    g.add_edge(a, b);
        const auto best = brute::clique_minor(g);
        for (std::size_t r = 1; r <= 5; ++r) {
            auto found = find_undirected_clique_minor(g, r);
            CHECK(found.found() == (r <= best));
            if (found.found())
                CHECK(verify_clique_minor(g, *found.witness).ok);
            auto greedy = find_undirected_clique_minor(g, r, SearchMode::greedy);
            if (greedy.found())
                CHECK(verify_clique_minor(g, *greedy.witness).ok);
        }
    }
}

TEST_CASE("maximum acyclic set")
{
    CHECK(max_acyclic_set_exact(gen_transitive(7)).set.size() == 7);
    CHECK(max_acyclic_set_exact(cycle3()).set.size() == 2);
    CHECK(max_acyclic_set_exact(gen_S(3).digraph).set.size() == 4);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto d = gen_random_digraph(3 + seed % 9, 0.35, seed);
        auto res = max_acyclic_set_exact(d);
        CHECK(res.set.size() == brute::max_acyclic(d));
        CHECK(is_acyclic(d, res.set.vertices));
    }
}

TEST_CASE("even cycles")
{
    auto digon = make(2, {{0, 1}, {1, 0}});
    CHECK(has_even_cycle(digon).status == SearchStatus::found);
    CHECK(has_even_cycle(cycle3()).status == SearchStatus::none);
    CHECK(has_even_cycle(gen_D(2).digraph).status == SearchStatus::none);
    CHECK_FALSE(brute::even_cycle(gen_D(2).digraph));
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto d = gen_random_digraph(3 + seed % 6, 0.3, seed);
        auto res = has_even_cycle(d);
        CHECK((res.status == SearchStatus::found) == brute::even_cycle(d));
        if (res.status == SearchStatus::found) {
            CHECK(res.cycle.size() % 2 == 0);
            for (std::size_t i = 0; i < res.cycle.size(); ++i)
                CHECK(d.has_edge(res.cycle[i], res.cycle[(i + 1) % res.cycle.size()]));
        }
    }
}
