#include <doctest.h>

#include "support/brute_force.hpp"
#include "support/fixtures.hpp"

#include <sminor/connectivity.hpp>
#include <sminor/constructions.hpp>
#include <sminor/digraph_minors.hpp>
#include <sminor/oracles.hpp>
#include <sminor/random.hpp>

using namespace sminor;
using fixtures::cycle3;
using fixtures::make;

TEST_CASE("templates")
{
    auto tt = gen_transitive(5);
    auto one = find_templates(tt);
    REQUIRE(one.parts.size() == 1);
    CHECK(one.parts[0].size() == 5);

    auto c = find_templates(cycle3());
    REQUIRE(c.parts.size() == 2);
    CHECK(c.parts[0].to_vector() == std::vector<Vertex>{0, 1});
    CHECK(c.parts[1].to_vector() == std::vector<Vertex>{2});
    CHECK(verify_template(cycle3(), c).ok);

    auto d = gen_random_digraph(12, 0.4, 8);
    auto t = find_templates(d);
    CHECK(t.parts.size() >= exact_chi(d).chi);
    CHECK(verify_template(d, t).ok);

    CHECK_THROWS_AS((void)find_templates(Digraph(0)), GraphError);
}

TEST_CASE("template parts cover V and dominate later vertices")
{
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        auto d = gen_random_digraph(2 + seed % 12, 0.2 + 0.05 * static_cast<double>(seed % 10), seed);
        auto t = find_templates(d);
        if (d.size() <= 7)
            CHECK(t.parts.size() >= brute::chi(d));
        CHECK(t.parts.size() >= exact_chi(d).chi);
        CHECK(verify_template(d, t).ok);
        VertexSet seen(d.size());
        for (std::size_t i = 0; i < t.parts.size(); ++i) {
            CHECK(is_acyclic(d, t.parts[i]));
            CHECK_FALSE(seen.intersects(t.parts[i]));
            seen |= t.parts[i];
            for (std::size_t j = 0; j < i; ++j)
                for (Vertex v : t.parts[i]) {
                    CHECK(d.in(v).intersects(t.parts[j]));
                    CHECK(d.out(v).intersects(t.parts[j]));
                }
        }
        CHECK(seen == d.vertices());
    }
}

TEST_CASE("best layer examples")
{
    auto c = cycle3();
    auto tree = bfs_tree(c, 0, Direction::out);
    auto l = best_layer(c, tree, c.vertices(), LayerMode::exact);
    CHECK(l.chi == 1);
    CHECK(l.set.size() == 1);
    CHECK(l.exact);

    auto h = best_layer(c, tree, c.vertices(), LayerMode::heuristic);
    CHECK_FALSE(h.exact);
    CHECK(h.set.size() == 1);
}

TEST_CASE("exact best layer keeps half the dichromatic number")
{
    std::size_t checked = 0;
    for (std::uint64_t seed = 0; seed < 200 && checked < 60; ++seed) {
        auto d = gen_random_digraph(6 + seed % 9, 0.3 + 0.05 * static_cast<double>(seed % 5), seed == 0 ? 17 : seed);
        if (!is_strongly_connected(d))
            continue;
        ++checked;
        SplitMix64 rng(seed);
        VertexSet x(d.size());
        for (Vertex v = 0; v < d.size(); ++v)
            if (rng.uniform() < 0.8)
                x.insert(v);
        const auto chi_x = exact_chi(d, x).chi;
        for (Vertex root : {Vertex{0}, static_cast<Vertex>(d.size() - 1)})
            for (auto dir : {Direction::out, Direction::in}) {
                auto tree = bfs_tree(d, root, dir);
                auto l = best_layer(d, tree, x, LayerMode::exact);
                CHECK(2 * l.chi >= chi_x);
                CHECK(l.set == (tree.layers[l.index] & x));
                std::size_t best = 0;
                for (const auto & layer : tree.layers)
                    best = std::max(best, exact_chi(d, layer & x).chi);
                CHECK(l.chi == best);
            }
    }
    CHECK(checked > 0);
}

TEST_CASE("escalation flips an already strong set")
{
    // S_3: apex 0, copies {1, 2, 3} -> {4, 5, 6} -> 0 -> {1, 2, 3}
    auto d = gen_S(3).digraph;
    PartialMinorWitness w;
    w.branch_sets = {VertexSet(7, {4, 5, 6}), VertexSet(7, {0, 1})};
    w.strong_flags = {false, false};
    REQUIRE(verify_partial_minor(d, w).ok);
    auto out = escalate_partial(d, w, 2, bfs_tree(d, 2, Direction::out), bfs_tree(d, 2, Direction::in));
    CHECK(out.m() == 1);
    CHECK(out.strong_flags[0]);
    CHECK(out.branch_sets == w.branch_sets);
}

TEST_CASE("escalation closes a path through the root")
{
    // 0 -> 1 -> 2 -> 0: {1, 2} gets the return path 2 -> 0 and 0 -> 1
    auto c = cycle3();
    PartialMinorWitness w{{VertexSet(3, {1, 2})}, {false}};
    auto out = escalate_partial(c, w, 0, bfs_tree(c, 0, Direction::out), bfs_tree(c, 0, Direction::in));
    CHECK(out.m() == 1);
    CHECK(out.branch_sets[0] == c.vertices());
    CHECK(is_strongly_connected(c, out.branch_sets[0]));
}

TEST_CASE("escalation repairs a broken set on a two-layer digraph")
{
    // root 0; layer {1, 2, 3, 4} in both trees; sets {1, 2} (no internal
    // cycle) and {3, 4} (a digon)
    auto d = make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {1, 2}, {3, 4}, {4, 3}, {2, 3},
                      {4, 1}});
    PartialMinorWitness w{{VertexSet(5, {1, 2}), VertexSet(5, {3, 4})}, {false, true}};
    REQUIRE(verify_partial_minor(d, w).ok);
    auto out = escalate_partial(d, w, 0, bfs_tree(d, 0, Direction::out), bfs_tree(d, 0, Direction::in));
    CHECK(out.m() == 2);
    CHECK(out.branch_sets[0].to_vector() == std::vector<Vertex>{0, 1, 2});
    CHECK(verify_partial_minor(d, out).ok);
    CHECK(verify_strong_minor(d, {out.branch_sets}).ok);
}

TEST_CASE("escalation reports clashes and bad preconditions")
{
    // a single vertex is strongly connected already: no growth needed
    auto d = make(4, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 3}, {3, 0}, {2, 3}, {3, 2}});
    PartialMinorWitness single{{VertexSet(4, {2}), VertexSet(4, {1})}, {false, true}};
    auto grown = escalate_partial(d, single, 0, bfs_tree(d, 0, Direction::out), bfs_tree(d, 0, Direction::in));
    CHECK(grown.m() == 2);
    CHECK(grown.branch_sets == single.branch_sets);

    // the out-tree path 0 -> 1 -> 2 runs through the other branch set
    auto e = make(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 0}, {2, 3}, {3, 1}});
    PartialMinorWitness broken{{VertexSet(4, {2, 3}), VertexSet(4, {1})}, {false, true}};
    REQUIRE(verify_partial_minor(e, broken).ok);
    CHECK_THROWS_AS((void)escalate_partial(e, broken, 0, bfs_tree(e, 0, Direction::out),
                                           bfs_tree(e, 0, Direction::in)),
                    GraphError);

    PartialMinorWitness rooted{{VertexSet(4, {0})}, {false}};
    CHECK_THROWS_AS((void)escalate_partial(e, rooted, 0, bfs_tree(e, 0, Direction::out), bfs_tree(e, 0, Direction::in)),
                    GraphError);
    PartialMinorWitness done{{VertexSet(4, {1})}, {true}};
    CHECK_THROWS_AS((void)escalate_partial(e, done, 0, bfs_tree(e, 0, Direction::out), bfs_tree(e, 0, Direction::in)),
                    GraphError);
}

TEST_CASE("escalation strictly increases the flag count on random partial witnesses")
{
    std::size_t runs = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        auto d = gen_random_digraph(7 + seed % 8, 0.35, seed);
        if (!is_strongly_connected(d))
            continue;
        const Vertex v = 0;
        auto t_out = bfs_tree(d, v, Direction::out);
        auto t_in = bfs_tree(d, v, Direction::in);
        for (std::size_t i = 1; i < t_in.layers.size(); ++i)
            for (std::size_t j = 1; j < t_out.layers.size(); ++j) {
                VertexSet cell = t_in.layers[i] & t_out.layers[j];
                if (cell.size() < 2)
                    continue;
                auto tmpl = find_templates(d, cell);
                if (tmpl.parts.size() < 2)
                    continue;
                PartialMinorWitness w{{tmpl.parts[0], tmpl.parts[1]}, {}};
                for (const auto & b : w.branch_sets)
                    w.strong_flags.push_back(is_strongly_connected(d, b));
                if (w.m() == 2)
                    continue;
                REQUIRE(verify_partial_minor(d, w).ok);
                auto out = escalate_partial(d, w, v, t_out, t_in);
                ++runs;
                CHECK(out.m() == w.m() + 1);
                CHECK(verify_partial_minor(d, out).ok);
            }
    }
    CHECK(runs > 0);
}

TEST_CASE("strong minor by escalation")
{
    auto c = cycle3();
    auto one = strong_minor_by_escalation(c, 1, LayerMode::exact);
    REQUIRE(one.witness.has_value());
    CHECK(one.witness->branch_sets.size() == 1);
    CHECK(strong_minor_by_escalation(c, 0, LayerMode::exact).witness->branch_sets.empty());
    CHECK_THROWS_AS((void)strong_minor_by_escalation(Digraph(0), 1, LayerMode::exact), GraphError);

    std::size_t found = 0;
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        auto d = gen_random_digraph(8 + seed % 9, 0.45, seed == 0 ? 23 : seed);
        for (auto mode : {LayerMode::exact, LayerMode::heuristic})
            for (std::size_t r = 2; r <= 3; ++r) {
                auto res = strong_minor_by_escalation(d, r, mode);
                if (res.witness) {
                    ++found;
                    CHECK(res.witness->branch_sets.size() == r);
                    CHECK(verify_strong_minor(d, *res.witness).ok);
                }
                else {
                    CHECK_FALSE(res.stage.empty());
                }
                if (res.partial)
                    CHECK(verify_partial_minor(d, *res.partial).ok);
            }
    }
    CHECK(found > 0);
}
