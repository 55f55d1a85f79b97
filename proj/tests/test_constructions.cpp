#include <doctest.h>

#include "support/brute_force.hpp"
#include "support/fixtures.hpp"

#include <sminor/connectivity.hpp>
#include <sminor/constructions.hpp>
#include <sminor/oracles.hpp>
#include <sminor/random.hpp>

using namespace sminor;

TEST_CASE("delta composition of three single vertices is a directed triangle")
{
    Digraph k1(1);
    auto d = delta_compose(k1, k1, k1);
    CHECK(d == fixtures::cycle3());
}

TEST_CASE("S_r")
{
    CHECK_THROWS_AS((void)gen_S(0), GraphError);
    CHECK(gen_S(1).digraph.size() == 1);
    CHECK(gen_S(2).digraph == fixtures::cycle3());
    for (std::size_t r = 1; r <= 5; ++r) {
        auto s = gen_S(r);
        CHECK(s.digraph.size() == (std::size_t{1} << r) - 1);
        CHECK(s.digraph.is_tournament());
        CHECK(s.labels.size() == s.digraph.size());
        CHECK(s.labels[0] == "apex");
        if (r >= 2)
            CHECK(is_strongly_connected(s.digraph));
    }
    for (std::size_t r = 1; r <= 4; ++r)
        CHECK(exact_chi(gen_S(r).digraph).chi == r);
    for (std::size_t r = 2; r <= 4; ++r)
        CHECK(exact_sm(gen_S(r).digraph).r <= r - 1);
}

TEST_CASE("G_r")
{
    CHECK_THROWS_AS((void)gen_G(0), GraphError);
    CHECK(gen_G(1).digraph.size() == 1);
    auto g2 = gen_G(2).digraph;
    CHECK(g2.size() == 3);
    CHECK(is_strongly_connected(g2));
    CHECK(g2.edge_count() == 3);

    std::size_t size = 1;
    for (std::size_t r = 1; r <= 4; ++r) {
        auto g = gen_G(r);
        CHECK(g.digraph.size() == size);
        size = (r + 1) + (r + 1) * r / 2 * size;
    }

    // every copy vertex u of the copy for T-edge v -> w closes u -> v -> w -> u
    auto g3 = gen_G(3);
    for (Vertex u = 3; u < g3.digraph.size(); ++u) {
        const auto & label = g3.labels[u];
        REQUIRE(label.rfind("copy (", 0) == 0);
        const Vertex v = static_cast<Vertex>(label[6] - '0');
        const Vertex w = static_cast<Vertex>(label[8] - '0');
        CHECK(g3.digraph.has_edge(u, v));
        CHECK(g3.digraph.has_edge(v, w));
        CHECK(g3.digraph.has_edge(w, u));
    }

    for (std::size_t r = 1; r <= 3; ++r)
        CHECK(exact_chi(gen_G(r).digraph).chi == r);
    CHECK(exact_sm(gen_G(3).digraph).r <= 2);
}

TEST_CASE("D_k")
{
    CHECK_THROWS_AS((void)gen_D(0), GraphError);
    CHECK(gen_D(1).digraph == fixtures::cycle3());
    std::size_t size = 3;
    for (std::size_t k = 1; k <= 3; ++k) {
        auto d = gen_D(k).digraph;
        CHECK(d.size() == size);
        CHECK(d.min_out_degree() == k);
        CHECK_FALSE(d.has_digon());
        size *= k + 3;
    }
    for (std::size_t k = 1; k <= 2; ++k) {
        auto d = gen_D(k).digraph;
        CHECK_FALSE(brute::even_cycle(d));
        CHECK(exact_sm(d).r < 3);
    }

    // A_x -> x and N+(x), x -> x', x' -> A_x
    auto d2 = gen_D(2);
    const auto & g = d2.digraph;
    const auto base = gen_D(1).digraph;
    for (Vertex x = 0; x < 3; ++x) {
        const Vertex first = 3 + x * 3;
        const Vertex prime = first + 2;
        CHECK(g.has_edge(x, prime));
        for (Vertex a = first; a < prime; ++a) {
            CHECK(g.has_edge(prime, a));
            CHECK(g.has_edge(a, x));
            for (Vertex y : base.out(x))
                CHECK(g.has_edge(a, y));
        }
    }
}

TEST_CASE("transitive and random generators")
{
    auto t3 = gen_transitive(3);
    CHECK(t3.graph().edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});

    CHECK(gen_random_tournament(20, 9).graph() == gen_random_tournament(20, 9).graph());
    CHECK_FALSE(gen_random_tournament(20, 9).graph() == gen_random_tournament(20, 10).graph());
    CHECK(gen_random_digraph(15, 0.3, 4) == gen_random_digraph(15, 0.3, 4));
    CHECK_THROWS_AS((void)gen_random_digraph(5, 1.5, 1), GraphError);
    CHECK(gen_random_digraph(6, 0.0, 1).edge_count() == 0);
    CHECK(gen_random_digraph(6, 1.0, 1).edge_count() == 30);
}

TEST_CASE("random tournament orientation follows the documented stream")
{
    SplitMix64 rng(77);
    auto t = gen_random_tournament(6, 77);
    for (Vertex i = 0; i < 6; ++i)
        for (Vertex j = i + 1; j < 6; ++j)
            CHECK(t.graph().has_edge(i, j) == ((rng.next() >> 63) == 1));
}

TEST_CASE("SplitMix64 streams")
{
    SplitMix64 a(1);
    SplitMix64 b(1);
    for (int i = 0; i < 5; ++i)
        CHECK(a.next() == b.next());
    CHECK(SplitMix64(1).next() == SplitMix64::mix64(1 + SplitMix64::gamma));
    CHECK(SplitMix64::substream_seed(5, 0) != SplitMix64::substream_seed(5, 1));
    SplitMix64 c(3);
    for (int i = 0; i < 1000; ++i) {
        CHECK(c.below(7) < 7);
        const double u = c.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("regular and layered tournaments")
{
    auto reg = gen_regular_tournament(21, 3);
    for (Vertex v = 0; v < 21; ++v)
        CHECK(reg.graph().out_degree(v) == 10);
    CHECK_THROWS_AS((void)gen_regular_tournament(20, 3), GraphError);

    for (std::size_t d = 4; d <= 10; ++d)
        for (std::size_t levels = 1; levels <= d; ++levels) {
            auto l = gen_layered(d, levels, d * 31 + levels);
            CHECK(l.digraph.is_tournament());
            CHECK(l.digraph.min_out_degree() >= d);
        }
    CHECK_THROWS_AS((void)gen_layered(3, 4, 1), GraphError);
}
