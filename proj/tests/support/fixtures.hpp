#pragma once

#include <sminor/connectivity.hpp>
#include <sminor/constructions.hpp>
#include <sminor/digraph.hpp>

#include <vector>

namespace fixtures {

using sminor::Digraph;
using sminor::Edge;

inline Digraph make(std::size_t n, std::vector<Edge> edges)
{
    return Digraph(n, edges);
}

/// 0 -> 1 -> 2 -> 0
inline Digraph cycle3()
{
    return make(3, {{0, 1}, {1, 2}, {2, 0}});
}

inline Digraph directed_cycle(std::size_t n)
{
    Digraph d(n);
    for (std::size_t v = 0; v < n; ++v)
        d.add_edge(v, (v + 1) % n);
    return d;
}

/// Strongly connected random tournament on n vertices, the first seed from
/// `seed` upwards that yields one.
inline sminor::Tournament strong_tournament(std::size_t n, std::uint64_t seed)
{
    while (true) {
        auto t = sminor::gen_random_tournament(n, seed++);
        if (sminor::is_strongly_connected(t.graph()))
            return t;
    }
}

} // namespace fixtures
