#include <sminor/acyclic.hpp>
#include <sminor/connectivity.hpp>
#include <sminor/witness.hpp>

#include <algorithm>

namespace sminor {

std::size_t PartialMinorWitness::m() const
{
    return static_cast<std::size_t>(std::count(strong_flags.begin(), strong_flags.end(), true));
}

std::vector<VertexSet> Coloring::classes() const
{
    std::vector<VertexSet> out(k, VertexSet(color.size()));
    for (Vertex v = 0; v < color.size(); ++v)
        if (color[v] != no_color && color[v] < k)
            out[color[v]].insert(v);
    return out;
}

bool is_weakly_connected(const Digraph & d, const VertexSet & within)
{
    Vertex s = within.first();
    if (s == no_vertex)
        return false;
    VertexSet seen(d.size(), {s});
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next(d.size());
        for (Vertex v : frontier) {
            next |= d.out(v);
            next |= d.in(v);
        }
        next &= within;
        next -= seen;
        seen |= next;
        frontier = std::move(next);
    }
    return seen == within;
}

namespace {

    std::string set_name(std::size_t i) { return "branch set " + std::to_string(i); }

    Verdict check_family(const Digraph & d, const std::vector<VertexSet> & sets)
    {
        VertexSet used(d.size());
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if (sets[i].universe() != d.size())
                return Verdict::fail(set_name(i) + " has universe " + std::to_string(sets[i].universe())
                                     + ", expected " + std::to_string(d.size()));
            if (sets[i].empty())
                return Verdict::fail(set_name(i) + " is empty");
            Vertex clash = (used & sets[i]).first();
            if (clash != no_vertex)
                return Verdict::fail(set_name(i) + " overlaps an earlier set at vertex " + std::to_string(clash));
            used |= sets[i];
        }
        return Verdict::pass();
    }

    Verdict check_edges(const Digraph & d, const std::vector<VertexSet> & sets)
    {
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (std::size_t j = 0; j < sets.size(); ++j)
                if (i != j && !d.has_edge_between(sets[i], sets[j]))
                    return Verdict::fail("no edge from " + set_name(i) + " to " + set_name(j));
        return Verdict::pass();
    }

} // namespace

Verdict verify_strong_minor(const Digraph & d, const StrongMinorWitness & w)
{
    if (auto v = check_family(d, w.branch_sets); !v)
        return v;
    for (std::size_t i = 0; i < w.branch_sets.size(); ++i)
        if (!is_strongly_connected(d, w.branch_sets[i]))
            return Verdict::fail(set_name(i) + " is not strongly connected");
    return check_edges(d, w.branch_sets);
}

Verdict verify_weak_minor(const Digraph & d, const WeakMinorWitness & w)
{
    if (auto v = check_family(d, w.branch_sets); !v)
        return v;
    for (std::size_t i = 0; i < w.branch_sets.size(); ++i)
        if (!is_weakly_connected(d, w.branch_sets[i]))
            return Verdict::fail(set_name(i) + " is not weakly connected");
    return check_edges(d, w.branch_sets);
}

Verdict verify_template(const Digraph & d, const TemplateWitness & w)
{
    if (auto v = check_family(d, w.parts); !v)
        return v;
    return check_edges(d, w.parts);
}

Verdict verify_partial_minor(const Digraph & d, const PartialMinorWitness & w)
{
    if (w.strong_flags.size() != w.branch_sets.size())
        return Verdict::fail("flag count differs from branch set count");
    if (auto v = check_family(d, w.branch_sets); !v)
        return v;
    for (std::size_t i = 0; i < w.branch_sets.size(); ++i)
        if (w.strong_flags[i] && !is_strongly_connected(d, w.branch_sets[i]))
            return Verdict::fail(set_name(i) + " is flagged strong but is not strongly connected");
    return check_edges(d, w.branch_sets);
}

Verdict verify_coloring(const Digraph & d, const Coloring & c, const VertexSet & within)
{
    if (c.color.size() != d.size())
        return Verdict::fail("coloring has " + std::to_string(c.color.size()) + " entries, expected "
                             + std::to_string(d.size()));
    for (Vertex v : within)
        if (c.color[v] == no_color || c.color[v] >= c.k)
            return Verdict::fail("vertex " + std::to_string(v) + " has no colour below " + std::to_string(c.k));
    auto classes = c.classes();
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (!is_acyclic(d, classes[i] & within))
            return Verdict::fail("colour class " + std::to_string(i) + " contains a directed cycle");
    return Verdict::pass();
}

Verdict verify_coloring(const Digraph & d, const Coloring & c)
{
    return verify_coloring(d, c, d.vertices());
}

Verdict verify_linkage(const Digraph & d, const std::vector<Vertex> & sources, const std::vector<Vertex> & sinks,
                       const Linkage & l)
{
    if (sources.size() != sinks.size() || l.paths.size() != sources.size())
        return Verdict::fail("path count differs from terminal pair count");
    VertexSet used(d.size());
    for (std::size_t i = 0; i < l.paths.size(); ++i) {
        const auto & p = l.paths[i];
        const std::string name = "path " + std::to_string(i);
        if (p.empty() || p.front() != sources[i] || p.back() != sinks[i])
            return Verdict::fail(name + " does not join its terminals");
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (p[j] >= d.size())
                return Verdict::fail(name + " leaves the vertex range");
            if (used.contains(p[j]))
                return Verdict::fail(name + " reuses vertex " + std::to_string(p[j]));
            used.insert(p[j]);
            if (j > 0 && !d.has_edge(p[j - 1], p[j]))
                return Verdict::fail(name + " uses missing edge " + std::to_string(p[j - 1]) + "->"
                                     + std::to_string(p[j]));
        }
    }
    return Verdict::pass();
}

} // namespace sminor
