#include <sminor/digraph.hpp>

#include <algorithm>

namespace sminor {

Digraph::Digraph(std::size_t n) : out_(n, VertexSet(n)), in_(n, VertexSet(n)) {}

Digraph::Digraph(std::size_t n, std::span<const Edge> edges) : Digraph(n)
{
    for (const auto & e : edges)
        add_edge(e.from, e.to);
}

void Digraph::add_edge(Vertex u, Vertex v)
{
    if (u >= size() || v >= size())
        throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + "): index out of range");
    if (u == v)
        throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + "): loop");
    if (out_[u].contains(v))
        throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + "): duplicate edge");
    out_[u].insert(v);
    in_[v].insert(u);
    ++edge_count_;
}

std::size_t Digraph::out_degree(Vertex v, const VertexSet & within) const
{
    return (out_[v] & within).size();
}

std::size_t Digraph::in_degree(Vertex v, const VertexSet & within) const
{
    return (in_[v] & within).size();
}

std::size_t Digraph::min_out_degree(const VertexSet & within) const
{
    std::size_t best = within.empty() ? 0 : size();
    for (Vertex v : within)
        best = std::min(best, out_degree(v, within));
    return best;
}

std::vector<Edge> Digraph::edges() const
{
    std::vector<Edge> result;
    result.reserve(edge_count_);
    for (Vertex u = 0; u < size(); ++u)
        for (Vertex v : out_[u])
            result.push_back({u, v});
    return result;
}

bool Digraph::is_tournament() const
{
    for (Vertex u = 0; u < size(); ++u) {
        if (out_[u].intersects(in_[u]))
            return false;
        if (out_[u].size() + in_[u].size() != size() - 1)
            return false;
    }
    return true;
}

bool Digraph::has_digon() const
{
    for (Vertex u = 0; u < size(); ++u)
        if (out_[u].intersects(in_[u]))
            return true;
    return false;
}

VertexSet Digraph::out_of(const VertexSet & s) const
{
    VertexSet r(size());
    for (Vertex v : s)
        r |= out_[v];
    return r;
}

VertexSet Digraph::in_of(const VertexSet & s) const
{
    VertexSet r(size());
    for (Vertex v : s)
        r |= in_[v];
    return r;
}

bool Digraph::has_edge_between(const VertexSet & a, const VertexSet & b) const
{
    for (Vertex v : a)
        if (out_[v].intersects(b))
            return true;
    return false;
}

VertexSet InducedSubgraph::lift(const VertexSet & local, std::size_t parent_size) const
{
    VertexSet r(parent_size);
    for (Vertex v : local)
        r.insert(original[v]);
    return r;
}

std::vector<Vertex> InducedSubgraph::lift(const std::vector<Vertex> & local) const
{
    std::vector<Vertex> r;
    r.reserve(local.size());
    for (Vertex v : local)
        r.push_back(original[v]);
    return r;
}

InducedSubgraph induced_subgraph(const Digraph & d, const VertexSet & keep)
{
    InducedSubgraph sub;
    sub.original = keep.to_vector();
    std::vector<Vertex> local(d.size(), no_vertex);
    for (std::size_t i = 0; i < sub.original.size(); ++i)
        local[sub.original[i]] = i;
    sub.graph = Digraph(sub.original.size());
    for (std::size_t i = 0; i < sub.original.size(); ++i)
        for (Vertex w : d.out(sub.original[i]) & keep)
            sub.graph.add_edge(i, local[w]);
    return sub;
}

Tournament::Tournament(Digraph d) : graph_(std::move(d))
{
    if (!graph_.is_tournament())
        throw GraphError("not a tournament");
}

} // namespace sminor
