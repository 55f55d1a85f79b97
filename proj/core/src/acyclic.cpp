#include <sminor/acyclic.hpp>

#include <algorithm>

namespace sminor {

std::optional<std::vector<Vertex>> topological_order(const Digraph & d, const VertexSet & within)
{
    std::vector<std::size_t> indeg(d.size(), 0);
    VertexSet ready(d.size());
    for (Vertex v : within) {
        indeg[v] = d.in_degree(v, within);
        if (indeg[v] == 0)
            ready.insert(v);
    }
    std::vector<Vertex> order;
    order.reserve(within.size());
    while (!ready.empty()) {
        Vertex v = ready.first();
        ready.erase(v);
        order.push_back(v);
        for (Vertex w : d.out(v) & within)
            if (--indeg[w] == 0)
                ready.insert(w);
    }
    if (order.size() != within.size())
        return std::nullopt;
    return order;
}

bool is_acyclic(const Digraph & d, const VertexSet & within)
{
    return topological_order(d, within).has_value();
}

namespace {

    // Closed range of valid insertion positions for c.
    std::optional<std::pair<std::size_t, std::size_t>> insertion_range(const Digraph & d,
                                                                       const std::vector<Vertex> & order, Vertex c)
    {
        std::size_t after = 0; // one past the last in-neighbour
        std::size_t before = order.size(); // first out-neighbour
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (d.has_edge(order[i], c))
                after = i + 1;
            if (before == order.size() && d.has_edge(c, order[i]))
                before = i;
        }
        if (after > before)
            return std::nullopt;
        return std::pair{after, before};
    }

} // namespace

std::optional<std::size_t> insertion_position(const Digraph & d, const std::vector<Vertex> & order, Vertex c)
{
    if (auto r = insertion_range(d, order, c))
        return r->first;
    return std::nullopt;
}

namespace {

    void insert_at(std::vector<Vertex> & order, std::size_t p, Vertex c)
    {
        order.insert(order.begin() + static_cast<std::ptrdiff_t>(p), c);
    }

    AcyclicSet finish(const Digraph & d, std::vector<Vertex> order)
    {
        AcyclicSet s;
        s.vertices = VertexSet(d.size(), std::span<const Vertex>(order));
        s.order = std::move(order);
        return s;
    }

} // namespace

AcyclicSet maximal_acyclic_set(const Digraph & d, const VertexSet & within, const std::vector<Vertex> & scan_order)
{
    std::vector<Vertex> scan = scan_order.empty() ? within.to_vector() : scan_order;
    std::vector<Vertex> order;
    VertexSet taken(d.size());
    for (Vertex c : scan) {
        if (!within.contains(c) || taken.contains(c))
            continue;
        if (auto p = insertion_position(d, order, c)) {
            insert_at(order, *p, c);
            taken.insert(c);
        }
    }
    return finish(d, std::move(order));
}

AcyclicSet maximal_acyclic_set(const Digraph & d)
{
    return maximal_acyclic_set(d, d.vertices());
}

AcyclicSet extend_acyclic_set(const Digraph & d, std::vector<Vertex> base, const VertexSet & candidates,
                              std::size_t min_position)
{
    VertexSet taken(d.size(), std::span<const Vertex>(base));
    for (Vertex c : candidates) {
        if (taken.contains(c))
            continue;
        auto r = insertion_range(d, base, c);
        if (r && r->second >= min_position) {
            insert_at(base, std::max(r->first, min_position), c);
            taken.insert(c);
        }
    }
    return finish(d, std::move(base));
}

AcyclicSet maximal_acyclic_set_with_sink(const Tournament & t, Vertex sink, const VertexSet & within)
{
    if (!within.contains(sink))
        throw GraphError("sink outside the vertex set");
    const Digraph & d = t.graph();
    std::vector<Vertex> order{sink};
    for (Vertex c : within) {
        if (c == sink)
            continue;
        auto p = insertion_position(d, order, c);
        if (p && *p < order.size())
            insert_at(order, *p, c);
    }
    return finish(d, std::move(order));
}

AcyclicSet maximal_acyclic_set_with_sink(const Tournament & t, Vertex sink)
{
    return maximal_acyclic_set_with_sink(t, sink, t.graph().vertices());
}

} // namespace sminor
