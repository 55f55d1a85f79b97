#include <sminor/connectivity.hpp>

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace sminor {

VertexSet SccDecomposition::source_set() const
{
    VertexSet r(part_of.size());
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        r |= parts[i];
    return r;
}

SccDecomposition scc_decompose(const Digraph & d, const VertexSet & within)
{
    if (within.empty())
        throw GraphError("empty");

    const std::size_t n = d.size();
    std::vector<std::size_t> index(n, no_vertex);
    std::vector<std::size_t> low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<Vertex> stack;
    std::vector<VertexSet> reversed_parts;

    struct Frame {
        Vertex v;
        VertexSet pending;
    };
    std::vector<Frame> calls;
    std::size_t counter = 0;

    auto open = [&](Vertex v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        calls.push_back({v, d.out(v) & within});
    };

    for (Vertex s : within) {
        if (index[s] != no_vertex)
            continue;
        open(s);
        while (!calls.empty()) {
            auto & frame = calls.back();
            Vertex w = frame.pending.first();
            if (w != no_vertex) {
                frame.pending.erase(w);
                if (index[w] == no_vertex)
                    open(w);
                else if (on_stack[w])
                    low[frame.v] = std::min(low[frame.v], index[w]);
                continue;
            }
            Vertex v = frame.v;
            calls.pop_back();
            if (!calls.empty())
                low[calls.back().v] = std::min(low[calls.back().v], low[v]);
            if (low[v] == index[v]) {
                VertexSet part(n);
                Vertex x;
                do {
                    x = stack.back();
                    stack.pop_back();
                    on_stack[x] = false;
                    part.insert(x);
                } while (x != v);
                reversed_parts.push_back(std::move(part));
            }
        }
    }

    SccDecomposition result;
    result.parts.assign(reversed_parts.rbegin(), reversed_parts.rend());
    result.part_of.assign(n, no_vertex);
    for (std::size_t i = 0; i < result.parts.size(); ++i)
        for (Vertex v : result.parts[i])
            result.part_of[v] = i;
    return result;
}

SccDecomposition scc_decompose(const Digraph & d)
{
    return scc_decompose(d, d.vertices());
}

VertexSet reachable(const Digraph & d, const VertexSet & from, const VertexSet & within, Direction dir)
{
    VertexSet seen = from & within;
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next(d.size());
        for (Vertex v : frontier)
            next |= (dir == Direction::out ? d.out(v) : d.in(v));
        next &= within;
        next -= seen;
        seen |= next;
        frontier = std::move(next);
    }
    return seen;
}

bool is_strongly_connected(const Digraph & d, const VertexSet & within)
{
    Vertex s = within.first();
    if (s == no_vertex)
        throw GraphError("empty");
    VertexSet start(d.size(), {s});
    return reachable(d, start, within, Direction::out) == within
        && reachable(d, start, within, Direction::in) == within;
}

bool is_strongly_connected(const Digraph & d)
{
    return is_strongly_connected(d, d.vertices());
}

namespace {

    // Unit-capacity vertex-split network: vertex v becomes v_in = 2v and
    // v_out = 2v + 1 joined by a capacity-1 arc; original edges get capacity
    // "infinite" (n).
    class SplitNetwork {
    public:
        explicit SplitNetwork(const Digraph & g) : n_(g.size()), head_(2 * g.size(), no_vertex)
        {
            for (Vertex v = 0; v < n_; ++v)
                add_arc(2 * v, 2 * v + 1, 1);
            for (Vertex u = 0; u < n_; ++u)
                for (Vertex w : g.out(u))
                    add_arc(2 * u + 1, 2 * w, n_);
            base_cap_ = cap_;
        }

        // Max number of internally vertex-disjoint s->t paths, capped.
        std::size_t flow(Vertex s, Vertex t, std::size_t cap)
        {
            cap_ = base_cap_;
            const std::size_t source = 2 * s + 1;
            const std::size_t sink = 2 * t;
            std::size_t total = 0;
            std::vector<std::size_t> via(2 * n_);
            while (total < cap) {
                std::fill(via.begin(), via.end(), no_vertex);
                std::deque<std::size_t> queue{source};
                via[source] = source;
                while (!queue.empty() && via[sink] == no_vertex) {
                    auto x = queue.front();
                    queue.pop_front();
                    for (auto a = head_[x]; a != no_vertex; a = next_[a]) {
                        if (cap_[a] == 0 || via[to_[a]] != no_vertex)
                            continue;
                        via[to_[a]] = a;
                        queue.push_back(to_[a]);
                    }
                }
                if (via[sink] == no_vertex)
                    break;
                for (auto x = sink; x != source;) {
                    auto a = via[x];
                    --cap_[a];
                    ++cap_[a ^ 1U];
                    x = to_[a ^ 1U];
                }
                ++total;
            }
            return total;
        }

        // After flow(): split vertices whose in-node is reachable from the
        // source in the residual network but whose out-node is not.
        VertexSet residual_cut(Vertex s) const
        {
            std::vector<bool> seen(2 * n_, false);
            std::deque<std::size_t> queue{2 * s + 1};
            seen[2 * s + 1] = true;
            while (!queue.empty()) {
                auto x = queue.front();
                queue.pop_front();
                for (auto a = head_[x]; a != no_vertex; a = next_[a])
                    if (cap_[a] > 0 && !seen[to_[a]]) {
                        seen[to_[a]] = true;
                        queue.push_back(to_[a]);
                    }
            }
            VertexSet cut(n_);
            for (Vertex v = 0; v < n_; ++v)
                if (seen[2 * v] && !seen[2 * v + 1])
                    cut.insert(v);
            return cut;
        }

    private:
        void add_arc(std::size_t from, std::size_t to, std::size_t c)
        {
            for (auto [a, b, cc] : {std::tuple{from, to, c}, std::tuple{to, from, std::size_t{0}}}) {
                to_.push_back(b);
                cap_.push_back(cc);
                next_.push_back(head_[a]);
                head_[a] = to_.size() - 1;
            }
        }

        std::size_t n_;
        std::vector<std::size_t> head_;
        std::vector<std::size_t> to_;
        std::vector<std::size_t> next_;
        std::vector<std::size_t> cap_;
        std::vector<std::size_t> base_cap_;
    };

} // namespace

VertexCut min_vertex_cut(const Digraph & d, const VertexSet & within, std::size_t cap)
{
    if (within.empty())
        throw GraphError("empty");
    VertexCut result;
    result.cut = VertexSet(d.size());
    if (!is_strongly_connected(d, within))
        return result;

    auto sub = induced_subgraph(d, within);
    const auto & g = sub.graph;
    const std::size_t k = g.size();
    result.size = k - 1;
    result.complete = true;

    SplitNetwork net(g);
    Vertex best_s = no_vertex;
    Vertex best_t = no_vertex;
    std::size_t best = k - 1;
    for (Vertex s = 0; s < k; ++s)
        for (Vertex t = 0; t < k; ++t) {
            if (s == t || g.has_edge(s, t))
                continue;
            result.complete = false;
            const std::size_t limit = std::min(best, cap);
            std::size_t f = net.flow(s, t, limit);
            if (f < limit || (best_s == no_vertex && f <= best)) {
                best = f;
                best_s = s;
                best_t = t;
            }
        }

    result.size = std::min(best, cap);
    if (result.complete)
        return result;
    if (best < cap) {
        (void)net.flow(best_s, best_t, best + 1);
        result.cut = sub.lift(net.residual_cut(best_s), d.size());
    }
    return result;
}

bool is_k_strongly_connected(const Digraph & d, std::size_t k, const VertexSet & within)
{
    if (k == 0)
        throw GraphError("k must be positive");
    if (within.size() < k + 1)
        return false;
    auto cut = min_vertex_cut(d, within, k);
    return cut.complete || cut.size >= k;
}

bool is_k_strongly_connected(const Digraph & d, std::size_t k)
{
    return is_k_strongly_connected(d, k, d.vertices());
}

bool is_k_strongly_connected_exhaustive(const Digraph & d, std::size_t k)
{
    if (k == 0)
        throw GraphError("k must be positive");
    const std::size_t n = d.size();
    if (n < k + 1)
        return false;
    // Enumerate removal sets of size 0..k-1 in lexicographic order.
    std::vector<Vertex> chosen;
    bool ok = true;
    auto recurse = [&](auto & self, Vertex start) -> void {
        if (!ok)
            return;
        VertexSet rest = d.vertices();
        for (Vertex v : chosen)
            rest.erase(v);
        if (!is_strongly_connected(d, rest)) {
            ok = false;
            return;
        }
        if (chosen.size() + 1 > k - 1)
            return;
        for (Vertex v = start; v < n; ++v) {
            chosen.push_back(v);
            self(self, v + 1);
            chosen.pop_back();
        }
    };
    recurse(recurse, 0);
    return ok;
}

std::vector<Vertex> BfsTree::path(Vertex v) const
{
    if (!contains(v))
        throw GraphError("vertex " + std::to_string(v) + " is not in the tree");
    std::vector<Vertex> p{v};
    while (p.back() != root)
        p.push_back(parent[p.back()]);
    if (direction == Direction::out)
        std::reverse(p.begin(), p.end());
    return p;
}

BfsTree bfs_tree(const Digraph & d, Vertex root, Direction dir, const VertexSet & within)
{
    if (!within.contains(root))
        throw GraphError("root outside the vertex set");
    BfsTree tree;
    tree.root = root;
    tree.direction = dir;
    tree.parent.assign(d.size(), no_vertex);
    tree.layer.assign(d.size(), no_vertex);
    tree.layer[root] = 0;
    tree.layers.emplace_back(d.size(), std::initializer_list<Vertex>{root});
    VertexSet seen(d.size(), {root});
    while (true) {
        VertexSet next(d.size());
        for (Vertex v : tree.layers.back()) {
            VertexSet nb = (dir == Direction::out ? d.out(v) : d.in(v)) & within;
            nb -= seen;
            nb -= next;
            for (Vertex w : nb) {
                tree.parent[w] = v;
                tree.layer[w] = tree.layers.size();
            }
            next |= nb;
        }
        if (next.empty())
            break;
        seen |= next;
        tree.layers.push_back(std::move(next));
    }
    if (seen != within)
        throw GraphError("not strongly connected");
    return tree;
}

BfsTree bfs_tree(const Digraph & d, Vertex root, Direction dir)
{
    return bfs_tree(d, root, dir, d.vertices());
}

std::vector<Vertex> shortest_path_to_set(const Digraph & d, Vertex from, const VertexSet & targets,
                                         const VertexSet & within)
{
    if (!within.contains(from))
        throw GraphError("start vertex outside the vertex set");
    if (targets.contains(from))
        return {from};
    std::vector<Vertex> parent(d.size(), no_vertex);
    VertexSet seen(d.size(), {from});
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next(d.size());
        for (Vertex v : frontier) {
            VertexSet nb = d.out(v) & within;
            nb -= seen;
            nb -= next;
            for (Vertex w : nb)
                parent[w] = v;
            next |= nb;
        }
        Vertex hit = (next & targets).first();
        if (hit != no_vertex) {
            std::vector<Vertex> p{hit};
            while (p.back() != from)
                p.push_back(parent[p.back()]);
            std::reverse(p.begin(), p.end());
            return p;
        }
        seen |= next;
        frontier = std::move(next);
    }
    throw GraphError("target unreachable from " + std::to_string(from));
}

std::vector<Vertex> shortest_path(const Digraph & d, Vertex from, Vertex to, const VertexSet & within)
{
    return shortest_path_to_set(d, from, VertexSet(d.size(), {to}), within);
}

std::vector<Vertex> shortest_path(const Digraph & d, Vertex from, Vertex to)
{
    return shortest_path(d, from, to, d.vertices());
}

bool is_backward_closed(const Digraph & d, const std::vector<Vertex> & path)
{
    for (std::size_t i = 0; i < path.size(); ++i)
        for (std::size_t j = i + 2; j < path.size(); ++j)
            if (!d.has_edge(path[j], path[i]))
                return false;
    return true;
}

std::vector<Vertex> shortest_path(const Tournament & t, Vertex from, Vertex to, const VertexSet & within)
{
    auto p = shortest_path(t.graph(), from, to, within);
    if (!is_backward_closed(t.graph(), p))
        throw std::logic_error("shortest path in a tournament has a forward chord");
    return p;
}

bool dominates(const Digraph & d, const VertexSet & s, DominationMode mode, const VertexSet & within)
{
    const VertexSet outside = within - s;
    if (mode != DominationMode::in) {
        // every outside vertex needs an in-neighbour in S
        if (!(outside - d.out_of(s)).empty())
            return false;
    }
    if (mode != DominationMode::out) {
        if (!(outside - d.in_of(s)).empty())
            return false;
    }
    return true;
}

bool dominates(const Digraph & d, const VertexSet & s, DominationMode mode)
{
    return dominates(d, s, mode, d.vertices());
}

} // namespace sminor
