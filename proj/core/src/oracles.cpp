#include <sminor/connectivity.hpp>
#include <sminor/oracles.hpp>

#include <algorithm>
#include <bit>
#include <numeric>

namespace sminor {

const char * to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::found:
        return "found";
    case SearchStatus::none:
        return "none";
    case SearchStatus::budget_exceeded:
        return "budget-exceeded";
    }
    return "unknown";
}

namespace {

    using Mask = std::uint64_t;

    inline Mask bit(Vertex v) { return Mask{1} << v; }

    inline Vertex low_vertex(Mask m) { return static_cast<Vertex>(std::countr_zero(m)); }

    inline std::size_t popcount(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

    /// D[within] relabelled to [0, k) with adjacency as 64-bit masks.
    struct MaskGraph {
        std::vector<Vertex> original;
        std::vector<Mask> out;
        std::vector<Mask> in;

        [[nodiscard]] std::size_t size() const { return original.size(); }
        [[nodiscard]] Mask all() const { return size() == 64 ? ~Mask{0} : (bit(size()) - 1); }

        [[nodiscard]] VertexSet lift(Mask m, std::size_t universe) const
        {
            VertexSet s(universe);
            for (; m != 0; m &= m - 1)
                s.insert(original[low_vertex(m)]);
            return s;
        }
    };

    MaskGraph mask_graph(const Digraph & d, const VertexSet & within, const char * who)
    {
        if (within.size() > max_exact_vertices)
            throw GraphError(std::string(who) + " is limited to " + std::to_string(max_exact_vertices)
                             + " vertices");
        MaskGraph g;
        g.original = within.to_vector();
        std::vector<Vertex> local(d.size(), no_vertex);
        for (std::size_t i = 0; i < g.original.size(); ++i)
            local[g.original[i]] = i;
        g.out.assign(g.size(), 0);
        g.in.assign(g.size(), 0);
        for (std::size_t i = 0; i < g.size(); ++i)
            for (Vertex w : d.out(g.original[i]) & within) {
                g.out[i] |= bit(local[w]);
                g.in[local[w]] |= bit(i);
            }
        return g;
    }

    Mask forward_closure(const std::vector<Mask> & adj, Mask start, Mask within)
    {
        Mask seen = start & within;
        Mask frontier = seen;
        while (frontier != 0) {
            Mask next = 0;
            for (Mask f = frontier; f != 0; f &= f - 1)
                next |= adj[low_vertex(f)];
            next &= within & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen;
    }

    /// True when adding v to the acyclic class `cls` creates a directed cycle.
    bool closes_cycle(const MaskGraph & g, Vertex v, Mask cls)
    {
        Mask start = g.out[v] & cls;
        Mask target = g.in[v] & cls;
        if (start == 0 || target == 0)
            return false;
        if ((start & target) != 0)
            return true;
        return (forward_closure(g.out, start, cls) & target) != 0;
    }

    bool mask_strongly_connected(const MaskGraph & g, Mask s)
    {
        Mask root = s & (~s + 1);
        return forward_closure(g.out, root, s) == s && forward_closure(g.in, root, s) == s;
    }

    bool mask_acyclic(const MaskGraph & g, Mask s)
    {
        Mask cls = 0;
        for (Mask m = s; m != 0; m &= m - 1) {
            Vertex v = low_vertex(m);
            if (closes_cycle(g, v, cls))
                return false;
            cls |= bit(v);
        }
        return true;
    }

    class BudgetExceeded {};

    class Budget {
    public:
        explicit Budget(std::uint64_t limit) : limit_(limit) {}
        void spend(std::uint64_t n = 1)
        {
            used_ += n;
            if (used_ > limit_)
                throw BudgetExceeded{};
        }

    private:
        std::uint64_t limit_;
        std::uint64_t used_ = 0;
    };

    // ---- dichromatic number ------------------------------------------------

    class ChiSearch {
    public:
        ChiSearch(const MaskGraph & g, std::size_t k, Budget & budget)
            : g_(g), k_(k), budget_(budget), classes_(k, 0), color_(g.size(), no_color)
        {
        }

        bool run() { return extend(0, g_.all()); }

        [[nodiscard]] const std::vector<std::size_t> & colors() const { return color_; }

    private:
        bool extend(std::size_t used, Mask uncoloured)
        {
            budget_.spend();
            if (uncoloured == 0)
                return true;

            Vertex pick = no_vertex;
            Mask pick_options = 0;
            std::size_t pick_count = 0;
            std::size_t pick_degree = 0;
            for (Mask m = uncoloured; m != 0; m &= m - 1) {
                Vertex v = low_vertex(m);
                Mask options = 0;
                for (std::size_t c = 0; c < used; ++c)
                    if (!closes_cycle(g_, v, classes_[c]))
                        options |= bit(c);
                if (used < k_)
                    options |= bit(used);
                std::size_t count = popcount(options);
                std::size_t degree = popcount((g_.out[v] | g_.in[v]) & uncoloured);
                if (pick == no_vertex || count < pick_count || (count == pick_count && degree > pick_degree)) {
                    pick = v;
                    pick_options = options;
                    pick_count = count;
                    pick_degree = degree;
                }
                if (count == 0)
                    return false;
            }

            for (Mask o = pick_options; o != 0; o &= o - 1) {
                std::size_t c = low_vertex(o);
                classes_[c] |= bit(pick);
                color_[pick] = c;
                if (extend(std::max(used, c + 1), uncoloured & ~bit(pick)))
                    return true;
                classes_[c] &= ~bit(pick);
                color_[pick] = no_color;
            }
            return false;
        }

        const MaskGraph & g_;
        std::size_t k_;
        Budget & budget_;
        std::vector<Mask> classes_;
        std::vector<std::size_t> color_;
    };

    // ---- disjoint family search -------------------------------------------

    /// Largest family of pairwise compatible candidate sets (up to `target`).
    /// Candidates must be sorted by size ascending; `compat` takes indices.
    template <class Compatible>
    class FamilySearch {
    public:
        FamilySearch(const std::vector<Mask> & sets, std::size_t n, std::size_t target, Compatible compat,
                     Budget & budget)
            : sets_(sets), n_(n), target_(target), compat_(compat), budget_(budget)
        {
        }

        /// Seeds the incumbent (e.g. a singleton family).
        void seed(std::vector<std::size_t> family) { best_ = std::move(family); }

        void run()
        {
            std::vector<std::size_t> all(sets_.size());
            std::iota(all.begin(), all.end(), std::size_t{0});
            std::vector<std::size_t> chosen;
            grow(chosen, all, 0);
        }

        [[nodiscard]] const std::vector<std::size_t> & best() const { return best_; }

    private:
        void grow(std::vector<std::size_t> & chosen, const std::vector<std::size_t> & cand, Mask used)
        {
            budget_.spend();
            if (chosen.size() > best_.size())
                best_ = chosen;
            if (best_.size() >= target_)
                return;
            const std::size_t free = n_ - popcount(used);
            for (std::size_t pos = 0; pos < cand.size(); ++pos) {
                if (best_.size() >= target_)
                    return;
                if (chosen.size() + (cand.size() - pos) <= best_.size())
                    return;
                const std::size_t i = cand[pos];
                const std::size_t need = best_.size() + 1 - chosen.size();
                if (need * popcount(sets_[i]) > free)
                    return;
                std::vector<std::size_t> next;
                budget_.spend((cand.size() - pos) / 64);
                for (std::size_t q = pos + 1; q < cand.size(); ++q)
                    if (compat_(i, cand[q]))
                        next.push_back(cand[q]);
                chosen.push_back(i);
                grow(chosen, next, used | sets_[i]);
                chosen.pop_back();
            }
        }

        const std::vector<Mask> & sets_;
        std::size_t n_;
        std::size_t target_;
        Compatible compat_;
        Budget & budget_;
        std::vector<std::size_t> best_;
    };

    std::vector<Mask> sort_by_size(std::vector<Mask> sets)
    {
        std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) {
            auto pa = popcount(a);
            auto pb = popcount(b);
            return pa != pb ? pa < pb : a < b;
        });
        return sets;
    }

    inline constexpr std::size_t max_subset_enumeration = 30;

} // namespace

Coloring greedy_coloring(const Digraph & d, const VertexSet & within)
{
    Coloring c;
    c.color.assign(d.size(), no_color);
    VertexSet rest = within;
    while (!rest.empty()) {
        auto a = maximal_acyclic_set(d, rest);
        for (Vertex v : a.vertices)
            c.color[v] = c.k;
        ++c.k;
        rest -= a.vertices;
    }
    return c;
}

ChiResult exact_chi(const Digraph & d, const VertexSet & within, std::uint64_t node_budget)
{
    ChiResult result;
    result.coloring = greedy_coloring(d, within);
    result.upper = result.coloring.k;
    if (within.empty())
        return result;

    const MaskGraph g = mask_graph(d, within, "exact_chi");
    result.lower = mask_acyclic(g, g.all()) ? 1 : 2;
    Budget budget(node_budget);
    try {
        for (std::size_t k = result.lower; k < result.upper; ++k) {
            ChiSearch search(g, k, budget);
            if (search.run()) {
                result.coloring.k = k;
                std::fill(result.coloring.color.begin(), result.coloring.color.end(), no_color);
                for (std::size_t i = 0; i < g.size(); ++i)
                    result.coloring.color[g.original[i]] = search.colors()[i];
                result.upper = k;
                break;
            }
            result.lower = k + 1;
        }
    }
    catch (const BudgetExceeded &) {
        result.status = SearchStatus::budget_exceeded;
        result.chi = result.upper;
        return result;
    }
    result.lower = result.upper;
    result.chi = result.upper;
    return result;
}

ChiResult exact_chi(const Digraph & d, std::uint64_t node_budget)
{
    return exact_chi(d, d.vertices(), node_budget);
}

SmResult exact_sm(const Digraph & d, std::optional<std::size_t> max_r, std::uint64_t node_budget)
{
    SmResult result;
    const std::size_t n = d.size();
    result.upper = n;
    if (n == 0 || (max_r && *max_r == 0))
        return result;
    if (n > max_subset_enumeration)
        throw GraphError("exact_sm is limited to " + std::to_string(max_subset_enumeration) + " vertices");

    const MaskGraph g = mask_graph(d, d.vertices(), "exact_sm");
    Budget budget(node_budget);
    std::vector<std::size_t> best;
    std::vector<Mask> sets;
    try {
        const Mask limit = g.all();
        for (Mask s = 1;; ++s) {
            if ((s & 0xFFFU) == 0)
                budget.spend();
            if (mask_strongly_connected(g, s))
                sets.push_back(s);
            if (s == limit)
                break;
        }
        sets = sort_by_size(std::move(sets));

        std::vector<Mask> out_union(sets.size(), 0);
        std::vector<Mask> in_union(sets.size(), 0);
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (Mask m = sets[i]; m != 0; m &= m - 1) {
                out_union[i] |= g.out[low_vertex(m)];
                in_union[i] |= g.in[low_vertex(m)];
            }
        auto compat = [&](std::size_t a, std::size_t b) {
            return (sets[a] & sets[b]) == 0 && (out_union[a] & sets[b]) != 0 && (in_union[a] & sets[b]) != 0;
        };
        FamilySearch search(sets, n, max_r.value_or(n), compat, budget);
        search.seed({0});
        try {
            search.run();
        }
        catch (const BudgetExceeded &) {
            best = search.best();
            throw;
        }
        best = search.best();
    }
    catch (const BudgetExceeded &) {
        result.status = SearchStatus::budget_exceeded;
    }

    if (best.empty() && !sets.empty())
        best = {0};
    if (best.empty()) {
        // budget ran out during enumeration: a singleton is always a K_1 minor
        result.witness.branch_sets.push_back(VertexSet(n, {0}));
    }
    for (std::size_t i : best)
        result.witness.branch_sets.push_back(g.lift(sets[i], n));
    result.r = result.witness.branch_sets.size();
    if (result.status == SearchStatus::found)
        result.upper = result.r;
    return result;
}

// ---- weak minors ---------------------------------------------------------

namespace {

    class WeakMinorSearch {
    public:
        WeakMinorSearch(const MaskGraph & g, std::size_t r, Budget & budget)
            : g_(g), r_(r), budget_(budget), sets_(r, 0), sat_(r * r, false), unsatisfied_(r * (r - 1))
        {
        }

        bool run() { return assign(0, 0); }

        [[nodiscard]] const std::vector<Mask> & sets() const { return sets_; }

    private:
        struct Undo {
            std::vector<std::size_t> flipped;
        };

        Undo place(Vertex v, std::size_t l)
        {
            Undo u;
            for (std::size_t j = 0; j < r_; ++j) {
                if (j == l || sets_[j] == 0)
                    continue;
                if (!sat_[l * r_ + j] && (g_.out[v] & sets_[j]) != 0) {
                    sat_[l * r_ + j] = true;
                    u.flipped.push_back(l * r_ + j);
                }
                if (!sat_[j * r_ + l] && (g_.in[v] & sets_[j]) != 0) {
                    sat_[j * r_ + l] = true;
                    u.flipped.push_back(j * r_ + l);
                }
            }
            unsatisfied_ -= u.flipped.size();
            sets_[l] |= bit(v);
            return u;
        }

        void unplace(Vertex v, std::size_t l, const Undo & u)
        {
            sets_[l] &= ~bit(v);
            for (auto f : u.flipped)
                sat_[f] = false;
            unsatisfied_ += u.flipped.size();
        }

        bool assign(Vertex v, std::size_t used)
        {
            budget_.spend();
            if (unsatisfied_ == 0 && used == r_)
                return true;
            const std::size_t remaining = g_.size() - v;
            if (used + remaining < r_)
                return false;
            if (unsatisfied_ > 2 * (r_ - 1) * remaining)
                return false;
            const std::size_t top = std::min(used + 1, r_);
            for (std::size_t l = 0; l < top; ++l) {
                auto undo = place(v, l);
                if (assign(v + 1, std::max(used, l + 1)))
                    return true;
                unplace(v, l, undo);
            }
            return assign(v + 1, used);
        }

        const MaskGraph & g_;
        std::size_t r_;
        Budget & budget_;
        std::vector<Mask> sets_;
        std::vector<bool> sat_;
        std::size_t unsatisfied_;
    };

    std::optional<std::vector<Mask>> greedy_weak_minor(const MaskGraph & g, std::size_t r)
    {
        if (g.size() < r)
            return std::nullopt;
        std::vector<Mask> sets(r, 0);
        for (std::size_t l = 0; l < r; ++l)
            sets[l] = bit(l);
        auto satisfied = [&](std::size_t i, std::size_t j) {
            for (Mask m = sets[i]; m != 0; m &= m - 1)
                if ((g.out[low_vertex(m)] & sets[j]) != 0)
                    return true;
            return false;
        };
        auto unsatisfied = [&] {
            std::size_t u = 0;
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j)
                    if (i != j && !satisfied(i, j))
                        ++u;
            return u;
        };
        std::size_t current = unsatisfied();
        for (Vertex v = r; v < g.size() && current > 0; ++v) {
            std::size_t best_label = r;
            std::size_t best_value = current;
            for (std::size_t l = 0; l < r; ++l) {
                sets[l] |= bit(v);
                std::size_t value = unsatisfied();
                sets[l] &= ~bit(v);
                if (value < best_value) {
                    best_value = value;
                    best_label = l;
                }
            }
            if (best_label < r) {
                sets[best_label] |= bit(v);
                current = best_value;
            }
        }
        if (current > 0)
            return std::nullopt;
        return sets;
    }

} // namespace

SearchResult<WeakMinorWitness> find_weak_minor(const Tournament & t, std::size_t r, const VertexSet & within,
                                               SearchMode mode, std::uint64_t node_budget)
{
    SearchResult<WeakMinorWitness> result;
    const Digraph & d = t.graph();
    if (r == 0) {
        result.status = SearchStatus::found;
        result.witness = WeakMinorWitness{};
        return result;
    }
    const MaskGraph g = mask_graph(d, within, "find_weak_minor");
    std::optional<std::vector<Mask>> sets;
    if (mode == SearchMode::greedy) {
        sets = greedy_weak_minor(g, r);
    }
    else {
        Budget budget(node_budget);
        WeakMinorSearch search(g, r, budget);
        try {
            if (search.run())
                sets = search.sets();
        }
        catch (const BudgetExceeded &) {
            result.status = SearchStatus::budget_exceeded;
            return result;
        }
    }
    if (!sets)
        return result;
    WeakMinorWitness w;
    for (Mask m : *sets)
        w.branch_sets.push_back(g.lift(m, d.size()));
    result.status = SearchStatus::found;
    result.witness = std::move(w);
    return result;
}

SearchResult<WeakMinorWitness> find_weak_minor(const Tournament & t, std::size_t r, SearchMode mode,
                                               std::uint64_t node_budget)
{
    return find_weak_minor(t, r, t.graph().vertices(), mode, node_budget);
}

// ---- linkages --------------------------------------------------------------

namespace {

    class LinkageSearch {
    public:
        LinkageSearch(const Digraph & d, const std::vector<Vertex> & sources, const std::vector<Vertex> & sinks,
                      const VertexSet & within, Budget & budget)
            : d_(d), sources_(sources), sinks_(sinks), within_(within), budget_(budget),
              terminals_(d.size()), paths_(sources.size())
        {
            for (std::size_t i = 0; i < sources.size(); ++i) {
                terminals_.insert(sources[i]);
                terminals_.insert(sinks[i]);
            }
        }

        bool run() { return route(0, VertexSet(d_.size())); }

        [[nodiscard]] const std::vector<std::vector<Vertex>> & paths() const { return paths_; }

    private:
        // Vertices pair i may use given the vertices already taken.
        [[nodiscard]] VertexSet allowed(std::size_t i, const VertexSet & taken) const
        {
            VertexSet a = within_ - taken - terminals_;
            a.insert(sources_[i]);
            a.insert(sinks_[i]);
            return a;
        }

        bool remaining_reachable(std::size_t from, const VertexSet & taken) const
        {
            for (std::size_t j = from; j < sources_.size(); ++j) {
                auto a = allowed(j, taken);
                if (!reachable(d_, VertexSet(d_.size(), {sources_[j]}), a).contains(sinks_[j]))
                    return false;
            }
            return true;
        }

        bool route(std::size_t i, const VertexSet & taken)
        {
            if (i == sources_.size())
                return true;
            const VertexSet a = allowed(i, taken);
            std::vector<Vertex> path{sources_[i]};
            VertexSet on_path(d_.size(), {sources_[i]});
            return walk(i, taken, a, path, on_path);
        }

        bool walk(std::size_t i, const VertexSet & taken, const VertexSet & a, std::vector<Vertex> & path,
                  VertexSet & on_path)
        {
            budget_.spend();
            Vertex u = path.back();
            if (u == sinks_[i]) {
                VertexSet next_taken = taken | on_path;
                if (!remaining_reachable(i + 1, next_taken))
                    return false;
                paths_[i] = path;
                return route(i + 1, next_taken);
            }
            VertexSet nb = d_.out(u) & a;
            nb -= on_path;
            for (Vertex w : nb) {
                path.push_back(w);
                on_path.insert(w);
                if (walk(i, taken, a, path, on_path))
                    return true;
                on_path.erase(w);
                path.pop_back();
            }
            return false;
        }

        const Digraph & d_;
        const std::vector<Vertex> & sources_;
        const std::vector<Vertex> & sinks_;
        const VertexSet & within_;
        Budget & budget_;
        VertexSet terminals_;
        std::vector<std::vector<Vertex>> paths_;
    };

} // namespace

SearchResult<Linkage> find_linkage(const Digraph & d, const std::vector<Vertex> & sources,
                                   const std::vector<Vertex> & sinks, const VertexSet & within,
                                   std::uint64_t node_budget)
{
    if (sources.size() != sinks.size())
        throw GraphError("linkage needs as many sinks as sources");
    VertexSet terminals(d.size());
    for (std::size_t i = 0; i < sources.size(); ++i)
        for (Vertex v : {sources[i], sinks[i]}) {
            if (v >= d.size() || !within.contains(v))
                throw GraphError("terminal " + std::to_string(v) + " outside the vertex set");
            if (terminals.contains(v))
                throw GraphError("terminal " + std::to_string(v) + " is repeated");
            terminals.insert(v);
        }
    SearchResult<Linkage> result;
    Budget budget(node_budget);
    LinkageSearch search(d, sources, sinks, within, budget);
    try {
        if (search.run()) {
            result.status = SearchStatus::found;
            result.witness = Linkage{search.paths()};
        }
    }
    catch (const BudgetExceeded &) {
        result.status = SearchStatus::budget_exceeded;
    }
    return result;
}

SearchResult<Linkage> find_linkage(const Digraph & d, const std::vector<Vertex> & sources,
                                   const std::vector<Vertex> & sinks, std::uint64_t node_budget)
{
    return find_linkage(d, sources, sinks, d.vertices(), node_budget);
}

// ---- undirected clique minors ---------------------------------------------

void Graph::add_edge(Vertex u, Vertex v)
{
    if (u >= size() || v >= size())
        throw GraphError("edge {" + std::to_string(u) + "," + std::to_string(v) + "}: index out of range");
    if (u == v)
        throw GraphError("edge {" + std::to_string(u) + "," + std::to_string(v) + "}: loop");
    adj_[u].insert(v);
    adj_[v].insert(u);
}

std::size_t Graph::edge_count() const
{
    std::size_t twice = 0;
    for (const auto & a : adj_)
        twice += a.size();
    return twice / 2;
}

bool is_connected(const Graph & g, const VertexSet & within)
{
    Vertex s = within.first();
    if (s == no_vertex)
        return false;
    VertexSet seen(g.size(), {s});
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next(g.size());
        for (Vertex v : frontier)
            next |= g.neighbours(v);
        next &= within;
        next -= seen;
        seen |= next;
        frontier = std::move(next);
    }
    return seen == within;
}

Verdict verify_clique_minor(const Graph & g, const CliqueMinorWitness & w)
{
    VertexSet used(g.size());
    const auto & sets = w.branch_sets;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const std::string name = "branch set " + std::to_string(i);
        if (sets[i].universe() != g.size())
            return Verdict::fail(name + " has the wrong universe");
        if (sets[i].empty())
            return Verdict::fail(name + " is empty");
        if (sets[i].intersects(used))
            return Verdict::fail(name + " overlaps an earlier set");
        if (!is_connected(g, sets[i]))
            return Verdict::fail(name + " is not connected");
        used |= sets[i];
    }
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            bool joined = false;
            for (Vertex v : sets[i])
                if (g.neighbours(v).intersects(sets[j])) {
                    joined = true;
                    break;
                }
            if (!joined)
                return Verdict::fail("no edge between branch set " + std::to_string(i) + " and branch set "
                                     + std::to_string(j));
        }
    return Verdict::pass();
}

namespace {

    std::optional<std::vector<VertexSet>> greedy_clique_minor(const Graph & g, std::size_t r)
    {
        const std::size_t n = g.size();
        // super[i]: vertices merged into supervertex i; alive supervertices
        // keep the id of their lowest original vertex.
        std::vector<VertexSet> super;
        std::vector<VertexSet> adj;
        for (Vertex v = 0; v < n; ++v) {
            super.emplace_back(n, std::initializer_list<Vertex>{v});
            adj.push_back(g.neighbours(v));
        }
        VertexSet alive = VertexSet::full(n);
        while (alive.size() >= r) {
            bool complete = true;
            for (Vertex v : alive)
                if ((adj[v] & alive).size() != alive.size() - 1) {
                    complete = false;
                    break;
                }
            if (complete) {
                std::vector<VertexSet> out;
                for (Vertex v : alive) {
                    if (out.size() == r)
                        break;
                    out.push_back(super[v]);
                }
                return out;
            }
            Vertex u = no_vertex;
            std::size_t deg = no_vertex;
            for (Vertex v : alive) {
                std::size_t dv = (adj[v] & alive).size();
                if (dv < deg) {
                    deg = dv;
                    u = v;
                }
            }
            alive.erase(u);
            if (deg + 1 < r || deg == 0)
                continue;
            Vertex into = no_vertex;
            std::size_t common = no_vertex;
            for (Vertex w : adj[u] & alive) {
                std::size_t c = (adj[u] & adj[w] & alive).size();
                if (c < common) {
                    common = c;
                    into = w;
                }
            }
            super[into] |= super[u];
            adj[into] |= adj[u];
            adj[into].erase(into);
            adj[into].erase(u);
            for (Vertex w : adj[u] & alive)
                if (w != into) {
                    adj[w].insert(into);
                }
        }
        return std::nullopt;
    }

} // namespace

SearchResult<CliqueMinorWitness> find_undirected_clique_minor(const Graph & g, std::size_t r, SearchMode mode,
                                                              std::uint64_t node_budget)
{
    SearchResult<CliqueMinorWitness> result;
    const std::size_t n = g.size();
    if (r == 0) {
        result.status = SearchStatus::found;
        result.witness = CliqueMinorWitness{};
        return result;
    }
    if (n < r)
        return result;

    std::optional<std::vector<VertexSet>> found;
    if (mode == SearchMode::greedy) {
        found = greedy_clique_minor(g, r);
    }
    else {
        if (n > max_subset_enumeration)
            throw GraphError("exact clique minor search is limited to "
                             + std::to_string(max_subset_enumeration) + " vertices");
        std::vector<Mask> adj(n, 0);
        for (Vertex v = 0; v < n; ++v)
            for (Vertex w : g.neighbours(v))
                adj[v] |= bit(w);
        Budget budget(node_budget);
        try {
            std::vector<Mask> sets;
            const Mask limit = n == 64 ? ~Mask{0} : bit(n) - 1;
            for (Mask s = 1;; ++s) {
                if ((s & 0xFFFU) == 0)
                    budget.spend();
                Mask root = s & (~s + 1);
                if (forward_closure(adj, root, s) == s)
                    sets.push_back(s);
                if (s == limit)
                    break;
            }
            sets = sort_by_size(std::move(sets));
            std::vector<Mask> adj_union(sets.size(), 0);
            for (std::size_t i = 0; i < sets.size(); ++i)
                for (Mask m = sets[i]; m != 0; m &= m - 1)
                    adj_union[i] |= adj[low_vertex(m)];
            auto compat = [&](std::size_t a, std::size_t b) {
                return (sets[a] & sets[b]) == 0 && (adj_union[a] & sets[b]) != 0;
            };
            FamilySearch search(sets, n, r, compat, budget);
            search.run();
            if (search.best().size() >= r) {
                std::vector<VertexSet> out;
                for (std::size_t i : search.best()) {
                    VertexSet s(n);
                    for (Mask m = sets[i]; m != 0; m &= m - 1)
                        s.insert(low_vertex(m));
                    out.push_back(std::move(s));
                }
                found = std::move(out);
            }
        }
        catch (const BudgetExceeded &) {
            result.status = SearchStatus::budget_exceeded;
            return result;
        }
    }
    if (found) {
        result.status = SearchStatus::found;
        result.witness = CliqueMinorWitness{std::move(*found)};
    }
    return result;
}

// ---- maximum acyclic set ---------------------------------------------------

AcyclicResult max_acyclic_set_exact(const Digraph & d, std::uint64_t node_budget)
{
    AcyclicResult result;
    result.set = maximal_acyclic_set(d);
    if (d.size() == 0)
        return result;
    const MaskGraph g = mask_graph(d, d.vertices(), "max_acyclic_set_exact");
    Mask best = 0;
    for (Vertex v : result.set.vertices)
        best |= bit(v);
    Budget budget(node_budget);

    auto search = [&](auto & self, Vertex v, Mask cur) -> void {
        budget.spend();
        if (popcount(cur) + (g.size() - v) <= popcount(best))
            return;
        if (v == g.size()) {
            best = cur;
            return;
        }
        if (!closes_cycle(g, v, cur))
            self(self, v + 1, cur | bit(v));
        self(self, v + 1, cur);
    };
    try {
        search(search, 0, 0);
    }
    catch (const BudgetExceeded &) {
        result.status = SearchStatus::budget_exceeded;
    }
    VertexSet s = g.lift(best, d.size());
    result.set.vertices = s;
    result.set.order = *topological_order(d, s);
    return result;
}

// ---- even cycles -------------------------------------------------------------

EvenCycleResult has_even_cycle(const Digraph & d, std::size_t max_length, std::uint64_t node_budget)
{
    EvenCycleResult result;
    const std::size_t n = d.size();
    result.length_bound = std::min(max_length, n);
    Budget budget(node_budget);
    std::vector<Vertex> path;
    VertexSet on_path(n);

    auto dfs = [&](auto & self, Vertex root) -> bool {
        budget.spend();
        Vertex u = path.back();
        if (path.size() % 2 == 0 && d.has_edge(u, root))
            return true;
        if (path.size() >= result.length_bound)
            return false;
        for (Vertex w : d.out(u)) {
            if (w <= root || on_path.contains(w))
                continue;
            path.push_back(w);
            on_path.insert(w);
            if (self(self, root))
                return true;
            on_path.erase(w);
            path.pop_back();
        }
        return false;
    };

    try {
        for (Vertex s = 0; s < n; ++s) {
            path.assign(1, s);
            on_path.clear();
            on_path.insert(s);
            if (dfs(dfs, s)) {
                result.status = SearchStatus::found;
                result.cycle = path;
                return result;
            }
        }
    }
    catch (const BudgetExceeded &) {
        result.status = SearchStatus::budget_exceeded;
    }
    return result;
}

} // namespace sminor
