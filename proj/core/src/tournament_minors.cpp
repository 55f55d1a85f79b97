#include <sminor/connectivity.hpp>
#include <sminor/random.hpp>
#include <sminor/tournament_minors.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace sminor {

namespace {

    std::vector<VertexSet> candidate_components(const Digraph & d, const VertexSet & current, ComponentRule rule)
    {
        auto scc = scc_decompose(d, current);
        if (rule == ComponentRule::exhaustive)
            return scc.parts;
        std::size_t best = 0;
        std::size_t best_chi = 0;
        for (std::size_t i = 0; i < scc.parts.size(); ++i) {
            std::size_t chi = 0;
            if (rule == ComponentRule::max_chi)
                chi = exact_chi(d, scc.parts[i]).chi;
            const bool better = i == 0 || chi > best_chi
                || (chi == best_chi && scc.parts[i].size() > scc.parts[best].size());
            if (better) {
                best = i;
                best_chi = chi;
            }
        }
        return {scc.parts[best]};
    }

    using Extract = std::function<VertexSet(const VertexSet &)>;

    // Emits extract(C) for the chosen strongly connected component C of the
    // remainder and continues inside C; a singleton component ends the family.
    std::vector<VertexSet> peel(const Digraph & d, const VertexSet & current, ComponentRule rule,
                                const Extract & extract)
    {
        if (current.empty())
            return {};
        std::vector<VertexSet> best;
        for (const auto & c : candidate_components(d, current, rule)) {
            std::vector<VertexSet> family;
            if (c.size() == 1) {
                family.push_back(c);
            }
            else {
                VertexSet b = extract(c);
                family.push_back(b);
                for (auto & rest : peel(d, c - b, rule, extract))
                    family.push_back(std::move(rest));
            }
            if (family.size() > best.size())
                best = std::move(family);
        }
        return best;
    }

    Vertex max_out_degree_vertex(const Digraph & d, const VertexSet & within)
    {
        Vertex best = no_vertex;
        std::size_t degree = 0;
        for (Vertex v : within) {
            std::size_t dv = d.out_degree(v, within);
            if (best == no_vertex || dv > degree) {
                best = v;
                degree = dv;
            }
        }
        return best;
    }

    void require(bool ok, const char * what)
    {
        if (!ok)
            throw std::logic_error(what);
    }

} // namespace

StrongMinorWitness peel_transitive_plus_path(const Tournament & t, ComponentRule rule)
{
    const Digraph & d = t.graph();
    Extract extract = [&](const VertexSet & c) {
        auto a = maximal_acyclic_set(d, c);
        auto p = shortest_path(t, a.sink(), a.source(), c);
        VertexSet b = a.vertices;
        for (Vertex v : p)
            b.insert(v);
        return b;
    };
    return {peel(d, d.vertices(), rule, extract)};
}

DominatingCore dominating_core(const Tournament & t, const VertexSet & within)
{
    const Digraph & d = t.graph();
    if (within.size() < 3 || !is_strongly_connected(d, within))
        throw GraphError("not strongly connected");

    DominatingCore core;
    core.within = within;
    core.x = max_out_degree_vertex(d, within);
    core.S_of_x = maximal_acyclic_set_with_sink(t, core.x, within);
    core.y = core.S_of_x.source();

    VertexSet star = (d.out(core.x) & d.in(core.y) & within) - core.S_of_x.vertices;
    core.w_star = star.first();
    require(core.w_star != no_vertex, "dominating_core: no vertex w* with x -> w* -> y");

    core.F = within;
    for (Vertex s : core.S_of_x.vertices)
        core.F &= d.out(s);

    VertexSet W(d.size(), {core.w_star});
    if (!core.F.empty()) {
        const VertexSet outside_F = within - core.F;
        VertexSet f1(d.size());
        for (Vertex f : core.F)
            if (d.out(f).intersects(outside_F))
                f1.insert(f);
        require(!f1.empty(), "dominating_core: F+ is empty");
        core.F_layers.push_back(f1);
        VertexSet layered = f1;
        while (layered != core.F) {
            VertexSet y = core.F - layered;
            VertexSet next = d.in_of(core.F_layers.back()) & y;
            require(!next.empty(), "dominating_core: F-layer is empty");
            core.F_layers.push_back(next);
            layered |= next;
        }

        const std::size_t k = core.F_layers.size();
        auto s_k = maximal_acyclic_set(d, core.F_layers[k - 1]);
        if (k >= 2)
            core.S = extend_acyclic_set(d, s_k.order, core.F_layers[k - 2], s_k.size());
        else
            core.S = s_k;

        core.P = shortest_path_to_set(d, core.S.sink(), core.F_layers[0], core.F);
        const Vertex x1 = core.P.back();
        core.w = (d.out(x1) & (within - core.F - core.S_of_x.vertices)).first();
        require(*core.w != no_vertex, "dominating_core: x_1 has no out-neighbour outside F and S(x)");
        W.insert(*core.w);
    }

    core.R = core.S_of_x.vertices | W;
    if (!core.F.empty()) {
        core.R |= core.S.vertices;
        for (Vertex v : core.P)
            core.R.insert(v);
    }

    core.two_coloring.k = 2;
    core.two_coloring.color.assign(d.size(), no_color);
    for (Vertex v : core.S_of_x.vertices)
        core.two_coloring.color[v] = 0;
    for (Vertex v : W)
        core.two_coloring.color[v] = 1;
    for (std::size_t i = 0; i < core.F_layers.size(); ++i)
        for (Vertex v : core.F_layers[i] & core.R)
            core.two_coloring.color[v] = i % 2; // layer F_{i+1}

    require(is_strongly_connected(d, core.R), "dominating_core: T[R] is not strongly connected");
    require(dominates(d, core.R, DominationMode::both, within), "dominating_core: R is not dominating");
    require(verify_coloring(d, core.two_coloring, core.R).ok, "dominating_core: 2-colouring is invalid");
    return core;
}

DominatingCore dominating_core(const Tournament & t)
{
    return dominating_core(t, t.graph().vertices());
}

StrongMinorWitness strong_minor_by_domination(const Tournament & t, ComponentRule rule)
{
    const Digraph & d = t.graph();
    Extract extract = [&](const VertexSet & c) { return dominating_core(t, c).R; };
    return {peel(d, d.vertices(), rule, extract)};
}

namespace {

    std::optional<std::array<Vertex, 3>> lowest_triangle(const Digraph & d, const VertexSet & within)
    {
        for (Vertex a : within)
            for (Vertex b : within) {
                if (b <= a)
                    continue;
                for (Vertex c : within) {
                    if (c <= b)
                        continue;
                    if ((d.has_edge(a, b) && d.has_edge(b, c) && d.has_edge(c, a))
                        || (d.has_edge(a, c) && d.has_edge(c, b) && d.has_edge(b, a)))
                        return std::array<Vertex, 3>{a, b, c};
                }
            }
        return std::nullopt;
    }

    std::optional<StrongMinorWitness> k2_search(const Digraph & d, const VertexSet & current)
    {
        auto tri = lowest_triangle(d, current);
        if (!tri)
            return std::nullopt;
        const std::size_t n = d.size();
        VertexSet c1(n, {(*tri)[0], (*tri)[1], (*tri)[2]});
        VertexSet rest = current - c1;
        VertexSet a1(n);
        VertexSet b1(n);
        for (Vertex v : rest) {
            const bool sends = d.out(v).intersects(c1);
            const bool receives = d.in(v).intersects(c1);
            if (sends && receives)
                return StrongMinorWitness{{c1, VertexSet(n, {v})}};
            (sends ? a1 : b1).insert(v);
        }
        for (Vertex b : b1) {
            Vertex a = (d.out(b) & a1).first();
            if (a != no_vertex)
                return StrongMinorWitness{{VertexSet(n, {a, b, (*tri)[0]}), VertexSet(n, {(*tri)[1]})}};
        }
        if (auto w = k2_search(d, a1))
            return w;
        return k2_search(d, b1);
    }

} // namespace

std::optional<StrongMinorWitness> strong_k2_minor(const Tournament & t)
{
    return k2_search(t.graph(), t.graph().vertices());
}

NearlyRegularSet nearly_regular_subset(const Tournament & t)
{
    const Digraph & d = t.graph();
    if (d.size() < 20)
        throw GraphError("below lemma regime");
    NearlyRegularSet out_class{VertexSet(d.size()), true};
    NearlyRegularSet in_class{VertexSet(d.size()), false};
    for (Vertex v = 0; v < d.size(); ++v) {
        const std::size_t p = d.out_degree(v);
        const std::size_t m = d.in_degree(v);
        if (m <= p && p <= 4 * m)
            out_class.set.insert(v);
        if (p <= m && m <= 4 * p)
            in_class.set.insert(v);
    }
    return in_class.set.size() > out_class.set.size() ? in_class : out_class;
}

VertexSet out_core(const Digraph & d, const VertexSet & within, std::size_t min_out)
{
    VertexSet core = within;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v : core)
            if (d.out_degree(v, core) < min_out) {
                core.erase(v);
                changed = true;
            }
    }
    return core;
}

VertexSet minimal_outdegree_subtournament(const Tournament & t, std::size_t d, const VertexSet & within)
{
    const Digraph & g = t.graph();
    if (within.empty() || g.min_out_degree(within) < d)
        throw GraphError("minimum out-degree below " + std::to_string(d));
    VertexSet cur = within;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v : cur) {
            VertexSet without = cur;
            without.erase(v);
            VertexSet core = out_core(g, without, d);
            if (!core.empty()) {
                cur = std::move(core);
                changed = true;
                break;
            }
        }
    }
    return cur;
}

VertexSet minimal_outdegree_subtournament(const Tournament & t, std::size_t d)
{
    return minimal_outdegree_subtournament(t, d, t.graph().vertices());
}

namespace {

    // Maximum matching from `left` into `right` along edges left -> right.
    std::vector<Edge> max_matching(const Digraph & d, const VertexSet & left, const VertexSet & right)
    {
        std::vector<Vertex> mate(d.size(), no_vertex); // right vertex -> left vertex
        auto augment = [&](auto & self, Vertex u, VertexSet & visited) -> bool {
            for (Vertex a : d.out(u) & right) {
                if (visited.contains(a))
                    continue;
                visited.insert(a);
                if (mate[a] == no_vertex || self(self, mate[a], visited)) {
                    mate[a] = u;
                    return true;
                }
            }
            return false;
        };
        for (Vertex u : left) {
            VertexSet visited(d.size());
            (void)augment(augment, u, visited);
        }
        std::vector<Edge> m;
        for (Vertex a : right)
            if (mate[a] != no_vertex)
                m.push_back({mate[a], a});
        std::sort(m.begin(), m.end());
        return m;
    }

} // namespace

EdgeSystemOutcome extract_edge_system(const Tournament & t, std::size_t m, std::size_t d)
{
    const Digraph & g = t.graph();
    if (m < 2)
        throw GraphError("edge system requires m >= 2");
    if (d < 1)
        throw GraphError("edge system requires d >= 1");
    if (g.size() == 0 || g.min_out_degree() < d)
        throw GraphError("minimum out-degree below " + std::to_string(d));

    EdgeSystemOutcome outcome;
    if (is_k_strongly_connected(g, m)) {
        outcome.connected = g.vertices();
        return outcome;
    }

    EdgeMatchingSystem sys;
    sys.m = m;
    sys.d = d;
    VertexSet f = g.vertices();
    std::size_t total = 0;
    while (total < m) {
        if (d <= 2 * total)
            throw GraphError("degree budget exhausted after " + std::to_string(total) + " of " + std::to_string(m)
                             + " edges");
        const std::size_t bound = d - 2 * total;
        VertexSet tk = minimal_outdegree_subtournament(t, bound, f);
        if (is_k_strongly_connected(g, m, tk)) {
            outcome.connected = tk;
            return outcome;
        }
        auto cut = min_vertex_cut(g, tk);
        require(!cut.complete && cut.size > 0 && cut.size < m,
                "extract_edge_system: minimal subtournament has no small nonempty cut");
        const VertexSet & r = cut.cut;
        auto scc = scc_decompose(g, tk - r);
        const VertexSet a = scc.source_set();
        const VertexSet & b = scc.sink_set();
        VertexSet r_low(g.size());
        for (Vertex x : r)
            if (g.out_degree(x, b | r) < bound)
                r_low.insert(x);
        require(!r_low.empty(), "extract_edge_system: R' is empty");
        auto matching = max_matching(g, r_low, a);
        require(!matching.empty(), "extract_edge_system: empty matching");
        VertexSet matched(g.size());
        for (const auto & e : matching) {
            sys.S.push_back(e);
            matched.insert(e.from);
            matched.insert(e.to);
        }
        sys.rounds.push_back(matching.size());
        total += matching.size();
        f = (b | r) - matched;
    }
    sys.F = f;
    outcome.system = std::move(sys);
    return outcome;
}

Verdict verify_edge_system(const Digraph & d, const EdgeMatchingSystem & s)
{
    VertexSet used(d.size());
    for (std::size_t i = 0; i < s.S.size(); ++i) {
        const auto & e = s.S[i];
        if (!d.has_edge(e.from, e.to))
            return Verdict::fail("edge " + std::to_string(i) + " is not an edge of the digraph");
        if (used.contains(e.from) || used.contains(e.to) || e.from == e.to)
            return Verdict::fail("edge " + std::to_string(i) + " shares a vertex with an earlier edge");
        used.insert(e.from);
        used.insert(e.to);
    }
    if (s.S.size() < s.m)
        return Verdict::fail("only " + std::to_string(s.S.size()) + " edges, expected at least " + std::to_string(s.m));
    if (s.F.intersects(used))
        return Verdict::fail("F meets an edge of S");
    const long long floor_f = 2 * (static_cast<long long>(s.d) - 4 * static_cast<long long>(s.m));
    if (static_cast<long long>(s.F.size()) < floor_f)
        return Verdict::fail("|F| = " + std::to_string(s.F.size()) + " is below 2(d - 4m)");
    const std::size_t f = s.F.size();
    for (std::size_t i = 0; i < s.S.size(); ++i) {
        const auto & e = s.S[i];
        if ((d.out(e.to) & s.F).size() + s.m < f)
            return Verdict::fail("v_" + std::to_string(i) + " has fewer than |F| - m out-neighbours in F");
        if ((d.in(e.from) & s.F).size() + s.d < f)
            return Verdict::fail("w_" + std::to_string(i) + " has fewer than |F| - d in-neighbours in F");
    }
    return Verdict::pass();
}

std::size_t AlgorithmConfig::scaled(double factor, std::size_t r)
{
    if (r <= 1)
        return 0;
    const double rr = static_cast<double>(r);
    return static_cast<std::size_t>(std::ceil(factor * rr * std::sqrt(std::log(rr))));
}

std::size_t AlgorithmConfig::m(std::size_t r) const
{
    return m_override.value_or(std::max<std::size_t>(2, scaled(C_prime, r)));
}

std::size_t AlgorithmConfig::d(std::size_t r) const
{
    return d_override.value_or(std::max<std::size_t>(1, scaled(C, r)));
}

std::size_t AlgorithmConfig::slice_size(std::size_t r) const
{
    return std::max(scaled(C0, r), 2 * r);
}

ConnectivityOutcome strong_minor_from_connectivity(const Tournament & t, std::size_t r, const AlgorithmConfig & cfg)
{
    const Digraph & d = t.graph();
    const std::size_t n = d.size();
    ConnectivityOutcome out;
    auto fail = [&](std::string stage, std::string reason) {
        out.stage = std::move(stage);
        out.reason = std::move(reason);
        return out;
    };
    if (n == 0)
        return fail("input", "empty tournament");
    const std::size_t k = AlgorithmConfig::scaled(cfg.C_prime, r);
    out.hypothesis_met = k == 0 ? is_strongly_connected(d) : is_k_strongly_connected(d, k);
    if (r == 0) {
        out.witness = StrongMinorWitness{};
        return out;
    }
    if (r == 1) {
        out.witness = StrongMinorWitness{{VertexSet(n, {0})}};
        return out;
    }

    if (n < 20)
        return fail("nearly-regular", "below lemma regime");
    const auto regular = nearly_regular_subset(t);
    const std::size_t size = cfg.slice_size(r);
    if (regular.set.size() < size)
        return fail("slice", "nearly-regular set has " + std::to_string(regular.set.size())
                                 + " vertices, slice needs " + std::to_string(size));
    VertexSet slice(n);
    for (Vertex v : regular.set) {
        if (slice.size() == size)
            break;
        slice.insert(v);
    }

    auto weak = find_weak_minor(t, r, slice, SearchMode::exact, cfg.node_budget);
    if (weak.status == SearchStatus::budget_exceeded)
        weak = find_weak_minor(t, r, slice, SearchMode::greedy);
    if (!weak.found())
        return fail("weak-minor", std::string("weak minor search: ") + to_string(weak.status));
    out.weak = weak.witness;

    const VertexSet rest = d.vertices() - slice;
    VertexSet taken(n);
    std::vector<std::size_t> repaired;
    for (std::size_t i = 0; i < weak.witness->branch_sets.size(); ++i) {
        const auto & b = weak.witness->branch_sets[i];
        auto scc = scc_decompose(d, b);
        if (scc.count() == 1)
            continue;
        const Vertex s1 = scc.parts.front().first();
        const Vertex s2 = scc.parts.back().first();
        const Vertex u1 = ((d.in(s1) & rest) - taken).first();
        if (u1 == no_vertex)
            return fail("neighbours", "no fresh in-neighbour for branch set " + std::to_string(i));
        taken.insert(u1);
        const Vertex u2 = ((d.out(s2) & rest) - taken).first();
        if (u2 == no_vertex)
            return fail("neighbours", "no fresh out-neighbour for branch set " + std::to_string(i));
        taken.insert(u2);
        out.link_from.push_back(u2);
        out.link_to.push_back(u1);
        repaired.push_back(i);
    }

    StrongMinorWitness w{weak.witness->branch_sets};
    if (!repaired.empty()) {
        auto link = find_linkage(d, out.link_from, out.link_to, rest, cfg.node_budget);
        if (!link.found())
            return fail("linkage", std::string("linkage search: ") + to_string(link.status));
        for (std::size_t j = 0; j < repaired.size(); ++j)
            for (Vertex v : link.witness->paths[j])
                w.branch_sets[repaired[j]].insert(v);
    }
    auto verdict = verify_strong_minor(d, w);
    require(verdict.ok, "strong_minor_from_connectivity produced an invalid witness");
    out.witness = std::move(w);
    return out;
}

bool is_good_pair(const Digraph & d, const std::array<Vertex, 3> & a, const std::array<Vertex, 3> & b)
{
    bool forward = false;
    bool backward = false;
    for (Vertex x : a)
        for (Vertex y : b) {
            forward = forward || d.has_edge(x, y);
            backward = backward || d.has_edge(y, x);
        }
    return forward && backward;
}

namespace {

    StrongMinorWitness lift_witness(const InducedSubgraph & sub, const StrongMinorWitness & w, std::size_t n)
    {
        StrongMinorWitness out;
        for (const auto & b : w.branch_sets)
            out.branch_sets.push_back(sub.lift(b, n));
        return out;
    }

} // namespace

OutdegreeOutcome strong_minor_from_outdegree(const Tournament & t, std::size_t r, const AlgorithmConfig & cfg,
                                             std::uint64_t seed)
{
    const Digraph & g = t.graph();
    const std::size_t n = g.size();
    OutdegreeOutcome out;
    out.m = cfg.m(r);
    out.d = cfg.d(r);
    if (n == 0 || g.min_out_degree() < out.d)
        throw GraphError("minimum out-degree below " + std::to_string(out.d));
    auto fail = [&](std::string stage, std::string reason) {
        out.stage = std::move(stage);
        out.reason = std::move(reason);
        return out;
    };
    if (r <= 1) {
        out.witness = StrongMinorWitness{};
        if (r == 1)
            out.witness->branch_sets.push_back(VertexSet(n, {0}));
        return out;
    }

    EdgeSystemOutcome es;
    try {
        es = extract_edge_system(t, out.m, out.d);
    }
    catch (const GraphError & e) {
        return fail("edge-system", e.what());
    }

    if (es.connected) {
        out.connected = es.connected;
        auto sub = induced_subgraph(g, *es.connected);
        Tournament inner(sub.graph);
        auto conn = strong_minor_from_connectivity(inner, r, cfg);
        if (!conn.witness)
            return fail("connectivity/" + conn.stage, conn.reason);
        out.witness = lift_witness(sub, *conn.witness, n);
        require(verify_strong_minor(g, *out.witness).ok, "strong_minor_from_outdegree: invalid witness");
        return out;
    }

    const auto & sys = *es.system;
    out.system = sys;
    const std::size_t m = out.m;
    TriangleSystem tri;
    for (std::size_t i = 0; i < m; ++i) {
        const Edge & e = sys.S[i];
        VertexSet l = g.out(e.to) & g.in(e.from) & sys.F;
        if (l.empty())
            return fail("triangles", "L_" + std::to_string(i) + " is empty");
        tri.L_sets.push_back(std::move(l));
    }
    std::vector<std::vector<Vertex>> l_lists;
    for (const auto & l : tri.L_sets)
        l_lists.push_back(l.to_vector());

    const double m2_9 = static_cast<double>(m) * static_cast<double>(m) / 9.0;
    for (std::size_t attempt = 0; attempt < cfg.sample_attempts; ++attempt) {
        TriangleSample sample;
        sample.seed = SplitMix64::substream_seed(seed, attempt);
        SplitMix64 rng(sample.seed);
        for (const auto & l : l_lists)
            sample.z.push_back(l[rng.below(l.size())]);
        VertexSet distinct(n);
        for (Vertex z : sample.z)
            distinct.insert(z);
        sample.X = distinct.size();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                std::array<Vertex, 3> a{sys.S[i].from, sys.S[i].to, sample.z[i]};
                std::array<Vertex, 3> b{sys.S[j].from, sys.S[j].to, sample.z[j]};
                if (!is_good_pair(g, a, b))
                    ++sample.Y;
            }
        const double x = static_cast<double>(sample.X);
        sample.potential = x * x - 40.0 * static_cast<double>(sample.Y) - m2_9;
        tri.samples.push_back(sample);
        if (sample.potential > 0) {
            tri.accepted = attempt;
            break;
        }
    }

    // diagnostics describe the accepted sample, or the best one drawn
    std::size_t chosen = 0;
    for (std::size_t i = 0; i < tri.samples.size(); ++i)
        if (tri.samples[i].potential > tri.samples[chosen].potential)
            chosen = i;
    if (tri.accepted)
        chosen = *tri.accepted;
    const auto & sample = tri.samples[chosen];
    tri.X = sample.X;
    tri.Y = sample.Y;
    VertexSet seen(n);
    for (std::size_t i = 0; i < m; ++i) {
        tri.triangles.push_back({sys.S[i].from, sys.S[i].to, sample.z[i]});
        if (!seen.contains(sample.z[i])) {
            seen.insert(sample.z[i]);
            tri.U.push_back(i);
        }
    }
    tri.auxiliary_graph = Graph(tri.U.size());
    for (std::size_t a = 0; a < tri.U.size(); ++a)
        for (std::size_t b = a + 1; b < tri.U.size(); ++b)
            if (is_good_pair(g, tri.triangles[tri.U[a]], tri.triangles[tri.U[b]]))
                tri.auxiliary_graph.add_edge(a, b);
    out.triangles = tri;
    if (!tri.accepted)
        return fail("sampling", "no sample with X^2 - 40Y - m^2/9 > 0 in " + std::to_string(cfg.sample_attempts)
                                    + " attempts");

    constexpr std::size_t exact_limit = 20;
    auto mode = tri.U.size() <= exact_limit ? SearchMode::exact : SearchMode::greedy;
    auto minor = find_undirected_clique_minor(out.triangles->auxiliary_graph, r, mode, cfg.node_budget);
    if (minor.status == SearchStatus::budget_exceeded)
        minor = find_undirected_clique_minor(out.triangles->auxiliary_graph, r, SearchMode::greedy);
    if (!minor.found())
        return fail("clique-minor", std::string("clique minor search: ") + to_string(minor.status));

    StrongMinorWitness w;
    for (const auto & b : minor.witness->branch_sets) {
        VertexSet set(n);
        for (Vertex j : b)
            for (Vertex v : tri.triangles[tri.U[j]])
                set.insert(v);
        w.branch_sets.push_back(std::move(set));
    }
    require(verify_strong_minor(g, w).ok, "strong_minor_from_outdegree: invalid witness");
    out.witness = std::move(w);
    return out;
}

} // namespace sminor
