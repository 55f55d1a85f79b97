#include <sminor/acyclic.hpp>
#include <sminor/digraph_minors.hpp>

#include <stdexcept>
#include <tuple>

namespace sminor {

TemplateWitness find_templates(const Digraph & d, const VertexSet & within)
{
    if (within.empty())
        throw GraphError("empty");
    TemplateWitness t;
    VertexSet rest = within;
    while (!rest.empty()) {
        auto a = maximal_acyclic_set(d, rest);
        rest -= a.vertices;
        t.parts.push_back(std::move(a.vertices));
    }
    return t;
}

TemplateWitness find_templates(const Digraph & d)
{
    return find_templates(d, d.vertices());
}

LayerChoice best_layer(const Digraph & d, const BfsTree & tree, const VertexSet & x, LayerMode mode,
                       std::uint64_t node_budget)
{
    LayerChoice best;
    best.exact = mode == LayerMode::exact;
    best.set = VertexSet(d.size());
    if (mode == LayerMode::exact) {
        for (std::size_t i = 0; i < tree.layers.size(); ++i) {
            VertexSet s = tree.layers[i] & x;
            std::size_t chi = 0;
            if (!s.empty()) {
                auto res = exact_chi(d, s, node_budget);
                if (res.status == SearchStatus::budget_exceeded) {
                    best.status = SearchStatus::budget_exceeded;
                    return best;
                }
                chi = res.chi;
            }
            if (i == 0 || chi > best.chi) {
                best.index = i;
                best.set = std::move(s);
                best.chi = chi;
            }
        }
        return best;
    }

    std::tuple<std::size_t, std::size_t, std::size_t> best_key{0, 0, 0};
    for (std::size_t i = 0; i < tree.layers.size(); ++i) {
        VertexSet s = tree.layers[i] & x;
        std::size_t lower = 0;
        std::size_t colours = 0;
        if (!s.empty()) {
            lower = is_acyclic(d, s) ? 1 : 2;
            colours = greedy_coloring(d, s).k;
        }
        std::tuple<std::size_t, std::size_t, std::size_t> key{lower, colours, s.size()};
        if (i == 0 || key > best_key) {
            best_key = key;
            best.index = i;
            best.set = std::move(s);
            best.chi = lower;
        }
    }
    return best;
}

PartialMinorWitness escalate_partial(const Digraph & d, const PartialMinorWitness & w, Vertex v,
                                     const BfsTree & t_out, const BfsTree & t_in)
{
    if (w.strong_flags.size() != w.branch_sets.size())
        throw GraphError("flag count differs from branch set count");
    for (std::size_t i = 0; i < w.branch_sets.size(); ++i)
        if (w.branch_sets[i].contains(v))
            throw GraphError("root " + std::to_string(v) + " lies in branch set " + std::to_string(i));
    std::size_t target = w.branch_sets.size();
    for (std::size_t i = 0; i < w.strong_flags.size(); ++i)
        if (!w.strong_flags[i]) {
            target = i;
            break;
        }
    if (target == w.branch_sets.size())
        throw GraphError("every branch set is already flagged");

    PartialMinorWitness out = w;
    out.strong_flags[target] = true;
    const VertexSet & v1 = w.branch_sets[target];
    if (!is_strongly_connected(d, v1)) {
        VertexSet grown = v1;
        for (Vertex x : v1) {
            if (!t_in.contains(x) || !t_out.contains(x))
                throw GraphError("vertex " + std::to_string(x) + " is outside the trees");
            for (Vertex p : t_in.path(x))
                grown.insert(p);
            for (Vertex p : t_out.path(x))
                grown.insert(p);
        }
        for (std::size_t j = 0; j < w.branch_sets.size(); ++j) {
            if (j == target)
                continue;
            Vertex clash = (grown & w.branch_sets[j]).first();
            if (clash != no_vertex)
                throw GraphError("tree path through vertex " + std::to_string(clash) + " meets branch set "
                                 + std::to_string(j));
        }
        out.branch_sets[target] = std::move(grown);
    }
    auto verdict = verify_partial_minor(d, out);
    if (!verdict.ok)
        throw std::logic_error("escalate_partial produced an invalid witness: " + verdict.locus);
    return out;
}

namespace {

    class Escalation {
    public:
        Escalation(const Digraph & d, std::size_t r, LayerMode mode, std::uint64_t budget)
            : d_(d), r_(r), mode_(mode), budget_(budget)
        {
        }

        std::optional<PartialMinorWitness> build(std::size_t m, const VertexSet & x)
        {
            if (m == 0)
                return base(x);
            if (x.empty())
                return fail("templates", "empty layer at level " + std::to_string(m));
            auto c = component(x);
            if (!c)
                return std::nullopt;
            const Vertex v = c->first();
            const BfsTree t_in = bfs_tree(d_, v, Direction::in, *c);
            const BfsTree t_out = bfs_tree(d_, v, Direction::out, *c);
            VertexSet rest = *c;
            rest.erase(v);
            auto in_layer = best_layer(d_, t_in, rest, mode_, budget_);
            if (in_layer.status == SearchStatus::budget_exceeded)
                return fail("budget", "layer scoring exceeded the node budget");
            auto out_layer = best_layer(d_, t_out, in_layer.set, mode_, budget_);
            if (out_layer.status == SearchStatus::budget_exceeded)
                return fail("budget", "layer scoring exceeded the node budget");

            auto inner = build(m - 1, out_layer.set);
            if (!inner)
                return std::nullopt;
            if (inner->m() >= m)
                return inner;
            try {
                auto w = escalate_partial(d_, *inner, v, t_out, t_in);
                outcome.partial = w;
                return w;
            }
            catch (const GraphError & e) {
                return fail("escalation", e.what());
            }
        }

        EscalationOutcome outcome;

    private:
        std::nullopt_t fail(std::string stage, std::string reason)
        {
            outcome.stage = std::move(stage);
            outcome.reason = std::move(reason);
            return std::nullopt;
        }

        std::optional<PartialMinorWitness> base(const VertexSet & x)
        {
            if (x.empty())
                return fail("templates", "empty base set");
            auto t = find_templates(d_, x);
            if (t.parts.size() < r_)
                return fail("templates", "only " + std::to_string(t.parts.size()) + " template parts, need "
                                             + std::to_string(r_));
            PartialMinorWitness w;
            for (std::size_t i = 0; i < r_; ++i) {
                w.strong_flags.push_back(is_strongly_connected(d_, t.parts[i]));
                w.branch_sets.push_back(std::move(t.parts[i]));
            }
            outcome.partial = w;
            return w;
        }

        std::optional<VertexSet> component(const VertexSet & x)
        {
            auto scc = scc_decompose(d_, x);
            std::size_t best = 0;
            std::size_t best_chi = 0;
            for (std::size_t i = 0; i < scc.parts.size(); ++i) {
                std::size_t chi = 0;
                if (mode_ == LayerMode::exact) {
                    auto res = exact_chi(d_, scc.parts[i], budget_);
                    if (res.status == SearchStatus::budget_exceeded) {
                        fail("budget", "component scoring exceeded the node budget");
                        return std::nullopt;
                    }
                    chi = res.chi;
                }
                if (i == 0 || chi > best_chi || (chi == best_chi && scc.parts[i].size() > scc.parts[best].size())) {
                    best = i;
                    best_chi = chi;
                }
            }
            return scc.parts[best];
        }

        const Digraph & d_;
        std::size_t r_;
        LayerMode mode_;
        std::uint64_t budget_;
    };

} // namespace

EscalationOutcome strong_minor_by_escalation(const Digraph & d, std::size_t r, LayerMode mode,
                                             std::uint64_t node_budget)
{
    if (d.size() == 0)
        throw GraphError("empty");
    if (r == 0)
        return {StrongMinorWitness{}, {}, {}, {}};
    if (r == 1)
        return {StrongMinorWitness{{VertexSet(d.size(), {0})}}, {}, {}, {}};

    Escalation run(d, r, mode, node_budget);
    auto partial = run.build(r, d.vertices());
    EscalationOutcome out = std::move(run.outcome);
    if (!partial)
        return out;
    StrongMinorWitness w{partial->branch_sets};
    auto verdict = verify_strong_minor(d, w);
    if (!verdict.ok)
        throw std::logic_error("strong_minor_by_escalation produced an invalid witness: " + verdict.locus);
    out.witness = std::move(w);
    return out;
}

} // namespace sminor
