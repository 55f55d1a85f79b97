#include <sminor/connectivity.hpp>
#include <sminor/constructions.hpp>
#include <sminor/digraph_minors.hpp>
#include <sminor/io.hpp>
#include <sminor/oracles.hpp>
#include <sminor/random.hpp>
#include <sminor/tournament_minors.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <utility>
#include <vector>

using namespace sminor;
using json = nlohmann::ordered_json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_unverified = 2;
constexpr int exit_budget = 3;
constexpr int exit_usage = 64;
constexpr int exit_bad_input = 65;
constexpr int exit_internal = 70;

struct Exit {
    int code;
};

json to_json(const VertexSet & s)
{
    return json(s.to_vector());
}

json sets_json(const std::vector<VertexSet> & sets)
{
    json a = json::array();
    for (const auto & s : sets)
        a.push_back(to_json(s));
    return a;
}

json witness_json(const WitnessDocument & doc)
{
    return json::parse(format_witness(doc));
}

void print(const json & j)
{
    std::cout << j.dump() << "\n";
}

LabelledDigraph load(const std::string & path)
{
    if (path == "-") {
        std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
        return parse_digraph(text);
    }
    return read_digraph(path);
}

// A witness leaves the tool only after it has been recomputed from scratch.
json checked(const Digraph & d, const WitnessDocument & doc)
{
    auto verdict = verify_witness(d, doc);
    if (!verdict.ok) {
        print(json{{"error", "verification failed"}, {"locus", verdict.locus}});
        throw Exit{exit_unverified};
    }
    return witness_json(doc);
}

ComponentRule parse_rule(const std::string & name)
{
    if (name == "largest")
        return ComponentRule::largest;
    if (name == "max-chi")
        return ComponentRule::max_chi;
    return ComponentRule::exhaustive;
}

const std::map<std::string, std::string> rule_names{
    {"largest", "largest"}, {"max-chi", "max-chi"}, {"exhaustive", "exhaustive"}};

struct Options {
    std::string input = "-";
    std::uint64_t seed = 0;
    std::uint64_t budget = default_node_budget;
    std::size_t n = 0;
    std::size_t r = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    std::size_t levels = 1;
    std::size_t trials = 0;
    std::size_t max_r = no_vertex;
    double p = 0.5;
    bool dot = false;
    std::string rule = "largest";
    std::string mode = "exact";
    std::optional<std::size_t> m_override;
    std::optional<std::size_t> d_override;
    std::optional<double> c0;
    std::string digraph_path;
    std::string witness_path;
};

void emit_generated(const LabelledDigraph & g, bool dot)
{
    if (dot)
        std::cout << format_dot(g.digraph);
    else
        std::cout << format_digraph(g.digraph, g.labels);
}

int run_chi(const Options & o)
{
    auto g = load(o.input);
    auto res = exact_chi(g.digraph, o.budget);
    if (res.status == SearchStatus::budget_exceeded) {
        print(json{{"status", "budget_exceeded"}, {"lower", res.lower}, {"upper", res.upper}});
        return exit_budget;
    }
    json out{{"chi", res.chi}};
    out["coloring"] = checked(g.digraph, {res.coloring})["payload"]["color"];
    print(out);
    return exit_ok;
}

int run_sm(const Options & o)
{
    auto g = load(o.input);
    auto res = exact_sm(g.digraph, o.max_r, o.budget);
    if (res.status == SearchStatus::budget_exceeded) {
        print(json{{"status", "budget_exceeded"}, {"lower", res.r}, {"upper", res.upper}});
        return exit_budget;
    }
    print(json{{"sm", res.r}, {"witness", checked(g.digraph, {res.witness})}});
    return exit_ok;
}

int run_scc(const Options & o)
{
    auto g = load(o.input);
    if (g.digraph.size() == 0) {
        print(json{{"components", json::array()}});
        return exit_ok;
    }
    print(json{{"components", sets_json(scc_decompose(g.digraph).parts)}});
    return exit_ok;
}

int run_dominating_core(const Options & o)
{
    auto g = load(o.input);
    Tournament t(g.digraph);
    auto core = dominating_core(t);
    print(json{{"size", core.R.size()}, {"witness", checked(g.digraph, {core})}});
    return exit_ok;
}

json found(const Digraph & d, const std::string & algorithm, const std::optional<StrongMinorWitness> & w)
{
    json out{{"algorithm", algorithm}};
    if (w) {
        out["branch_sets"] = w->branch_sets.size();
        out["witness"] = checked(d, {*w});
    }
    else {
        out["branch_sets"] = 0;
        out["witness"] = nullptr;
    }
    return out;
}

int run_find_minor(const std::string & algorithm, const Options & o)
{
    auto g = load(o.input);
    const Digraph & d = g.digraph;
    if (algorithm == "escalate") {
        auto mode = o.mode == "exact" ? LayerMode::exact : LayerMode::heuristic;
        auto res = strong_minor_by_escalation(d, o.r, mode, o.budget);
        json out = found(d, algorithm, res.witness);
        out["stage"] = res.stage;
        out["reason"] = res.reason;
        print(out);
        return res.stage == "budget" ? exit_budget : exit_ok;
    }

    Tournament t(d);
    if (algorithm == "peel" || algorithm == "dominate") {
        auto rule = parse_rule(o.rule);
        auto w = algorithm == "peel" ? peel_transitive_plus_path(t, rule) : strong_minor_by_domination(t, rule);
        print(found(d, algorithm, w));
        return exit_ok;
    }
    if (algorithm == "k2") {
        print(found(d, algorithm, strong_k2_minor(t)));
        return exit_ok;
    }

    AlgorithmConfig cfg;
    cfg.node_budget = o.budget;
    cfg.m_override = o.m_override;
    cfg.d_override = o.d_override;
    if (o.c0)
        cfg.C0 = *o.c0;
    if (algorithm == "connectivity") {
        auto res = strong_minor_from_connectivity(t, o.r, cfg);
        json out = found(d, algorithm, res.witness);
        out["stage"] = res.stage;
        out["reason"] = res.reason;
        out["hypothesis_met"] = res.hypothesis_met;
        print(out);
        return exit_ok;
    }
    auto res = strong_minor_from_outdegree(t, o.r, cfg, o.seed);
    json out = found(d, algorithm, res.witness);
    out["stage"] = res.stage;
    out["reason"] = res.reason;
    out["m"] = res.m;
    out["d"] = res.d;
    if (res.system)
        out["edge_system"] = json{{"S_size", res.system->S.size()}, {"F_size", res.system->F.size()},
                                  {"rounds", res.system->rounds}};
    out["triangle_system"] = res.triangles ? checked(d, {*res.triangles}) : json(nullptr);
    print(out);
    return exit_ok;
}

int run_verify(const Options & o)
{
    auto g = load(o.digraph_path);
    auto doc = read_witness(o.witness_path, g.digraph.size());
    auto verdict = verify_witness(g.digraph, doc);
    json out{{"kind", to_string(doc.kind())}, {"valid", verdict.ok}};
    if (!verdict.ok)
        out["locus"] = verdict.locus;
    print(out);
    return verdict.ok ? exit_ok : exit_unverified;
}

int run_experiment(const Options & o)
{
    const auto rule = parse_rule(o.rule);
    json trials = json::array();
    std::size_t budget_hits = 0;
    std::size_t domination_bound = 0;
    std::size_t peel_bound = 0;
    for (std::size_t i = 0; i < o.trials; ++i) {
        const auto seed = SplitMix64::substream_seed(o.seed, i);
        Tournament t(gen_random_tournament(o.n, seed));
        json row{{"trial", i}, {"seed", seed}};
        auto chi = exact_chi(t.graph(), o.budget);
        if (chi.status == SearchStatus::budget_exceeded) {
            ++budget_hits;
            row["chi"] = nullptr;
        }
        else {
            row["chi"] = chi.chi;
        }
        auto dom = strong_minor_by_domination(t, rule);
        auto peel = peel_transitive_plus_path(t, rule);
        (void)checked(t.graph(), {dom});
        (void)checked(t.graph(), {peel});
        auto k2 = strong_k2_minor(t);
        if (k2)
            (void)checked(t.graph(), {*k2});
        row["domination"] = dom.branch_sets.size();
        row["peel"] = peel.branch_sets.size();
        row["k2"] = k2.has_value();
        if (chi.status == SearchStatus::found) {
            domination_bound += 2 * dom.branch_sets.size() >= chi.chi;
            peel_bound += 3 * peel.branch_sets.size() >= chi.chi;
        }
        trials.push_back(std::move(row));
    }
    print(json{{"n", o.n},
               {"trials", o.trials},
               {"seed", o.seed},
               {"rule", o.rule},
               {"results", trials},
               {"summary",
                {{"domination_meets_half_chi", domination_bound},
                 {"peel_meets_third_chi", peel_bound},
                 {"chi_budget_exceeded", budget_hits}}}});
    return budget_hits > 0 ? exit_budget : exit_ok;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Strong complete minors in digraphs and tournaments"};
    app.require_subcommand(1);
    Options o;
    std::function<int()> action;

    auto add_input = [&](CLI::App * sub) { sub->add_option("--input,-i", o.input, "digraph document, - for stdin"); };
    auto add_budget = [&](CLI::App * sub) { sub->add_option("--budget", o.budget, "search node budget"); };

    auto * gen = app.add_subcommand("gen", "generate a digraph document");
    gen->require_subcommand(1);
    gen->add_flag("--dot", o.dot, "write DOT instead of JSON");
    gen->fallthrough();
    auto * gen_s = gen->add_subcommand("S", "the S_r family");
    gen_s->add_option("--r", o.r)->required();
    gen_s->callback([&] { action = [&] { emit_generated(gen_S(o.r), o.dot); return exit_ok; }; });
    auto * gen_g = gen->add_subcommand("G", "the G_r family");
    gen_g->add_option("--r", o.r)->required();
    gen_g->callback([&] { action = [&] { emit_generated(gen_G(o.r), o.dot); return exit_ok; }; });
    auto * gen_d = gen->add_subcommand("D", "the D_k family");
    gen_d->add_option("--k", o.k)->required();
    gen_d->callback([&] { action = [&] { emit_generated(gen_D(o.k), o.dot); return exit_ok; }; });
    auto * gen_t = gen->add_subcommand("transitive", "transitive tournament");
    gen_t->add_option("--n", o.n)->required();
    gen_t->callback([&] { action = [&] { emit_generated({gen_transitive(o.n), {}}, o.dot); return exit_ok; }; });
    auto * gen_rt = gen->add_subcommand("random-tournament", "uniform random tournament");
    gen_rt->add_option("--n", o.n)->required();
    gen_rt->add_option("--seed", o.seed)->required();
    gen_rt->callback(
        [&] { action = [&] { emit_generated({gen_random_tournament(o.n, o.seed), {}}, o.dot); return exit_ok; }; });
    auto * gen_rd = gen->add_subcommand("random-digraph", "random digraph, each ordered pair with probability p");
    gen_rd->add_option("--n", o.n)->required();
    gen_rd->add_option("--p", o.p)->required();
    gen_rd->add_option("--seed", o.seed)->required();
    gen_rd->callback(
        [&] { action = [&] { emit_generated({gen_random_digraph(o.n, o.p, o.seed), {}}, o.dot); return exit_ok; }; });
    auto * gen_l = gen->add_subcommand("layered", "layered tournament with minimum out-degree d");
    gen_l->add_option("--d", o.d)->required();
    gen_l->add_option("--levels", o.levels)->required();
    gen_l->add_option("--seed", o.seed)->required();
    gen_l->callback([&] { action = [&] { emit_generated(gen_layered(o.d, o.levels, o.seed), o.dot); return exit_ok; }; });

    auto * chi = app.add_subcommand("chi", "exact dichromatic number");
    add_input(chi);
    add_budget(chi);
    chi->callback([&] { action = [&] { return run_chi(o); }; });

    auto * sm = app.add_subcommand("sm", "largest strong complete minor (at most 30 vertices)");
    add_input(sm);
    add_budget(sm);
    sm->add_option("--max-r", o.max_r, "stop once a minor of this order is found");
    sm->callback([&] { action = [&] { return run_sm(o); }; });

    auto * scc = app.add_subcommand("scc", "strongly connected components in topological order");
    add_input(scc);
    scc->callback([&] { action = [&] { return run_scc(o); }; });

    auto * core = app.add_subcommand("dominating-core", "strongly connected dominating 2-chromatic core");
    add_input(core);
    core->callback([&] { action = [&] { return run_dominating_core(o); }; });

    auto * find = app.add_subcommand("find-minor", "constructive strong minor search");
    find->require_subcommand(1);
    const std::vector<std::pair<std::string, std::string>> finders{
        {"peel", "transitive sets closed by shortest return paths (tournaments)"},
        {"dominate", "repeated dominating cores (tournaments)"},
        {"k2", "two-set minor by the triangle loop (tournaments)"},
        {"connectivity", "nearly regular slice, weak minor and linkage (tournaments)"},
        {"outdegree", "edge system and sampled triangles (tournaments)"},
        {"escalate", "BFS-layer templates escalated to a strong minor (digraphs)"},
    };
    for (const auto & [name, about] : finders) {
        auto * sub = find->add_subcommand(name, about);
        add_input(sub);
        if (name == "peel" || name == "dominate")
            sub->add_option("--rule", o.rule, "component rule")->transform(CLI::CheckedTransformer(rule_names));
        if (name == "connectivity" || name == "outdegree" || name == "escalate") {
            sub->add_option("--r", o.r, "order of the minor sought")->required();
            add_budget(sub);
        }
        if (name == "connectivity" || name == "outdegree")
            sub->add_option("--c0", o.c0, "slice constant");
        if (name == "outdegree") {
            sub->add_option("--m", o.m_override, "edge system size");
            sub->add_option("--d", o.d_override, "out-degree threshold");
            sub->add_option("--seed", o.seed)->required();
        }
        if (name == "escalate")
            sub->add_option("--mode", o.mode)->check(CLI::IsMember({"exact", "heuristic"}));
        sub->callback([&, name = name] { action = [&, name] { return run_find_minor(name, o); }; });
    }

    auto * verify = app.add_subcommand("verify", "recompute a witness verdict");
    verify->add_option("--digraph", o.digraph_path)->required();
    verify->add_option("--witness", o.witness_path)->required();
    verify->callback([&] { action = [&] { return run_verify(o); }; });

    auto * experiment = app.add_subcommand("experiment", "batch runs over seeded instances");
    experiment->require_subcommand(1);
    auto * exp_rt = experiment->add_subcommand("random-tournament", "seeded random tournaments, one result per trial");
    exp_rt->add_option("--n", o.n)->required();
    exp_rt->add_option("--trials", o.trials)->required();
    exp_rt->add_option("--seed", o.seed)->required();
    exp_rt->add_option("--rule", o.rule, "component rule")->transform(CLI::CheckedTransformer(rule_names));
    add_budget(exp_rt);
    exp_rt->callback([&] { action = [&] { return run_experiment(o); }; });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return exit_usage;
    }

    try {
        return action();
    }
    catch (const Exit & e) {
        return e.code;
    }
    catch (const GraphError & e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return exit_bad_input;
    }
    catch (const std::exception & e) {
        std::cerr << json{{"error", std::string("internal error: ") + e.what()}}.dump() << "\n";
        return exit_internal;
    }
}
