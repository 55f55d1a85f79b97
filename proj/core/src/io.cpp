#include <sminor/connectivity.hpp>
#include <sminor/io.hpp>

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace sminor {

namespace {

    using json = nlohmann::ordered_json;

    [[noreturn]] void bad(const std::string & diagnostic, const std::string & locus)
    {
        throw FormatError(diagnostic + ": " + locus);
    }

    json parse_json(std::string_view text)
    {
        try {
            return json::parse(text);
        }
        catch (const json::parse_error & e) {
            bad("malformed JSON", e.what());
        }
    }

    const json & field(const json & obj, const char * key, const std::string & locus)
    {
        if (!obj.is_object())
            bad("wrong type", locus + " must be an object");
        auto it = obj.find(key);
        if (it == obj.end())
            bad("missing field", locus.empty() ? key : locus + "." + key);
        return *it;
    }

    std::string at(const std::string & locus, std::size_t i)
    {
        return locus + "[" + std::to_string(i) + "]";
    }

    const json & array(const json & j, const std::string & locus)
    {
        if (!j.is_array())
            bad("wrong type", locus + " must be an array");
        return j;
    }

    std::uint64_t unsigned_number(const json & j, const std::string & locus)
    {
        if (j.is_number_unsigned())
            return j.get<std::uint64_t>();
        if (j.is_number_integer())
            bad("index out of range", locus + " = " + j.dump());
        bad("wrong type", locus + " must be a non-negative integer");
    }

    Vertex vertex(const json & j, std::size_t n, const std::string & locus)
    {
        auto v = unsigned_number(j, locus);
        if (v >= n)
            bad("index out of range", locus + " = " + std::to_string(v) + " with n = " + std::to_string(n));
        return static_cast<Vertex>(v);
    }

    std::vector<Vertex> vertex_list(const json & j, std::size_t n, const std::string & locus)
    {
        std::vector<Vertex> out;
        const auto & a = array(j, locus);
        for (std::size_t i = 0; i < a.size(); ++i)
            out.push_back(vertex(a[i], n, at(locus, i)));
        return out;
    }

    VertexSet vertex_set(const json & j, std::size_t n, const std::string & locus)
    {
        VertexSet s(n);
        auto list = vertex_list(j, n, locus);
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (s.contains(list[i]))
                bad("duplicate vertex", at(locus, i) + " = " + std::to_string(list[i]));
            s.insert(list[i]);
        }
        return s;
    }

    std::vector<VertexSet> set_list(const json & j, std::size_t n, const std::string & locus)
    {
        std::vector<VertexSet> out;
        const auto & a = array(j, locus);
        for (std::size_t i = 0; i < a.size(); ++i)
            out.push_back(vertex_set(a[i], n, at(locus, i)));
        return out;
    }

    json to_json(const VertexSet & s)
    {
        return json(s.to_vector());
    }

    json to_json(const std::vector<VertexSet> & sets)
    {
        json a = json::array();
        for (const auto & s : sets)
            a.push_back(to_json(s));
        return a;
    }

    AcyclicSet acyclic_set(const json & j, std::size_t n, const std::string & locus)
    {
        AcyclicSet a;
        a.order = vertex_list(j, n, locus);
        a.vertices = VertexSet(n, a.order);
        if (a.vertices.size() != a.order.size())
            bad("duplicate vertex", locus);
        return a;
    }

    json coloring_json(const Coloring & c)
    {
        json colors = json::array();
        for (auto x : c.color)
            colors.push_back(x == no_color ? json(nullptr) : json(x));
        return json{{"k", c.k}, {"color", colors}};
    }

    Coloring parse_coloring(const json & j, std::size_t n, const std::string & locus)
    {
        Coloring c;
        c.k = unsigned_number(field(j, "k", locus), locus + ".k");
        const std::string cl = locus + ".color";
        const auto & a = array(field(j, "color", locus), cl);
        if (a.size() != n)
            bad("wrong type", cl + " has " + std::to_string(a.size()) + " entries, expected " + std::to_string(n));
        for (std::size_t i = 0; i < a.size(); ++i)
            c.color.push_back(a[i].is_null() ? no_color : unsigned_number(a[i], at(cl, i)));
        return c;
    }

    json payload_json(const StrongMinorWitness & w)
    {
        return json{{"branch_sets", to_json(w.branch_sets)}};
    }

    json payload_json(const WeakMinorWitness & w)
    {
        return json{{"branch_sets", to_json(w.branch_sets)}};
    }

    json payload_json(const TemplateWitness & w)
    {
        return json{{"parts", to_json(w.parts)}};
    }

    json payload_json(const PartialMinorWitness & w)
    {
        json flags = json::array();
        for (bool f : w.strong_flags)
            flags.push_back(f);
        return json{{"branch_sets", to_json(w.branch_sets)}, {"strong_flags", flags}};
    }

    json payload_json(const Coloring & c)
    {
        return coloring_json(c);
    }

    json payload_json(const DominatingCore & c)
    {
        json j;
        j["within"] = to_json(c.within);
        j["R"] = to_json(c.R);
        j["x"] = c.x;
        j["y"] = c.y;
        j["S_of_x"] = c.S_of_x.order;
        j["w_star"] = c.w_star;
        j["F"] = to_json(c.F);
        j["F_layers"] = to_json(c.F_layers);
        j["S"] = c.S.order;
        j["P"] = c.P;
        j["w"] = c.w ? json(*c.w) : json(nullptr);
        j["coloring"] = coloring_json(c.two_coloring);
        return j;
    }

    json payload_json(const TriangleSystem & t)
    {
        json j;
        j["triangles"] = t.triangles;
        j["L_sets"] = to_json(t.L_sets);
        j["X"] = t.X;
        j["Y"] = t.Y;
        j["U"] = t.U;
        json edges = json::array();
        for (Vertex a = 0; a < t.auxiliary_graph.size(); ++a)
            for (Vertex b : t.auxiliary_graph.neighbours(a))
                if (a < b)
                    edges.push_back({a, b});
        j["auxiliary_edges"] = edges;
        json samples = json::array();
        for (const auto & s : t.samples)
            samples.push_back(
                json{{"seed", s.seed}, {"z", s.z}, {"X", s.X}, {"Y", s.Y}, {"potential", s.potential}});
        j["samples"] = samples;
        j["accepted"] = t.accepted ? json(*t.accepted) : json(nullptr);
        return j;
    }

    DominatingCore parse_core(const json & j, std::size_t n)
    {
        DominatingCore c;
        c.within = vertex_set(field(j, "within", "payload"), n, "payload.within");
        c.R = vertex_set(field(j, "R", "payload"), n, "payload.R");
        c.x = vertex(field(j, "x", "payload"), n, "payload.x");
        c.y = vertex(field(j, "y", "payload"), n, "payload.y");
        c.S_of_x = acyclic_set(field(j, "S_of_x", "payload"), n, "payload.S_of_x");
        c.w_star = vertex(field(j, "w_star", "payload"), n, "payload.w_star");
        c.F = vertex_set(field(j, "F", "payload"), n, "payload.F");
        c.F_layers = set_list(field(j, "F_layers", "payload"), n, "payload.F_layers");
        c.S = acyclic_set(field(j, "S", "payload"), n, "payload.S");
        c.P = vertex_list(field(j, "P", "payload"), n, "payload.P");
        const auto & w = field(j, "w", "payload");
        if (!w.is_null())
            c.w = vertex(w, n, "payload.w");
        c.two_coloring = parse_coloring(field(j, "coloring", "payload"), n, "payload.coloring");
        return c;
    }

    TriangleSystem parse_triangles(const json & j, std::size_t n)
    {
        TriangleSystem t;
        const auto & tri = array(field(j, "triangles", "payload"), "payload.triangles");
        for (std::size_t i = 0; i < tri.size(); ++i) {
            auto list = vertex_list(tri[i], n, at("payload.triangles", i));
            if (list.size() != 3)
                bad("wrong type", at("payload.triangles", i) + " must have three vertices");
            t.triangles.push_back({list[0], list[1], list[2]});
        }
        t.L_sets = set_list(field(j, "L_sets", "payload"), n, "payload.L_sets");
        t.X = unsigned_number(field(j, "X", "payload"), "payload.X");
        t.Y = unsigned_number(field(j, "Y", "payload"), "payload.Y");
        const auto & u = array(field(j, "U", "payload"), "payload.U");
        for (std::size_t i = 0; i < u.size(); ++i)
            t.U.push_back(vertex(u[i], t.triangles.size(), at("payload.U", i)));
        t.auxiliary_graph = Graph(t.U.size());
        const auto & edges = array(field(j, "auxiliary_edges", "payload"), "payload.auxiliary_edges");
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto e = vertex_list(edges[i], t.U.size(), at("payload.auxiliary_edges", i));
            if (e.size() != 2 || e[0] == e[1])
                bad("wrong type", at("payload.auxiliary_edges", i) + " must join two distinct vertices");
            t.auxiliary_graph.add_edge(e[0], e[1]);
        }
        const auto & samples = array(field(j, "samples", "payload"), "payload.samples");
        for (std::size_t i = 0; i < samples.size(); ++i) {
            const std::string locus = at("payload.samples", i);
            TriangleSample s;
            s.seed = unsigned_number(field(samples[i], "seed", locus), locus + ".seed");
            s.z = vertex_list(field(samples[i], "z", locus), n, locus + ".z");
            s.X = unsigned_number(field(samples[i], "X", locus), locus + ".X");
            s.Y = unsigned_number(field(samples[i], "Y", locus), locus + ".Y");
            const auto & p = field(samples[i], "potential", locus);
            if (!p.is_number())
                bad("wrong type", locus + ".potential must be a number");
            s.potential = p.get<double>();
            t.samples.push_back(std::move(s));
        }
        const auto & acc = field(j, "accepted", "payload");
        if (!acc.is_null())
            t.accepted = vertex(acc, t.samples.size(), "payload.accepted");
        return t;
    }

    std::string slurp(const std::filesystem::path & path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw GraphError("cannot open " + path.string());
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    void spill(const std::filesystem::path & path, const std::string & text)
    {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw GraphError("cannot write " + path.string());
        out << text;
    }

    Verdict verify_core(const Digraph & d, const DominatingCore & c)
    {
        if (c.R.empty())
            return Verdict::fail("R is empty");
        if (!c.R.is_subset_of(c.within))
            return Verdict::fail("R leaves the vertex set it dominates");
        if (!is_strongly_connected(d, c.R))
            return Verdict::fail("R is not strongly connected");
        if (!dominates(d, c.R, DominationMode::out, c.within))
            return Verdict::fail("R is not out-dominating");
        if (!dominates(d, c.R, DominationMode::in, c.within))
            return Verdict::fail("R is not in-dominating");
        if (c.two_coloring.k != 2)
            return Verdict::fail("coloring uses " + std::to_string(c.two_coloring.k) + " colours, expected 2");
        if (auto v = verify_coloring(d, c.two_coloring, c.R); !v)
            return v;
        return Verdict::pass();
    }

    Verdict verify_triangles(const Digraph & d, const TriangleSystem & t)
    {
        const std::size_t m = t.triangles.size();
        if (t.L_sets.size() != m)
            return Verdict::fail("L_sets has " + std::to_string(t.L_sets.size()) + " entries, expected "
                                 + std::to_string(m));
        for (std::size_t i = 0; i < m; ++i) {
            const auto [w, v, z] = t.triangles[i];
            if (!d.has_edge(w, v) || !d.has_edge(v, z) || !d.has_edge(z, w))
                return Verdict::fail("triangle " + std::to_string(i) + " is not a directed triangle w -> v -> z -> w");
            if (!t.L_sets[i].is_subset_of(d.out(v) & d.in(w)))
                return Verdict::fail("L_" + std::to_string(i) + " is not inside N+(v_i) & N-(w_i)");
            if (!t.L_sets[i].contains(z))
                return Verdict::fail("z_" + std::to_string(i) + " is not in L_" + std::to_string(i));
        }
        const double m2_9 = static_cast<double>(m) * static_cast<double>(m) / 9.0;
        for (std::size_t k = 0; k < t.samples.size(); ++k) {
            const auto & s = t.samples[k];
            const std::string name = "sample " + std::to_string(k);
            if (s.z.size() != m)
                return Verdict::fail(name + " has " + std::to_string(s.z.size()) + " z values");
            VertexSet distinct(d.size());
            for (std::size_t i = 0; i < m; ++i) {
                if (!t.L_sets[i].contains(s.z[i]))
                    return Verdict::fail(name + ": z_" + std::to_string(i) + " is not in L_" + std::to_string(i));
                distinct.insert(s.z[i]);
            }
            std::size_t y = 0;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i + 1; j < m; ++j)
                    if (!is_good_pair(d, {t.triangles[i][0], t.triangles[i][1], s.z[i]},
                                      {t.triangles[j][0], t.triangles[j][1], s.z[j]}))
                        ++y;
            if (distinct.size() != s.X)
                return Verdict::fail(name + ": X = " + std::to_string(s.X) + ", recount "
                                     + std::to_string(distinct.size()));
            if (y != s.Y)
                return Verdict::fail(name + ": Y = " + std::to_string(s.Y) + ", recount " + std::to_string(y));
            const double x = static_cast<double>(s.X);
            const double potential = x * x - 40.0 * static_cast<double>(y) - m2_9;
            if (std::abs(potential - s.potential) > 1e-9 * std::max(1.0, std::abs(potential)))
                return Verdict::fail(name + ": potential does not match X and Y");
        }
        if (t.accepted) {
            const auto & s = t.samples[*t.accepted];
            if (s.potential <= 0)
                return Verdict::fail("accepted sample has non-positive potential");
            for (std::size_t i = 0; i < m; ++i)
                if (s.z[i] != t.triangles[i][2])
                    return Verdict::fail("triangle " + std::to_string(i) + " does not use the accepted z");
            if (s.X != t.X || s.Y != t.Y)
                return Verdict::fail("X and Y differ from the accepted sample");
        }
        VertexSet seen(d.size());
        std::vector<std::size_t> u;
        for (std::size_t i = 0; i < m; ++i)
            if (!seen.contains(t.triangles[i][2])) {
                seen.insert(t.triangles[i][2]);
                u.push_back(i);
            }
        if (u != t.U)
            return Verdict::fail("U is not the first occurrence of each distinct z");
        for (std::size_t a = 0; a < u.size(); ++a)
            for (std::size_t b = a + 1; b < u.size(); ++b)
                if (t.auxiliary_graph.has_edge(a, b) != is_good_pair(d, t.triangles[u[a]], t.triangles[u[b]]))
                    return Verdict::fail("auxiliary edge " + std::to_string(a) + "-" + std::to_string(b)
                                         + " disagrees with the good-pair test");
        return Verdict::pass();
    }

} // namespace

LabelledDigraph parse_digraph(std::string_view text)
{
    const json doc = parse_json(text);
    const std::size_t n = unsigned_number(field(doc, "n", ""), "n");
    const auto & edges = array(field(doc, "edges", ""), "edges");
    LabelledDigraph out{Digraph(n), {}};
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string locus = at("edges", i);
        if (!edges[i].is_array() || edges[i].size() != 2)
            bad("wrong type", locus + " must be a pair [u, v]");
        const Vertex u = vertex(edges[i][0], n, at(locus, 0));
        const Vertex v = vertex(edges[i][1], n, at(locus, 1));
        if (u == v)
            bad("loop", locus + " = " + edges[i].dump());
        if (out.digraph.has_edge(u, v))
            bad("duplicate edge", locus + " = " + edges[i].dump());
        out.digraph.add_edge(u, v);
    }
    if (auto it = doc.find("labels"); it != doc.end()) {
        if (!it->is_object())
            bad("wrong type", "labels must be an object");
        out.labels.assign(n, "");
        for (const auto & [key, value] : it->items()) {
            const std::string locus = "labels." + key;
            std::size_t v = 0;
            std::size_t used = 0;
            try {
                v = std::stoul(key, &used);
            }
            catch (const std::exception &) {
                bad("wrong type", locus + " key must be a vertex id");
            }
            if (used != key.size())
                bad("wrong type", locus + " key must be a vertex id");
            if (v >= n)
                bad("index out of range", locus + " with n = " + std::to_string(n));
            if (!value.is_string())
                bad("wrong type", locus + " must be a string");
            out.labels[v] = value.get<std::string>();
        }
    }
    return out;
}

std::string format_digraph(const Digraph & d, const std::vector<std::string> & labels)
{
    json doc;
    doc["n"] = d.size();
    json edges = json::array();
    for (const auto & e : d.edges())
        edges.push_back({e.from, e.to});
    doc["edges"] = edges;
    json lab = json::object();
    for (std::size_t v = 0; v < labels.size() && v < d.size(); ++v)
        if (!labels[v].empty())
            lab[std::to_string(v)] = labels[v];
    if (!lab.empty())
        doc["labels"] = lab;
    return doc.dump() + "\n";
}

LabelledDigraph read_digraph(const std::filesystem::path & path)
{
    return parse_digraph(slurp(path));
}

void write_digraph(const Digraph & d, const std::filesystem::path & path, const std::vector<std::string> & labels)
{
    spill(path, format_digraph(d, labels));
}

std::string format_dot(const Digraph & d)
{
    std::string out = "digraph {\n";
    for (Vertex v = 0; v < d.size(); ++v)
        if (d.out(v).empty() && d.in(v).empty())
            out += "  " + std::to_string(v) + ";\n";
    for (const auto & e : d.edges())
        out += "  " + std::to_string(e.from) + " -> " + std::to_string(e.to) + ";\n";
    out += "}\n";
    return out;
}

void export_dot(const Digraph & d, const std::filesystem::path & path)
{
    spill(path, format_dot(d));
}

std::string_view to_string(WitnessKind kind)
{
    switch (kind) {
    case WitnessKind::strong_minor:
        return "strong-minor";
    case WitnessKind::weak_minor:
        return "weak-minor";
    case WitnessKind::template_:
        return "template";
    case WitnessKind::partial_minor:
        return "partial-minor";
    case WitnessKind::coloring:
        return "coloring";
    case WitnessKind::dominating_core:
        return "dominating-core";
    case WitnessKind::triangle_system:
        return "triangle-system";
    }
    throw std::logic_error("unknown witness kind");
}

WitnessKind parse_witness_kind(std::string_view name)
{
    for (auto kind : {WitnessKind::strong_minor, WitnessKind::weak_minor, WitnessKind::template_,
                      WitnessKind::partial_minor, WitnessKind::coloring, WitnessKind::dominating_core,
                      WitnessKind::triangle_system})
        if (to_string(kind) == name)
            return kind;
    bad("wrong type", "kind = \"" + std::string(name) + "\" is not a witness kind");
}

WitnessKind WitnessDocument::kind() const
{
    return static_cast<WitnessKind>(payload.index());
}

WitnessDocument parse_witness(std::string_view text, std::size_t n)
{
    const json doc = parse_json(text);
    const auto & kind_json = field(doc, "kind", "");
    if (!kind_json.is_string())
        bad("wrong type", "kind must be a string");
    const auto kind = parse_witness_kind(kind_json.get<std::string>());
    const json & p = field(doc, "payload", "");
    switch (kind) {
    case WitnessKind::strong_minor:
        return {StrongMinorWitness{set_list(field(p, "branch_sets", "payload"), n, "payload.branch_sets")}};
    case WitnessKind::weak_minor:
        return {WeakMinorWitness{set_list(field(p, "branch_sets", "payload"), n, "payload.branch_sets")}};
    case WitnessKind::template_:
        return {TemplateWitness{set_list(field(p, "parts", "payload"), n, "payload.parts")}};
    case WitnessKind::partial_minor: {
        PartialMinorWitness w;
        w.branch_sets = set_list(field(p, "branch_sets", "payload"), n, "payload.branch_sets");
        const auto & flags = array(field(p, "strong_flags", "payload"), "payload.strong_flags");
        for (std::size_t i = 0; i < flags.size(); ++i) {
            if (!flags[i].is_boolean())
                bad("wrong type", at("payload.strong_flags", i) + " must be a boolean");
            w.strong_flags.push_back(flags[i].get<bool>());
        }
        return {w};
    }
    case WitnessKind::coloring:
        return {parse_coloring(p, n, "payload")};
    case WitnessKind::dominating_core:
        return {parse_core(p, n)};
    case WitnessKind::triangle_system:
        return {parse_triangles(p, n)};
    }
    throw std::logic_error("unknown witness kind");
}

std::string format_witness(const WitnessDocument & doc)
{
    json j;
    j["kind"] = to_string(doc.kind());
    j["payload"] = std::visit([](const auto & w) { return payload_json(w); }, doc.payload);
    return j.dump() + "\n";
}

WitnessDocument read_witness(const std::filesystem::path & path, std::size_t universe)
{
    return parse_witness(slurp(path), universe);
}

void write_witness(const WitnessDocument & doc, const std::filesystem::path & path)
{
    spill(path, format_witness(doc));
}

Verdict verify_witness(const Digraph & d, const WitnessDocument & doc)
{
    switch (doc.kind()) {
    case WitnessKind::strong_minor:
        return verify_strong_minor(d, std::get<StrongMinorWitness>(doc.payload));
    case WitnessKind::weak_minor:
        return verify_weak_minor(d, std::get<WeakMinorWitness>(doc.payload));
    case WitnessKind::template_:
        return verify_template(d, std::get<TemplateWitness>(doc.payload));
    case WitnessKind::partial_minor:
        return verify_partial_minor(d, std::get<PartialMinorWitness>(doc.payload));
    case WitnessKind::coloring:
        return verify_coloring(d, std::get<Coloring>(doc.payload));
    case WitnessKind::dominating_core:
        return verify_core(d, std::get<DominatingCore>(doc.payload));
    case WitnessKind::triangle_system:
        return verify_triangles(d, std::get<TriangleSystem>(doc.payload));
    }
    throw std::logic_error("unknown witness kind");
}

} // namespace sminor
