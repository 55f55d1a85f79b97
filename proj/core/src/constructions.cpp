#include <sminor/constructions.hpp>
#include <sminor/random.hpp>

#include <numeric>

namespace sminor {

namespace {

    void copy_into(Digraph & target, const Digraph & source, Vertex offset)
    {
        for (const auto & e : source.edges())
            target.add_edge(offset + e.from, offset + e.to);
    }

    void append_labels(std::vector<std::string> & out, const std::vector<std::string> & in,
                       const std::string & prefix)
    {
        for (const auto & l : in)
            out.push_back(prefix + l);
    }

    Digraph random_tournament_on(std::size_t n, SplitMix64 & rng)
    {
        Digraph d(n);
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j) {
                if ((rng.next() >> 63U) != 0)
                    d.add_edge(i, j);
                else
                    d.add_edge(j, i);
            }
        return d;
    }

} // namespace

Digraph delta_compose(const Digraph & h, const Digraph & g, const Digraph & d)
{
    const std::size_t nh = h.size();
    const std::size_t ng = g.size();
    const std::size_t nd = d.size();
    Digraph out(nh + ng + nd);
    copy_into(out, h, 0);
    copy_into(out, g, nh);
    copy_into(out, d, nh + ng);
    for (Vertex a = 0; a < nh; ++a)
        for (Vertex b = 0; b < ng; ++b)
            out.add_edge(a, nh + b);
    for (Vertex b = 0; b < ng; ++b)
        for (Vertex c = 0; c < nd; ++c)
            out.add_edge(nh + b, nh + ng + c);
    for (Vertex c = 0; c < nd; ++c)
        for (Vertex a = 0; a < nh; ++a)
            out.add_edge(nh + ng + c, a);
    return out;
}

LabelledDigraph gen_S(std::size_t r)
{
    if (r == 0)
        throw GraphError("S_r requires r >= 1");
    LabelledDigraph s{Digraph(1), {"apex"}};
    for (std::size_t i = 2; i <= r; ++i) {
        LabelledDigraph next;
        next.digraph = delta_compose(Digraph(1), s.digraph, s.digraph);
        next.labels.emplace_back("apex");
        append_labels(next.labels, s.labels, "copy-A/");
        append_labels(next.labels, s.labels, "copy-B/");
        s = std::move(next);
    }
    return s;
}

LabelledDigraph gen_G(std::size_t r)
{
    if (r == 0)
        throw GraphError("G_r requires r >= 1");
    LabelledDigraph g{Digraph(1), {"T vertex 0"}};
    for (std::size_t k = 1; k < r; ++k) {
        // build G_{k+1} from g = G_k
        const std::size_t t = k + 1;
        const std::size_t copy = g.digraph.size();
        const std::size_t n = t + t * (t - 1) / 2 * copy;
        LabelledDigraph next{Digraph(n), {}};
        for (Vertex i = 0; i < t; ++i) {
            next.labels.push_back("T vertex " + std::to_string(i));
            for (Vertex j = i + 1; j < t; ++j)
                next.digraph.add_edge(i, j);
        }
        Vertex offset = t;
        for (Vertex v = 0; v < t; ++v)
            for (Vertex w = v + 1; w < t; ++w) {
                copy_into(next.digraph, g.digraph, offset);
                append_labels(next.labels, g.labels,
                              "copy (" + std::to_string(v) + "," + std::to_string(w) + ")/");
                for (Vertex u = offset; u < offset + copy; ++u) {
                    next.digraph.add_edge(u, v);
                    next.digraph.add_edge(w, u);
                }
                offset += copy;
            }
        g = std::move(next);
    }
    return g;
}

LabelledDigraph gen_D(std::size_t k)
{
    if (k == 0)
        throw GraphError("D_k requires k >= 1");
    LabelledDigraph d{Digraph(3), {"triangle vertex 0", "triangle vertex 1", "triangle vertex 2"}};
    d.digraph.add_edge(0, 1);
    d.digraph.add_edge(1, 2);
    d.digraph.add_edge(2, 0);
    for (std::size_t j = 1; j < k; ++j) {
        const std::size_t base = d.digraph.size();
        const std::size_t block = j + 2; // |A_x| + 1
        LabelledDigraph next{Digraph(base * (j + 3)), {}};
        copy_into(next.digraph, d.digraph, 0);
        append_labels(next.labels, d.labels, "base/");
        for (Vertex x = 0; x < base; ++x) {
            const Vertex a0 = base + x * block;
            const Vertex xp = a0 + block - 1;
            for (Vertex a = a0; a < xp; ++a) {
                next.labels.push_back("A_x of x=" + std::to_string(x));
                next.digraph.add_edge(a, x);
                for (Vertex y : d.digraph.out(x))
                    next.digraph.add_edge(a, y);
                next.digraph.add_edge(xp, a);
            }
            next.labels.push_back("x' of x=" + std::to_string(x));
            next.digraph.add_edge(x, xp);
        }
        d = std::move(next);
    }
    return d;
}

Tournament gen_transitive(std::size_t n)
{
    Digraph d(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            d.add_edge(i, j);
    return Tournament(std::move(d));
}

Tournament gen_random_tournament(std::size_t n, std::uint64_t seed)
{
    SplitMix64 rng(seed);
    return Tournament(random_tournament_on(n, rng));
}

Digraph gen_random_digraph(std::size_t n, double p, std::uint64_t seed)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw GraphError("edge probability outside [0, 1]");
    SplitMix64 rng(seed);
    Digraph d(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j)
            if (i != j && rng.uniform() < p)
                d.add_edge(i, j);
    return d;
}

Tournament gen_regular_tournament(std::size_t n, std::uint64_t seed)
{
    if (n % 2 == 0)
        throw GraphError("regular tournament needs an odd vertex count");
    SplitMix64 rng(seed);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    for (std::size_t i = n; i > 1; --i)
        std::swap(perm[i - 1], perm[rng.below(i)]);
    Digraph d(n);
    for (Vertex i = 0; i < n; ++i)
        for (std::size_t j = 1; j <= n / 2; ++j)
            d.add_edge(perm[i], perm[(i + j) % n]);
    return Tournament(std::move(d));
}

LabelledDigraph gen_layered(std::size_t d, std::size_t levels, std::uint64_t seed)
{
    if (levels == 0 || d < levels)
        throw GraphError("layered tournament requires levels >= 1 and d >= levels");
    SplitMix64 rng(seed);

    struct Block {
        Vertex a_begin;
        std::size_t a_size;
        Vertex rho;
    };
    std::vector<Block> blocks;
    Vertex next = 0;
    for (std::size_t i = 0; i < levels; ++i) {
        Block b{next, d - i, 0};
        b.rho = b.a_begin + b.a_size;
        next = b.rho + 1;
        blocks.push_back(b);
    }
    const Vertex b_begin = next;
    const std::size_t b_size = 2 * (d - levels) + 1;
    const std::size_t n = b_begin + b_size;

    LabelledDigraph out{Digraph(n), std::vector<std::string>(n)};
    auto & g = out.digraph;
    for (std::size_t i = 0; i < levels; ++i) {
        const auto & b = blocks[i];
        auto inner = random_tournament_on(b.a_size, rng);
        copy_into(g, inner, b.a_begin);
        for (Vertex a = b.a_begin; a < b.rho; ++a) {
            out.labels[a] = "A_" + std::to_string(i + 1) + " member";
            g.add_edge(b.rho, a);
            for (Vertex u = b.rho + 1; u < n; ++u)
                g.add_edge(a, u);
        }
        out.labels[b.rho] = "rho_" + std::to_string(i + 1);
        for (Vertex u = b.rho + 1; u < n; ++u)
            g.add_edge(u, b.rho);
    }
    auto regular = gen_regular_tournament(b_size, rng.next());
    copy_into(g, regular.graph(), b_begin);
    for (Vertex u = b_begin; u < n; ++u)
        out.labels[u] = "B member";
    return out;
}

} // namespace sminor
