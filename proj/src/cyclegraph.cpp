#include "mincw/cyclegraph.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mincw::cyclegraph {

int Graph::components() const {
    std::vector<int> parent(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) parent[static_cast<std::size_t>(i)] = i;
    const auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    int c = p;
    for (const auto& [u, v] : edges) {
        const int ru = find(u), rv = find(v);
        if (ru != rv) {
            parent[static_cast<std::size_t>(ru)] = rv;
            --c;
        }
    }
    return c;
}

bool Graph::has_self_loop() const {
    for (const auto& [u, v] : edges) {
        if (u == v) return true;
    }
    return false;
}

gf2::BitMatrix incidence_matrix(const Graph& g) {
    if (g.has_self_loop()) throw SelfLoop("self-loops have no incidence column over GF(2)");
    if (g.q() > gf2::kMaxBits) throw EdgeOverflow("more than 64 edges");
    gf2::BitMatrix m(g.p, g.q());
    for (int e = 0; e < g.q(); ++e) {
        m.set(g.edges[static_cast<std::size_t>(e)].first, e, true);
        m.set(g.edges[static_cast<std::size_t>(e)].second, e, true);
    }
    return m;
}

codes::LinearCode cycle_code(const Graph& g) {
    const gf2::BitMatrix inc = incidence_matrix(g);
    const int dim = g.q() - g.p + g.components();
    if (g.q() < 1 || dim < 1) throw AcyclicGraph("graph has trivial cycle space");
    return codes::LinearCode(g.q(), gf2::kernel_basis(inc));
}

namespace {

struct CycleCounter {
    const std::vector<std::pair<int, int>>& edges;
    std::vector<std::vector<std::pair<int, int>>> adjacency;  // vertex -> (neighbor, edge index)
    std::vector<bool> visited;
    std::uint64_t count = 0;
    int anchor = 0;
    int target = 0;

    explicit CycleCounter(const Graph& g) : edges(g.edges), visited(static_cast<std::size_t>(g.p), false) {
        adjacency.resize(static_cast<std::size_t>(g.p));
        for (int e = 0; e < g.q(); ++e) {
            const auto& [u, v] = edges[static_cast<std::size_t>(e)];
            if (u == v) continue;  // self-loops counted separately
            adjacency[static_cast<std::size_t>(u)].emplace_back(v, e);
            adjacency[static_cast<std::size_t>(v)].emplace_back(u, e);
        }
    }

    void dfs(int current) {
        for (const auto& [next, e] : adjacency[static_cast<std::size_t>(current)]) {
            if (e <= anchor) continue;
            if (next == target) {
                ++count;
                continue;
            }
            if (visited[static_cast<std::size_t>(next)]) continue;
            visited[static_cast<std::size_t>(next)] = true;
            dfs(next);
            visited[static_cast<std::size_t>(next)] = false;
        }
    }
};

}  // namespace

std::uint64_t count_elementary_cycles(const Graph& g) {
    CycleCounter counter(g);
    for (int a = 0; a < g.q(); ++a) {
        const auto& [u, v] = g.edges[static_cast<std::size_t>(a)];
        if (u == v) {
            ++counter.count;
            continue;
        }
        // Cycles whose minimum edge index is `a`: path from v back to u over
        // strictly larger edge indices.
        counter.anchor = a;
        counter.target = u;
        counter.visited[static_cast<std::size_t>(v)] = true;
        counter.dfs(v);
        counter.visited[static_cast<std::size_t>(v)] = false;
    }
    return counter.count;
}

CycleReport verify_cycle_correspondence(const Graph& g) {
    CycleReport report;
    report.p = g.p;
    report.q = g.q();
    const codes::LinearCode code = cycle_code(g);
    report.dimension = code.k();
    report.cycles_via_code = codes::minimal_codewords(code).count();
    report.cycles_via_backtracking = count_elementary_cycles(g);
    const bounds::GraphCycleBounds b = bounds::graph_cycle_upper(g.p, g.q());
    report.bound_new = b.bound_new;
    report.bound_old = b.bound_old;
    report.agree = report.cycles_via_code == report.cycles_via_backtracking;
    return report;
}

Graph read_graph(std::istream& in) {
    std::string line;
    if (!codes::next_content_line(in, line)) throw codes::ParseError("empty graph file");
    std::istringstream header(line);
    int p = 0, q = 0;
    if (!(header >> p >> q) || p < 1 || q < 0) throw codes::ParseError("bad header, expected \"p q\"");

    Graph g;
    g.p = p;
    for (int e = 0; e < q; ++e) {
        if (!codes::next_content_line(in, line)) throw codes::ParseError("missing edge line");
        std::istringstream es(line);
        int u = 0, v = 0;
        if (!(es >> u >> v) || u < 0 || v < 0 || u >= p || v >= p)
            throw codes::ParseError("bad edge: " + line);
        g.edges.emplace_back(u, v);
    }
    return g;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw codes::ParseError("cannot open " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.p << ' ' << g.q() << '\n';
    for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
}

Graph complete_graph(int p) {
    Graph g;
    g.p = p;
    for (int u = 0; u < p; ++u) {
        for (int v = u + 1; v < p; ++v) g.edges.emplace_back(u, v);
    }
    return g;
}

Graph petersen_graph() {
    Graph g;
    g.p = 10;
    for (int i = 0; i < 5; ++i) {
        g.edges.emplace_back(i, (i + 1) % 5);          // outer pentagon
        g.edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.edges.emplace_back(i, 5 + i);                // spokes
    }
    return g;
}

}  // namespace mincw::cyclegraph
