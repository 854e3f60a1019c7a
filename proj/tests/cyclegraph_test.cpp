#include <doctest.h>

#include <random>
#include <sstream>

#include "mincw/cyclegraph.hpp"

using namespace mincw;
using cyclegraph::Graph;

namespace {

// Closed form for complete graphs: sum_{k=3}^{p} C(p,k) (k-1)! / 2.
std::uint64_t complete_graph_cycles(int p) {
    std::uint64_t total = 0;
    for (int k = 3; k <= p; ++k) {
        std::uint64_t binom = 1;
        for (int i = 1; i <= k; ++i) binom = binom * static_cast<std::uint64_t>(p - k + i) / i;
        std::uint64_t fact = 1;
        for (int i = 2; i < k; ++i) fact *= static_cast<std::uint64_t>(i);
        total += binom * fact / 2;
    }
    return total;
}

Graph random_connected_graph(std::mt19937_64& rng, int max_q) {
    const int p = 3 + static_cast<int>(rng() % 6);
    Graph g;
    g.p = p;
    for (int v = 1; v < p; ++v) g.edges.emplace_back(static_cast<int>(rng() % static_cast<unsigned>(v)), v);
    const int extra = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_q - p + 2));
    for (int e = 0; e < extra && g.q() < max_q; ++e) {
        const int u = static_cast<int>(rng() % static_cast<unsigned>(p));
        int v = static_cast<int>(rng() % static_cast<unsigned>(p));
        if (u == v) v = (v + 1) % p;
        g.edges.emplace_back(u, v);
    }
    return g;
}

}  // namespace

TEST_CASE("incidence matrix") {
    const Graph triangle = cyclegraph::complete_graph(3);
    const auto inc = cyclegraph::incidence_matrix(triangle);
    CHECK(inc.rows == 3);
    CHECK(inc.cols == 3);
    for (int e = 0; e < 3; ++e) {
        int weight = 0;
        for (int v = 0; v < 3; ++v) weight += inc.get(v, e);
        CHECK(weight == 2);
    }
    CHECK(gf2::rank(inc) == 2);

    Graph path;
    path.p = 3;
    path.edges = {{0, 1}, {1, 2}};
    const auto pinc = cyclegraph::incidence_matrix(path);
    CHECK(gf2::rank(pinc) == 2);
    CHECK(gf2::kernel_basis(pinc).rows == 0);

    Graph parallel;
    parallel.p = 2;
    parallel.edges = {{0, 1}, {0, 1}};
    const auto kb = gf2::kernel_basis(cyclegraph::incidence_matrix(parallel));
    REQUIRE(kb.rows == 1);
    CHECK(kb.row(0) == 0b11);

    Graph loop;
    loop.p = 2;
    loop.edges = {{0, 0}};
    CHECK_THROWS_AS(cyclegraph::incidence_matrix(loop), cyclegraph::SelfLoop);
}

TEST_CASE("cycle code parameters") {
    const auto k4 = cyclegraph::cycle_code(cyclegraph::complete_graph(4));
    CHECK(k4.n() == 6);
    CHECK(k4.k() == 3);

    const auto k6 = cyclegraph::cycle_code(cyclegraph::complete_graph(6));
    CHECK(k6.n() == 15);
    CHECK(k6.k() == 10);

    const auto tri = cyclegraph::cycle_code(cyclegraph::complete_graph(3));
    CHECK(tri.n() == 3);
    CHECK(tri.k() == 1);
    CHECK(tri.contains(0b111));

    Graph tree;
    tree.p = 4;
    tree.edges = {{0, 1}, {1, 2}, {1, 3}};
    CHECK_THROWS_AS(cyclegraph::cycle_code(tree), cyclegraph::AcyclicGraph);
}

TEST_CASE("elementary cycle counts of complete graphs") {
    CHECK(cyclegraph::count_elementary_cycles(cyclegraph::complete_graph(3)) == 1);
    CHECK(cyclegraph::count_elementary_cycles(cyclegraph::complete_graph(4)) == 7);
    CHECK(complete_graph_cycles(4) == 7);
    CHECK(cyclegraph::count_elementary_cycles(cyclegraph::complete_graph(5)) == 37);
    CHECK(complete_graph_cycles(5) == 37);
    CHECK(cyclegraph::count_elementary_cycles(cyclegraph::complete_graph(6)) == 197);
    CHECK(complete_graph_cycles(6) == 197);
    CHECK(cyclegraph::count_elementary_cycles(cyclegraph::complete_graph(7)) == complete_graph_cycles(7));

    Graph tree;
    tree.p = 5;
    tree.edges = {{0, 1}, {0, 2}, {2, 3}, {2, 4}};
    CHECK(cyclegraph::count_elementary_cycles(tree) == 0);
}

TEST_CASE("verify_cycle_correspondence on named graphs") {
    const auto k4 = cyclegraph::verify_cycle_correspondence(cyclegraph::complete_graph(4));
    CHECK(k4.cycles_via_code == 7);
    CHECK(k4.cycles_via_backtracking == 7);
    CHECK(k4.agree);
    CHECK(codes::is_intersecting(cyclegraph::cycle_code(cyclegraph::complete_graph(4))));

    const auto k6 = cyclegraph::verify_cycle_correspondence(cyclegraph::complete_graph(6));
    CHECK(k6.cycles_via_code == 197);
    CHECK(k6.agree);
    REQUIRE(k6.bound_new.has_value());
    CHECK(*k6.bound_new == 1706);
    CHECK(k6.bound_old == 960);
    CHECK(k6.cycles_via_code <= *k6.bound_new);
    CHECK(k6.cycles_via_code <= k6.bound_old);

    const auto petersen = cyclegraph::verify_cycle_correspondence(cyclegraph::petersen_graph());
    CHECK(petersen.agree);
    CHECK(petersen.dimension == 6);

    Graph tree;
    tree.p = 3;
    tree.edges = {{0, 1}, {1, 2}};
    CHECK_THROWS_AS(cyclegraph::verify_cycle_correspondence(tree), cyclegraph::AcyclicGraph);
}

TEST_CASE("correspondence and even-degree invariant on random graphs") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = random_connected_graph(rng, 14);
        std::uint64_t via_code = 0;
        bool has_cycles = true;
        try {
            const auto code = cyclegraph::cycle_code(g);
            via_code = codes::minimal_codewords(code).count();

            for (codes::Word w : codes::all_codewords(code)) {
                if (w == 0) continue;
                std::vector<int> degree(static_cast<std::size_t>(g.p), 0);
                for (int e = 0; e < g.q(); ++e) {
                    if ((w >> e) & 1) {
                        ++degree[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].first)];
                        ++degree[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].second)];
                    }
                }
                for (int d : degree) CHECK(d % 2 == 0);
            }
        } catch (const cyclegraph::AcyclicGraph&) {
            has_cycles = false;
        }
        const std::uint64_t via_backtracking = cyclegraph::count_elementary_cycles(g);
        if (has_cycles) CHECK(via_code == via_backtracking);
        else CHECK(via_backtracking == 0);
    }
}

TEST_CASE("disconnected graphs add component cycle counts") {
    // two triangles sharing no vertices
    Graph g;
    g.p = 6;
    g.edges = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
    const auto code = cyclegraph::cycle_code(g);
    CHECK(code.k() == 2);  // q - p + c = 6 - 6 + 2
    CHECK(codes::minimal_codewords(code).count() == 2);
    CHECK(cyclegraph::count_elementary_cycles(g) == 2);
}

TEST_CASE("graph file round trip") {
    const Graph g = cyclegraph::petersen_graph();
    std::stringstream buf;
    buf << "# petersen\n";
    cyclegraph::write_graph(buf, g);
    const Graph back = cyclegraph::read_graph(buf);
    CHECK(back.p == g.p);
    CHECK(back.edges == g.edges);

    std::stringstream bad("3 2\n0 1\n0 7\n");
    CHECK_THROWS_AS(cyclegraph::read_graph(bad), codes::ParseError);
}
