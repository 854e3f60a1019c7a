#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mincw/bounds.hpp"
#include "mincw/codes.hpp"

// Cycle codes of graphs: the [q, q-p+c] binary code whose codewords are
// edge-indicator vectors of edge-disjoint unions of cycles. Its minimal
// codewords are exactly the elementary cycles.

namespace mincw::cyclegraph {

struct SelfLoop : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct EdgeOverflow : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct AcyclicGraph : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Graph {
    int p = 0;                              // vertex count
    std::vector<std::pair<int, int>> edges;  // multi-edges permitted

    int q() const { return static_cast<int>(edges.size()); }
    int components() const;
    bool has_self_loop() const;
};

/// p x q incidence matrix over GF(2); column e has 1s at the endpoints of edge e.
gf2::BitMatrix incidence_matrix(const Graph& g);

/// Cycle code: kernel of the incidence matrix, dimension q - p + c.
codes::LinearCode cycle_code(const Graph& g);

/// Number of distinct simple cycles (as edge sets), by backtracking.
/// Each cycle is generated once, anchored at its minimum edge index.
std::uint64_t count_elementary_cycles(const Graph& g);

struct CycleReport {
    int p = 0;
    int q = 0;
    int dimension = 0;
    std::uint64_t cycles_via_code = 0;
    std::uint64_t cycles_via_backtracking = 0;
    std::optional<std::uint64_t> bound_new;
    std::uint64_t bound_old = 0;
    bool agree = false;
};

CycleReport verify_cycle_correspondence(const Graph& g);

// Graph file format: line 1 "p q", then q lines "u v" (0-based); '#' comments.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

Graph complete_graph(int p);
Graph petersen_graph();

}  // namespace mincw::cyclegraph
