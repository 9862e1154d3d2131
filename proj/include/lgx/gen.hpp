#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lgx/portgraph.hpp"

namespace lgx {

// Deterministic fixture generators. All randomness comes from a seeded
// xorshift-style engine with documented sampling, so a given (kind, params,
// seed) is reproducible across platforms.

struct GenParams {
    int n = 10;
    int delta = 4;        // degree bound for tree/random kinds
    int rows = 0, cols = 0;
    bool loops = true;    // random_multigraph: allow self-loops
    bool multi = true;    // random_multigraph: allow parallel edges
    double extra_edges = 0.4; // random_multigraph: extra edges per node
    int min_diameter = 0; // random_multigraph: re-seed until ecc(0) >= this
};

// kind: path | cycle | tree | grid | random_multigraph
PortGraph gen_graph(const std::string& kind, const GenParams& params, uint64_t seed);

// Canonical ports: node 0 port 0 -> 1; interior i: port 0 -> i-1, port 1 -> i+1.
PortGraph gen_path(int n);
// Ring edges (i, i+1) in order, then the closing edge; interior node i:
// port 0 -> i-1, port 1 -> i+1. n >= 3.
PortGraph gen_cycle(int n);
// Random tree with degrees <= delta; node i >= 1 attaches to an earlier node.
PortGraph gen_tree(int n, int delta, uint64_t seed);
// Ports ordered [left, up, right, down] by row-major edge insertion.
PortGraph gen_grid(int rows, int cols);
// Connected random multigraph: random spanning tree, then extra edges
// (loops/parallels per flags), all degrees <= delta. If min_diameter > 0,
// derived sub-seeds are tried until ecc(node 0) reaches it.
PortGraph gen_random_multigraph(const GenParams& params, uint64_t seed);

// Layered test fixture: layer_sizes[i] nodes at exact distance i from node 0
// (single root layer). Edges only within or between adjacent layers; every
// non-root node has at least one edge to the previous layer. intra_extra
// adds random same-layer edges where degree allows.
PortGraph gen_layered(const std::vector<int>& layer_sizes, int delta, uint64_t seed,
                      int cross_extra = 1, int intra_extra = 0);

} // namespace lgx
