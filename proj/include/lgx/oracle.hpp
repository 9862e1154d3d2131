#pragma once

#include <string>
#include <vector>

#include "lgx/labeling.hpp"
#include "lgx/portgraph.hpp"

namespace lgx {
namespace oracle {

// Full-knowledge reference computations used to construct labelings and to
// verify robot behavior. Never visible to the robot.

struct LayerDecomposition {
    int root = 0;
    std::vector<int> layer_of;              // graph distance from root
    std::vector<std::vector<int>> layers;   // L_0 .. L_D
    int diameter_from_root = 0;             // eccentricity of root
};

LayerDecomposition bfs_layers(const PortGraph& g, int root);

struct BlackNodeInfo {
    int node = -1;
    int black_layer = -1;        // index i of BL_i
    std::vector<int> pred;       // BL_{i-1} nodes at exactly the layer gap
    std::vector<int> succ;
    int parent = -1;
    PathLabel par_path;          // lexicographically smallest pred path
    std::vector<int> children;   // ordered by child-path label
};

struct SpanningTreeOracle {
    LayerDecomposition layers;
    std::vector<int> black_layer_index;  // per node, -1 for white
    std::vector<int> black_layers;       // layer index of BL_0 .. BL_{D_B}
    std::vector<BlackNodeInfo> black;    // dense, indexed via info_of
    std::vector<int> info_of;            // node -> index into black, -1 for white

    const BlackNodeInfo& at(int v) const { return black[static_cast<size_t>(info_of[static_cast<size_t>(v)])]; }
    bool is_black(int v) const { return info_of[static_cast<size_t>(v)] >= 0; }
    int gap_below(int bl_index) const;   // d(BL_i, BL_{i-1})
    int gap_above(int bl_index) const;   // d(BL_i, BL_{i+1}), -1 for last

    // Preorder of the implicit spanning tree, children by child-path label
    // (first occurrence per node; root edge repeats collapse).
    std::vector<int> dfs_preorder() const;
};

// Requires a layer-consistent, blank-free coloring with black L_0 and L_1.
// Parent-path minimality is established by exhaustive enumeration of the
// monotone shortest paths between adjacent black layers.
SpanningTreeOracle implicit_spanning_tree(const PortGraph& g, const ColorMap& colors);

// (distance from white node v to the nearest black node) - 1.
int white_radius(const PortGraph& g, const ColorMap& colors, int v);

// Exhaustive check of the three structural properties of layer-oriented
// labelings. Returns one line per violation; empty on valid labelings.
//   1. every node u != r sees every lower black layer L_i at distance
//      d(r,u) - i;
//   2. whites strictly between BL_i and BL_{i+1} have white radius at most
//      the gap minus 2;
//   3. every black u in BL_i (i != 0) reaches, by a white path toward
//      BL_{i-1}, a white node of white radius at least floor(gap/2) - 1.
std::vector<std::string> verify_labeling_properties(const PortGraph& g, const ColorMap& colors);

// Nodes (excluding u) on white paths from black node u of length at most
// d(BL_k, BL_{k+1}); empty for the last black layer. Sorted.
std::vector<int> wdisc(const PortGraph& g, const ColorMap& colors, int u);

} // namespace oracle
} // namespace lgx
