#include "lgx/oracle.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace lgx {
namespace oracle {

LayerDecomposition bfs_layers(const PortGraph& g, int root) {
    if (root < 0 || root >= g.node_count()) throw DomainError("bfs_layers: root out of range");
    LayerDecomposition ld;
    ld.root = root;
    ld.layer_of.assign(static_cast<size_t>(g.node_count()), -1);
    std::queue<int> q;
    q.push(root);
    ld.layer_of[static_cast<size_t>(root)] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int p = 0; p < g.degree(v); ++p) {
            int w = g.neighbor_via_port(v, p).node;
            if (ld.layer_of[static_cast<size_t>(w)] < 0) {
                ld.layer_of[static_cast<size_t>(w)] = ld.layer_of[static_cast<size_t>(v)] + 1;
                q.push(w);
            }
        }
    }
    ld.diameter_from_root = *std::max_element(ld.layer_of.begin(), ld.layer_of.end());
    ld.layers.assign(static_cast<size_t>(ld.diameter_from_root) + 1, {});
    for (int v = 0; v < g.node_count(); ++v)
        ld.layers[static_cast<size_t>(ld.layer_of[static_cast<size_t>(v)])].push_back(v);
    return ld;
}

namespace {

// Layer color sequence of a layer-consistent map; throws otherwise.
std::vector<Color> layer_colors(const PortGraph& g, const ColorMap& colors, const LayerDecomposition& ld) {
    std::vector<Color> lc;
    lc.reserve(ld.layers.size());
    for (size_t i = 0; i < ld.layers.size(); ++i) {
        Color c = colors.at(ld.layers[i][0]);
        for (int v : ld.layers[i])
            if (colors.at(v) != c)
                throw DomainError("coloring not layer-consistent: layer " + std::to_string(i) + " mixes colors");
        lc.push_back(c);
    }
    return lc;
}

// All walks of the exact layer gap from u down to the previous black layer
// are monotone descending, hence white-interior. Enumerates them in
// lexicographic label order and returns ends plus the minimal path.
void enumerate_pred_paths(const PortGraph& g, const LayerDecomposition& ld, int u, int target_layer,
                          const std::function<void(const PathLabel&, int)>& emit) {
    PathLabel cur;
    std::function<void(int)> rec = [&](int v) {
        int lv = ld.layer_of[static_cast<size_t>(v)];
        if (lv == target_layer) {
            emit(cur, v);
            return;
        }
        for (int p = 0; p < g.degree(v); ++p) {
            HalfEdge he = g.neighbor_via_port(v, p);
            if (ld.layer_of[static_cast<size_t>(he.node)] != lv - 1) continue;
            cur.push_edge(p, he.port);
            rec(he.node);
            cur.pop_edge();
        }
    };
    rec(u);
}

} // namespace

int SpanningTreeOracle::gap_below(int bl_index) const {
    return black_layers[static_cast<size_t>(bl_index)] - black_layers[static_cast<size_t>(bl_index) - 1];
}

int SpanningTreeOracle::gap_above(int bl_index) const {
    if (bl_index + 1 >= static_cast<int>(black_layers.size())) return -1;
    return black_layers[static_cast<size_t>(bl_index) + 1] - black_layers[static_cast<size_t>(bl_index)];
}

std::vector<int> SpanningTreeOracle::dfs_preorder() const {
    std::vector<int> order;
    std::vector<char> seen(info_of.size(), 0);
    std::function<void(int)> rec = [&](int v) {
        if (!seen[static_cast<size_t>(v)]) {
            seen[static_cast<size_t>(v)] = 1;
            order.push_back(v);
        }
        for (int c : at(v).children) rec(c);
    };
    rec(layers.root);
    return order;
}

SpanningTreeOracle implicit_spanning_tree(const PortGraph& g, const ColorMap& colors) {
    if (colors.has_blank()) throw DomainError("implicit_spanning_tree: map contains blank nodes");
    if (colors.provenance_root < 0) throw DomainError("implicit_spanning_tree: color map has no root");
    SpanningTreeOracle st;
    st.layers = bfs_layers(g, colors.provenance_root);
    auto lc = layer_colors(g, colors, st.layers);

    if (lc[0] != Color::Black) throw DomainError("implicit_spanning_tree: root layer not black");
    for (size_t i = 0; i < lc.size(); ++i)
        if (lc[i] == Color::Black) st.black_layers.push_back(static_cast<int>(i));
    if (st.black_layers.size() < 2) throw DomainError("implicit_spanning_tree: need a black layer besides BL_0");

    std::vector<int> bl_of_layer(lc.size(), -1);
    for (size_t i = 0; i < st.black_layers.size(); ++i)
        bl_of_layer[static_cast<size_t>(st.black_layers[i])] = static_cast<int>(i);

    st.info_of.assign(static_cast<size_t>(g.node_count()), -1);
    st.black_layer_index.assign(static_cast<size_t>(g.node_count()), -1);
    for (int v = 0; v < g.node_count(); ++v) {
        if (colors.at(v) != Color::Black) continue;
        BlackNodeInfo info;
        info.node = v;
        info.black_layer = bl_of_layer[static_cast<size_t>(st.layers.layer_of[static_cast<size_t>(v)])];
        st.black_layer_index[static_cast<size_t>(v)] = info.black_layer;
        st.info_of[static_cast<size_t>(v)] = static_cast<int>(st.black.size());
        st.black.push_back(std::move(info));
    }

    // pred, parent and parent path by exhaustive monotone-path enumeration.
    for (auto& info : st.black) {
        if (info.black_layer == 0) continue;
        int target = st.black_layers[static_cast<size_t>(info.black_layer) - 1];
        bool first = true;
        enumerate_pred_paths(g, st.layers, info.node, target, [&](const PathLabel& path, int end) {
            info.pred.push_back(end);
            if (first || path < info.par_path) {
                info.par_path = path;
                info.parent = end;
                first = false;
            }
        });
        std::sort(info.pred.begin(), info.pred.end());
        info.pred.erase(std::unique(info.pred.begin(), info.pred.end()), info.pred.end());
        if (info.parent < 0)
            throw DomainError("implicit_spanning_tree: black node " + std::to_string(info.node) +
                              " has no path to the previous black layer");
    }

    // succ mirrors pred; children ordered by child-path label, i.e. by the
    // child's parent path reversed.
    for (auto& info : st.black) {
        if (info.black_layer == 0) continue;
        for (int p : st.black[static_cast<size_t>(st.info_of[static_cast<size_t>(info.node)])].pred) {
            auto& up = st.black[static_cast<size_t>(st.info_of[static_cast<size_t>(p)])];
            up.succ.push_back(info.node);
        }
    }
    for (auto& info : st.black) {
        std::sort(info.succ.begin(), info.succ.end());
        info.succ.erase(std::unique(info.succ.begin(), info.succ.end()), info.succ.end());
    }
    for (auto& info : st.black) {
        if (info.black_layer == 0) continue;
        auto& up = st.black[static_cast<size_t>(st.info_of[static_cast<size_t>(info.parent)])];
        up.children.push_back(info.node);
    }
    for (auto& info : st.black) {
        std::sort(info.children.begin(), info.children.end(), [&](int a, int b) {
            const auto& pa = st.at(a).par_path;
            const auto& pb = st.at(b).par_path;
            return pa.reversed() < pb.reversed();
        });
    }
    return st;
}

int white_radius(const PortGraph& g, const ColorMap& colors, int v) {
    if (colors.at(v) != Color::White) throw DomainError("white_radius: node " + std::to_string(v) + " is not white");
    std::vector<int> dist(static_cast<size_t>(g.node_count()), -1);
    std::queue<int> q;
    q.push(v);
    dist[static_cast<size_t>(v)] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int p = 0; p < g.degree(u); ++p) {
            int w = g.neighbor_via_port(u, p).node;
            if (dist[static_cast<size_t>(w)] >= 0) continue;
            dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
            if (colors.at(w) == Color::Black) return dist[static_cast<size_t>(w)] - 1;
            q.push(w);
        }
    }
    throw DomainError("white_radius: no black node in graph");
}

std::vector<std::string> verify_labeling_properties(const PortGraph& g, const ColorMap& colors) {
    std::vector<std::string> report;
    if (colors.has_blank()) {
        report.push_back("map contains blank nodes");
        return report;
    }
    if (colors.provenance_root < 0) {
        report.push_back("color map has no root");
        return report;
    }
    auto ld = bfs_layers(g, colors.provenance_root);
    std::vector<Color> lc;
    try {
        lc = layer_colors(g, colors, ld);
    } catch (const DomainError& e) {
        report.push_back(e.what());
        return report;
    }
    std::vector<int> black_layers;
    for (size_t i = 0; i < lc.size(); ++i)
        if (lc[i] == Color::Black) black_layers.push_back(static_cast<int>(i));

    // Property 1: per-node BFS, check every lower black layer is seen at
    // exactly the layer-distance.
    for (int u = 0; u < g.node_count(); ++u) {
        int du = ld.layer_of[static_cast<size_t>(u)];
        if (du == 0) continue;
        auto from_u = bfs_layers(g, u);
        for (int bl : black_layers) {
            if (bl >= du) break;
            bool ok = false;
            for (int x : ld.layers[static_cast<size_t>(bl)])
                if (from_u.layer_of[static_cast<size_t>(x)] == du - bl) ok = true;
            if (!ok)
                report.push_back("property 1: node " + std::to_string(u) + " misses black layer L_" +
                                 std::to_string(bl) + " at distance " + std::to_string(du - bl));
        }
    }

    // Property 2: whites strictly between adjacent black layers.
    for (int u = 0; u < g.node_count(); ++u) {
        if (colors.at(u) != Color::White) continue;
        int du = ld.layer_of[static_cast<size_t>(u)];
        auto it = std::upper_bound(black_layers.begin(), black_layers.end(), du);
        if (it == black_layers.end() || it == black_layers.begin()) continue;
        int above = *it;
        int below = *(it - 1);
        if (below >= du) continue;
        int gap = above - below;
        int rw = white_radius(g, colors, u);
        if (rw > gap - 2)
            report.push_back("property 2: white node " + std::to_string(u) + " has white radius " +
                             std::to_string(rw) + " > gap-2 = " + std::to_string(gap - 2));
    }

    // Property 3: witness white of radius >= floor(gap/2)-1 on a monotone
    // path toward the previous black layer.
    for (size_t bi = 1; bi < black_layers.size(); ++bi) {
        int gap = black_layers[bi] - black_layers[bi - 1];
        int threshold = gap / 2 - 1;
        if (threshold < 0) continue;
        for (int u : ld.layers[static_cast<size_t>(black_layers[bi])]) {
            bool ok = false;
            enumerate_pred_paths(g, ld, u, black_layers[bi - 1], [&](const PathLabel& path, int) {
                if (ok) return;
                int node = u;
                for (int e = 0; e < path.edge_count(); ++e) {
                    node = g.neighbor_via_port(node, path.out_at(e)).node;
                    if (colors.at(node) == Color::White && white_radius(g, colors, node) >= threshold) {
                        ok = true;
                        return;
                    }
                }
            });
            if (!ok)
                report.push_back("property 3: black node " + std::to_string(u) + " reaches no white of radius >= " +
                                 std::to_string(threshold));
        }
    }
    return report;
}

std::vector<int> wdisc(const PortGraph& g, const ColorMap& colors, int u) {
    if (colors.at(u) != Color::Black) throw DomainError("wdisc: node must be black");
    if (colors.provenance_root < 0) throw DomainError("wdisc: color map has no root");
    auto ld = bfs_layers(g, colors.provenance_root);
    auto lc = layer_colors(g, colors, ld);
    std::vector<int> black_layers;
    for (size_t i = 0; i < lc.size(); ++i)
        if (lc[i] == Color::Black) black_layers.push_back(static_cast<int>(i));
    int lu = ld.layer_of[static_cast<size_t>(u)];
    auto it = std::upper_bound(black_layers.begin(), black_layers.end(), lu);
    if (it == black_layers.end()) return {};
    int rd = *it - lu;

    // White-reach BFS: expand only through white nodes, record everything
    // stepped on within distance rd.
    std::vector<int> dist(static_cast<size_t>(g.node_count()), -1);
    std::queue<int> q;
    dist[static_cast<size_t>(u)] = 0;
    q.push(u);
    std::vector<int> out;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (dist[static_cast<size_t>(v)] == rd) continue;
        if (v != u && colors.at(v) != Color::White) continue;
        for (int p = 0; p < g.degree(v); ++p) {
            int w = g.neighbor_via_port(v, p).node;
            if (dist[static_cast<size_t>(w)] >= 0) continue;
            dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
            q.push(w);
        }
    }
    for (int v = 0; v < g.node_count(); ++v)
        if (v != u && dist[static_cast<size_t>(v)] >= 0) out.push_back(v);
    return out;
}

} // namespace oracle
} // namespace lgx
