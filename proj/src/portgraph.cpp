#include "lgx/portgraph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace lgx {

std::string PathLabel::str() const {
    std::string s;
    for (size_t i = 0; i < ports.size(); ++i) {
        if (i) s += (i % 2 ? ':' : ' ');
        s += std::to_string(ports[i]);
    }
    return s;
}

PortGraph PortGraph::build(int node_count, std::vector<EdgeSpec> edges) {
    if (node_count < 1) throw ParseError("graph needs at least one node");
    PortGraph g;
    g.n_ = node_count;
    g.inc_.assign(static_cast<size_t>(node_count), {});

    // First pass: find each node's degree = 1 + max port index seen.
    std::vector<int> deg(static_cast<size_t>(node_count), 0);
    auto check_endpoint = [&](int v, int p, size_t line) {
        if (v < 0 || v >= node_count)
            throw ParseError("edge " + std::to_string(line + 1) + ": node " + std::to_string(v) + " out of range");
        if (p < 0)
            throw ParseError("edge " + std::to_string(line + 1) + ": negative port");
        deg[static_cast<size_t>(v)] = std::max(deg[static_cast<size_t>(v)], p + 1);
    };
    for (size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        check_endpoint(e.u, e.pu, i);
        check_endpoint(e.v, e.pv, i);
        if (e.u == e.v && e.pu == e.pv)
            throw ParseError("edge " + std::to_string(i + 1) + ": loop must use two distinct ports");
    }

    for (int v = 0; v < node_count; ++v)
        g.inc_[static_cast<size_t>(v)].assign(static_cast<size_t>(deg[static_cast<size_t>(v)]), HalfEdge{});

    auto attach = [&](int v, int p, HalfEdge other, size_t line) {
        auto& slot = g.inc_[static_cast<size_t>(v)][static_cast<size_t>(p)];
        if (slot.node != -1)
            throw ParseError("edge " + std::to_string(line + 1) + ": port " + std::to_string(p) + " of node " +
                             std::to_string(v) + " already used");
        slot = other;
    };
    for (size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        attach(e.u, e.pu, HalfEdge{e.v, e.pv}, i);
        attach(e.v, e.pv, HalfEdge{e.u, e.pu}, i);
    }

    // Ports must be consecutive 0..deg-1 with no gaps.
    for (int v = 0; v < node_count; ++v) {
        const auto& ports = g.inc_[static_cast<size_t>(v)];
        for (size_t p = 0; p < ports.size(); ++p) {
            if (ports[p].node == -1)
                throw ParseError("node " + std::to_string(v) + ": port " + std::to_string(p) + " dangling");
        }
        g.max_degree_ = std::max(g.max_degree_, static_cast<int>(ports.size()));
    }

    // Connectivity.
    std::vector<char> seen(static_cast<size_t>(node_count), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (const auto& he : g.inc_[static_cast<size_t>(v)]) {
            if (!seen[static_cast<size_t>(he.node)]) {
                seen[static_cast<size_t>(he.node)] = 1;
                ++reached;
                q.push(he.node);
            }
        }
    }
    if (reached != node_count)
        throw ParseError("graph is disconnected (" + std::to_string(reached) + " of " + std::to_string(node_count) +
                         " nodes reachable from node 0)");

    g.edges_ = std::move(edges);
    return g;
}

std::vector<int> PortGraph::distinct_neighbors(int v) const {
    std::vector<int> nb;
    for (const auto& he : inc_[static_cast<size_t>(v)])
        if (he.node != v) nb.push_back(he.node);
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    return nb;
}

} // namespace lgx
