#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "lgx/errors.hpp"

namespace lgx {

// One endpoint of an edge: (node, local port at that node).
struct HalfEdge {
    int node = -1;
    int port = -1;

    friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
    friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

// An undirected edge as written in the text format: (u,pu)-(v,pv).
// u == v with pu != pv encodes a self-loop (degree contribution 2).
struct EdgeSpec {
    int u = -1, pu = -1, v = -1, pv = -1;

    friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

// The label of a walk: alternating exit-port/entry-port per edge,
// compared lexicographically. Always has even length.
struct PathLabel {
    std::vector<int> ports;

    int edge_count() const { return static_cast<int>(ports.size()) / 2; }
    bool empty() const { return ports.empty(); }
    void clear() { ports.clear(); }

    void push_edge(int out, int in) {
        ports.push_back(out);
        ports.push_back(in);
    }
    void pop_edge() {
        ports.pop_back();
        ports.pop_back();
    }
    int out_at(int i) const { return ports[2 * static_cast<size_t>(i)]; }
    int in_at(int i) const { return ports[2 * static_cast<size_t>(i) + 1]; }
    // Entry port at the walk's final node.
    int last_entry() const { return ports.back(); }

    // Reversal swaps exit/entry roles, which is exactly string reversal.
    PathLabel reversed() const {
        PathLabel r;
        r.ports.assign(ports.rbegin(), ports.rend());
        return r;
    }

    friend bool operator==(const PathLabel&, const PathLabel&) = default;
    friend auto operator<=>(const PathLabel& a, const PathLabel& b) {
        return a.ports <=> b.ports;
    }

    std::string str() const;
};

// Immutable anonymous port-numbered multigraph. Loops and parallel edges
// are allowed; every port of every node is matched to exactly one edge
// endpoint, so port traversal is involutive. Connectivity is enforced at
// construction. Safe to share across concurrent sessions.
class PortGraph {
public:
    // Validates port consistency and connectivity; throws ParseError with
    // the offending 1-based edge index in the message.
    static PortGraph build(int node_count, std::vector<EdgeSpec> edges);

    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int degree(int v) const { return static_cast<int>(inc_[static_cast<size_t>(v)].size()); }
    int max_degree() const { return max_degree_; }

    // Follows port p out of v; returns the node reached and the entry port
    // there. Involution: applying the result's (node,port) returns (v,p).
    HalfEdge neighbor_via_port(int v, int p) const {
        if (v < 0 || v >= n_) throw DomainError("neighbor_via_port: node " + std::to_string(v) + " out of range");
        const auto& ports = inc_[static_cast<size_t>(v)];
        if (p < 0 || p >= static_cast<int>(ports.size()))
            throw DomainError("neighbor_via_port: invalid port " + std::to_string(p) + " at node " + std::to_string(v) +
                              " (degree " + std::to_string(ports.size()) + ")");
        return ports[static_cast<size_t>(p)];
    }

    const std::vector<EdgeSpec>& edges() const { return edges_; }

    // Distinct neighbors of v, excluding v itself. Used for the minimal
    // neighbor-count root choice of ratio labelings.
    std::vector<int> distinct_neighbors(int v) const;

private:
    PortGraph() = default;
    int n_ = 0;
    int max_degree_ = 0;
    std::vector<std::vector<HalfEdge>> inc_;
    std::vector<EdgeSpec> edges_;
};

} // namespace lgx
