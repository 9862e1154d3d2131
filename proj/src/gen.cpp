#include "lgx/gen.hpp"

#include <algorithm>
#include <queue>

#include "lgx/oracle.hpp"

namespace lgx {

namespace {

// splitmix64: tiny, platform-stable, good enough for fixtures.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed + 0x9e3779b97f4a7c15ULL) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // [0, bound); bound > 0. Modulo bias is irrelevant at fixture scale.
    int below(int bound) { return static_cast<int>(next() % static_cast<uint64_t>(bound)); }
};

struct Builder {
    int n;
    std::vector<int> deg;
    std::vector<EdgeSpec> edges;

    explicit Builder(int nodes) : n(nodes), deg(static_cast<size_t>(nodes), 0) {}
    int add(int u, int v) {
        EdgeSpec e{u, deg[static_cast<size_t>(u)], v, u == v ? deg[static_cast<size_t>(u)] + 1 : deg[static_cast<size_t>(v)]};
        deg[static_cast<size_t>(u)] += (u == v) ? 2 : 1;
        if (u != v) deg[static_cast<size_t>(v)] += 1;
        edges.push_back(e);
        return static_cast<int>(edges.size()) - 1;
    }
    PortGraph build() { return PortGraph::build(n, std::move(edges)); }
};

} // namespace

PortGraph gen_path(int n) {
    if (n < 1) throw SpecError("path needs n >= 1");
    Builder b(n);
    for (int i = 0; i + 1 < n; ++i) b.add(i, i + 1);
    return b.build();
}

PortGraph gen_cycle(int n) {
    if (n < 3) throw SpecError("cycle needs n >= 3");
    Builder b(n);
    // ring edges (i, i+1) then the closing edge: interior node i has
    // port 0 -> i-1, port 1 -> i+1; the closing edge lands on the last
    // port of node 0 and node n-1.
    for (int i = 0; i + 1 < n; ++i) b.add(i, i + 1);
    b.add(n - 1, 0);
    return b.build();
}

PortGraph gen_tree(int n, int delta, uint64_t seed) {
    if (n < 1) throw SpecError("tree needs n >= 1");
    if (n > 1 && delta < 2) throw SpecError("tree with n > 1 needs delta >= 2");
    Rng rng(seed);
    Builder b(n);
    for (int i = 1; i < n; ++i) {
        // candidates: earlier nodes with spare degree (keep one port for a child)
        std::vector<int> cand;
        for (int v = 0; v < i; ++v)
            if (b.deg[static_cast<size_t>(v)] < delta) cand.push_back(v);
        if (cand.empty()) throw SpecError("tree generation stuck: delta too small");
        b.add(cand[static_cast<size_t>(rng.below(static_cast<int>(cand.size())))], i);
    }
    return b.build();
}

PortGraph gen_grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw SpecError("grid needs rows, cols >= 1");
    Builder b(rows * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            int id = r * cols + c;
            if (c + 1 < cols) b.add(id, id + 1);
            if (r + 1 < rows) b.add(id, id + cols);
        }
    return b.build();
}

namespace {

PortGraph gen_random_once(const GenParams& p, uint64_t seed) {
    Rng rng(seed);
    Builder b(p.n);
    // random spanning tree
    for (int i = 1; i < p.n; ++i) {
        std::vector<int> cand;
        for (int v = 0; v < i; ++v)
            if (b.deg[static_cast<size_t>(v)] < p.delta) cand.push_back(v);
        if (cand.empty()) throw SpecError("random_multigraph: delta too small for n");
        b.add(cand[static_cast<size_t>(rng.below(static_cast<int>(cand.size())))], i);
    }
    // extra edges
    int extras = static_cast<int>(p.extra_edges * p.n);
    for (int k = 0; k < extras; ++k) {
        int u = rng.below(p.n);
        if (p.loops && b.deg[static_cast<size_t>(u)] + 2 <= p.delta && rng.below(8) == 0) {
            b.add(u, u);
            continue;
        }
        int v = rng.below(p.n);
        if (u == v) continue;
        if (b.deg[static_cast<size_t>(u)] >= p.delta || b.deg[static_cast<size_t>(v)] >= p.delta) continue;
        if (!p.multi) {
            bool dup = false;
            for (const auto& e : b.edges)
                if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) dup = true;
            if (dup) continue;
        }
        b.add(u, v);
    }
    return b.build();
}

} // namespace

PortGraph gen_random_multigraph(const GenParams& p, uint64_t seed) {
    if (p.n < 1) throw SpecError("random_multigraph needs n >= 1");
    if (p.n > 1 && p.delta < 2) throw SpecError("random_multigraph with n > 1 needs delta >= 2");
    for (int attempt = 0;; ++attempt) {
        if (attempt > 4096) throw SpecError("random_multigraph: min_diameter unreachable for these params");
        PortGraph g = gen_random_once(p, seed + 1000003ULL * static_cast<uint64_t>(attempt));
        if (p.min_diameter <= 0) return g;
        if (oracle::bfs_layers(g, 0).diameter_from_root >= p.min_diameter) return g;
    }
}

PortGraph gen_graph(const std::string& kind, const GenParams& p, uint64_t seed) {
    if (kind == "path") return gen_path(p.n);
    if (kind == "cycle") return gen_cycle(p.n);
    if (kind == "tree") return gen_tree(p.n, p.delta, seed);
    if (kind == "grid") return gen_grid(p.rows > 0 ? p.rows : p.n, p.cols > 0 ? p.cols : p.n);
    if (kind == "random_multigraph") return gen_random_multigraph(p, seed);
    throw SpecError("unknown graph kind '" + kind + "'");
}

PortGraph gen_layered(const std::vector<int>& layer_sizes, int delta, uint64_t seed, int cross_extra,
                      int intra_extra) {
    if (layer_sizes.empty() || layer_sizes[0] != 1) throw SpecError("gen_layered: layer 0 must have exactly 1 node");
    Rng rng(seed);
    int n = 0;
    std::vector<std::vector<int>> ids;
    for (int s : layer_sizes) {
        if (s < 1) throw SpecError("gen_layered: empty layer");
        std::vector<int> layer;
        for (int i = 0; i < s; ++i) layer.push_back(n++);
        ids.push_back(std::move(layer));
    }
    Builder b(n);
    // every node gets one edge down; spread over the previous layer
    for (size_t l = 1; l < ids.size(); ++l) {
        for (size_t i = 0; i < ids[l].size(); ++i) {
            std::vector<int> cand;
            for (int v : ids[l - 1])
                if (b.deg[static_cast<size_t>(v)] < delta) cand.push_back(v);
            if (cand.empty()) throw SpecError("gen_layered: delta too small for layer sizes");
            b.add(cand[static_cast<size_t>(rng.below(static_cast<int>(cand.size())))], ids[l][i]);
        }
        for (int k = 0; k < cross_extra; ++k) {
            int u = ids[l - 1][static_cast<size_t>(rng.below(static_cast<int>(ids[l - 1].size())))];
            int v = ids[l][static_cast<size_t>(rng.below(static_cast<int>(ids[l].size())))];
            if (b.deg[static_cast<size_t>(u)] < delta && b.deg[static_cast<size_t>(v)] < delta) b.add(u, v);
        }
        for (int k = 0; k < intra_extra && ids[l].size() > 1; ++k) {
            int u = ids[l][static_cast<size_t>(rng.below(static_cast<int>(ids[l].size())))];
            int v = ids[l][static_cast<size_t>(rng.below(static_cast<int>(ids[l].size())))];
            if (u != v && b.deg[static_cast<size_t>(u)] < delta && b.deg[static_cast<size_t>(v)] < delta) b.add(u, v);
        }
    }
    return b.build();
}

} // namespace lgx
