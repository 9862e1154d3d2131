#include "lgx/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lgx {

namespace {

// Strips comments, returns (1-based line number, content) for nonblank lines.
std::vector<std::pair<int, std::string>> logical_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.emplace_back(no, line);
    }
    return out;
}

} // namespace

PortGraph parse_graph(const std::string& text) {
    auto lines = logical_lines(text);
    if (lines.empty()) throw ParseError("empty graph file");
    std::istringstream head(lines[0].second);
    int n = 0, m = 0;
    if (!(head >> n >> m)) throw ParseError("line " + std::to_string(lines[0].first) + ": expected 'n m'");
    if (static_cast<int>(lines.size()) - 1 != m)
        throw ParseError("expected " + std::to_string(m) + " edge lines, found " +
                         std::to_string(lines.size() - 1));
    std::vector<EdgeSpec> edges;
    edges.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        std::istringstream es(lines[static_cast<size_t>(i) + 1].second);
        EdgeSpec e;
        if (!(es >> e.u >> e.pu >> e.v >> e.pv))
            throw ParseError("line " + std::to_string(lines[static_cast<size_t>(i) + 1].first) +
                             ": expected 'u pu v pv'");
        edges.push_back(e);
    }
    try {
        return PortGraph::build(n, std::move(edges));
    } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()) + " (graph file)");
    }
}

std::string serialize_graph(const PortGraph& g) {
    std::vector<EdgeSpec> edges = g.edges();
    for (auto& e : edges) {
        if (std::tie(e.v, e.pv) < std::tie(e.u, e.pu)) {
            std::swap(e.u, e.v);
            std::swap(e.pu, e.pv);
        }
    }
    std::sort(edges.begin(), edges.end(), [](const EdgeSpec& a, const EdgeSpec& b) {
        return std::tie(a.u, a.pu, a.v, a.pv) < std::tie(b.u, b.pu, b.v, b.pv);
    });
    std::string out = std::to_string(g.node_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& e : edges)
        out += std::to_string(e.u) + " " + std::to_string(e.pu) + " " + std::to_string(e.v) + " " +
               std::to_string(e.pv) + "\n";
    return out;
}

ColorMap parse_colors(const std::string& text, int node_count) {
    ColorMap cm;
    cm.colors.assign(static_cast<size_t>(node_count), Color::Blank);
    std::vector<char> seen(static_cast<size_t>(node_count), 0);
    for (const auto& [no, line] : logical_lines(text)) {
        std::istringstream ls(line);
        int v = 0;
        std::string c;
        if (!(ls >> v >> c) || c.size() != 1)
            throw ParseError("line " + std::to_string(no) + ": expected 'v {B|W|N}'");
        if (v < 0 || v >= node_count)
            throw ParseError("line " + std::to_string(no) + ": node " + std::to_string(v) + " out of range");
        if (seen[static_cast<size_t>(v)])
            throw ParseError("line " + std::to_string(no) + ": node " + std::to_string(v) + " colored twice");
        seen[static_cast<size_t>(v)] = 1;
        cm.colors[static_cast<size_t>(v)] = color_from_char(c[0]);
    }
    for (int v = 0; v < node_count; ++v)
        if (!seen[static_cast<size_t>(v)])
            throw ParseError("node " + std::to_string(v) + " missing from color file");
    cm.provenance = "file";
    return cm;
}

std::string serialize_colors(const ColorMap& colors) {
    std::string out;
    for (int v = 0; v < colors.size(); ++v) {
        out += std::to_string(v);
        out += ' ';
        out += color_char(colors.at(v));
        out += '\n';
    }
    return out;
}

SpecFile parse_spec(const std::string& text) {
    auto lines = logical_lines(text);
    if (lines.empty()) throw ParseError("empty spec file");
    std::istringstream ls(lines[0].second);
    std::string kind;
    ls >> kind;
    SpecFile sf;
    if (kind == "AL") {
        sf.kind = SpecFile::Kind::AL;
        if (!(ls >> sf.al.root >> sf.al.d1 >> sf.al.d2)) throw ParseError("AL spec: expected 'AL r d1 d2'");
        sf.al.validate();
    } else if (kind == "PL") {
        sf.kind = SpecFile::Kind::PL;
        if (!(ls >> sf.pl.root >> sf.pl.period)) throw ParseError("PL spec: expected 'PL r p b0 b1 ...'");
        int b;
        while (ls >> b) sf.pl.black_residues.push_back(b);
        sf.pl.normalize();
        sf.pl.validate();
    } else if (kind == "EL") {
        sf.kind = SpecFile::Kind::EL;
        if (!(ls >> sf.el.root >> sf.el.p_a >> sf.el.d_ab >> sf.el.d_da))
            throw ParseError("EL spec: expected 'EL r PA dAB dDA'");
        sf.el.validate();
    } else {
        throw ParseError("unknown spec kind '" + kind + "'");
    }
    return sf;
}

std::string serialize_spec(const SpecFile& spec) {
    switch (spec.kind) {
        case SpecFile::Kind::AL: return spec.al.str() + "\n";
        case SpecFile::Kind::PL: return spec.pl.str() + "\n";
        case SpecFile::Kind::EL: return spec.el.str() + "\n";
    }
    throw InternalError("bad spec kind");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

} // namespace lgx
