#pragma once

#include <string>
#include <vector>

#include "lgx/labeling.hpp"
#include "lgx/portgraph.hpp"

namespace lgx {

// Graph text format: first line "n m", then m lines "u pu v pv".
// Lines starting with '#' and blank lines are skipped. Parse errors name
// the offending line.
PortGraph parse_graph(const std::string& text);
// Canonical form: endpoints normalized, edges sorted by (u, pu, v, pv);
// parse(serialize(g)) is byte-identical under re-serialization.
std::string serialize_graph(const PortGraph& g);

// Color file: one line per node, "v {B|W|N}" (N = blank), sorted by v.
ColorMap parse_colors(const std::string& text, int node_count);
std::string serialize_colors(const ColorMap& colors);

// Spec files, one line: "AL r d1 d2" | "PL r p b0 b1 ..." | "EL r PA dAB dDA".
// Transformed ratio specs travel as the JSON sidecar (see ratio.hpp).
struct SpecFile {
    enum class Kind { AL, PL, EL } kind = Kind::AL;
    ALSpec al;
    PLSpec pl;
    ElementarySpec el;
};
SpecFile parse_spec(const std::string& text);
std::string serialize_spec(const SpecFile& spec);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace lgx
