#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "lgx/portgraph.hpp"

namespace lgx {

enum class Color : uint8_t { Black, White, Blank };

char color_char(Color c);
Color color_from_char(char c);

// Per-node colors plus where they came from. provenance_root is the root
// of the generating spec (-1 when unknown, e.g. hand-written files).
struct ColorMap {
    std::vector<Color> colors;
    int provenance_root = -1;
    std::string provenance;

    int size() const { return static_cast<int>(colors.size()); }
    Color at(int v) const { return colors[static_cast<size_t>(v)]; }
    long long count(Color c) const;
    bool has_blank() const { return count(Color::Blank) > 0; }
};

// Exact nonnegative rational, kept reduced. Ratio guarantees in this
// library are exact inequalities, never floating point.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);
    static Rational parse(const std::string& text); // "m/t" or "m"

    friend bool operator==(const Rational&, const Rational&) = default;
    // cross-multiplication; values are desk-scale
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
    bool operator<=(const Rational& o) const { return num * o.den <= o.num * den; }
    bool operator>=(const Rational& o) const { return o <= *this; }
    bool operator>(const Rational& o) const { return o < *this; }
    std::string str() const;
};

enum class LayerClass : uint8_t { A, B, C, D, WhiteLayer };

const char* layer_class_name(LayerClass c);

// Periodic layer-oriented labeling <r, p, BL>: layer i is black iff
// (i mod p) is in black_residues.
struct PLSpec {
    int root = 0;
    int period = 1;
    std::vector<int> black_residues; // sorted, unique, in [0, period)

    void normalize();
    void validate() const;
    bool residue_black(int residue) const;
    std::string str() const;
};

// The AL scheme <r, d1, d2>: black residues {0, 1, d2+1, d1+d2+1} with
// period d1+d2+2. Requires d1 >= 2, floor(d2/2) >= d1, and (at apply
// time) D >= d1+d2+1 so the graph has at least four black layers.
struct ALSpec {
    int root = 0;
    int d1 = 2;
    int d2 = 4;

    void validate() const;
    PLSpec to_pl() const;
    std::string str() const;
};

// Elementary (one A/B/C/D group per period) labeling <r, P_A, d_AB, d_DA>;
// period p = d_AB + d_DA + 2. AL is the special case P_A = d_DA + 1.
struct ElementarySpec {
    int root = 0;
    int p_a = 0;
    int d_ab = 2;
    int d_da = 4;

    int period() const { return d_ab + d_da + 2; }
    int res_a() const { return p_a % period(); }
    int res_b() const { return (p_a + d_ab) % period(); }
    int res_c() const { return (p_a + d_ab + 1) % period(); }
    int res_d() const { return (p_a + d_ab + 2) % period(); }
    void validate() const;
    PLSpec to_pl() const;
    std::string str() const;
};

// Full-knowledge application of a spec (designer side).
ColorMap apply_pl(const PortGraph& g, const PLSpec& spec);
ColorMap apply_al(const PortGraph& g, const ALSpec& spec); // rejects D < d1+d2+1
ColorMap apply_elementary(const PortGraph& g, const ElementarySpec& spec);

// Residue class of node v under an elementary/AL spec.
LayerClass classify_node(const PortGraph& g, const ElementarySpec& spec, int v);
LayerClass classify_node(const PortGraph& g, const ALSpec& spec, int v);

struct LabelingStats {
    long long n = 0;
    long long b = 0;
    Rational n_ratio;       // n/b
    int layers = 0;         // D+1
    int black_layers = 0;
    Rational l_ratio;       // layers / black layers
};

// Requires a blank-free map and at least one black node.
LabelingStats labeling_stats(const PortGraph& g, const ColorMap& colors);

} // namespace lgx
