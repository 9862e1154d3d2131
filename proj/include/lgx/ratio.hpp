#pragma once

#include <string>
#include <vector>

#include "lgx/labeling.hpp"
#include "lgx/portgraph.hpp"

namespace lgx {

// N-ratio adjustable labeling construction: fit a period to the requested
// rational, take the union of shifted elementary labelings, pick a circular
// shift by the pigeonhole certificate, and transform to root-unit form.

// Smallest feasible (m', t'), coprime, with m'/t' >= rho and 4m' <= D+1.
// Returns rho itself (reduced) when it already fits. Throws SpecError when
// rho exceeds the (D+1)/4 envelope.
std::pair<long long, long long> fit_period(const Rational& rho, int diameter);

// The union of t shifted elementary labelings with period 4m. Interval i
// has length ceil(4m/t) for i < x (x = 4m mod t) and floor(4m/t) otherwise;
// group offsets follow the interval boundaries. |BL| = 4t exactly.
struct UnionLabeling {
    PLSpec spec;                 // <r, 4m, BL>
    long long m = 0, t = 0, x = 0;
    int d_ab = 0;
    int d_da = 0;                // floor(4m/t) - 2 - d_ab (short-interval gap)
    int d_da_long = 0;           // d_da + 1 where x > 0
    std::vector<int> offsets;    // P_A residue of group i
    std::vector<int> lengths;    // interval lengths
};
UnionLabeling build_union_labeling(const PortGraph& g, int root, long long m, long long t);

// BL^l = { i : (i - l) mod p in BL }.
PLSpec circular_shift(const PLSpec& spec, int l);

struct ShiftChoice {
    int k_star = 0;
    PLSpec shifted;                      // P*
    long long bn_star = 0;               // BN(P*)
    long long certificate_sum = 0;       // sum_k BN(P^k), must equal 4tn
    std::vector<long long> bn;           // BN per shift
};
// Evaluates all 4m shifts against the oracle layers, verifies the
// pigeonhole certificate sum = 4t*n exactly, and picks the minimum.
ShiftChoice select_shift(const PortGraph& g, const UnionLabeling& u);

// Root-unit (R^C) form of a shifted union labeling. Layers 0 and 1 are
// black; the root unit [0, first_a_layer) is otherwise white; layers from
// first_a_layer on keep the P* colors. When no A-layer qualifies, all
// layers after L_1 are white and there is no periodic tail.
struct TransformedSpec {
    int root = 0;
    long long m = 0, t = 0, x = 0;
    int d_ab = 0;
    int d_da = 0;
    int d_da_long = 0;
    int period = 0;
    int k_star = 0;
    std::vector<int> tail_residues;  // P* black residues
    bool has_a_layer = false;
    int first_a_layer = 0;  // qualifying A-layer index k
    int d_r = 0;            // descent radius of the root unit: k-1 (else D)
    int j = 0;              // group index of the first A-layer in P*'s units
    int diameter = 0;

    ColorMap apply(const PortGraph& g) const;
    LayerClass layer_class(int layer) const;  // tail classes; root unit: L0=C, L1=D
    std::string to_json() const;
    static TransformedSpec from_json(const std::string& text);
};
TransformedSpec transform_to_root_c(const PortGraph& g, const UnionLabeling& u, const ShiftChoice& choice);

// Black <-> White swap; rejects maps with blanks.
ColorMap invert_colors(const ColorMap& colors);

// The whole `label --ratio` pipeline: min-neighbor-count root, fit, build,
// shift, transform. Asserts BN(transformed) <= BN(P*) and the certificate.
struct RatioResult {
    TransformedSpec spec;
    ColorMap colors;
    long long bn_p_star = 0;
    long long bn_transformed = 0;
    long long certificate_sum = 0;
    std::string sidecar_json() const;
};
RatioResult label_with_ratio(const PortGraph& g, const Rational& rho);

} // namespace lgx
