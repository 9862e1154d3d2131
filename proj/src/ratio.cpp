#include "lgx/ratio.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "lgx/oracle.hpp"

namespace lgx {

std::pair<long long, long long> fit_period(const Rational& rho, int diameter) {
    if (rho < Rational(2, 1)) throw SpecError("ratio construction requires rho >= 2 (use invert_colors below 2)");
    long long env = (diameter + 1) / 4;
    if (rho.num * 4 <= rho.den * (diameter + 1)) return {rho.num, rho.den};
    for (long long m = 2; m <= env; ++m) {
        // largest t with m/t >= rho, then walk down to a coprime one
        long long t_hi = (m * rho.den) / rho.num;
        for (long long t = t_hi; t >= 1; --t) {
            if (Rational(m, t) >= rho && std::gcd(m, t) == 1) return {m, t};
        }
    }
    throw SpecError("infeasible ratio: " + rho.str() + " exceeds the (D+1)/4 envelope with D = " +
                    std::to_string(diameter));
}

UnionLabeling build_union_labeling(const PortGraph& g, int root, long long m, long long t) {
    if (std::gcd(m, t) != 1) throw SpecError("build_union_labeling: m and t must be coprime");
    auto ld = oracle::bfs_layers(g, root);
    long long p = 4 * m;
    if (p > ld.diameter_from_root + 1)
        throw SpecError("build_union_labeling: period 4m = " + std::to_string(p) + " exceeds D+1 = " +
                        std::to_string(ld.diameter_from_root + 1));
    if (p / t < 8) throw SpecError("build_union_labeling: floor(4m/t) < 8 would push d_AB below 2");

    UnionLabeling u;
    u.m = m;
    u.t = t;
    u.x = p % t;
    long long lo = p / t, hi = (p + t - 1) / t;
    u.d_ab = static_cast<int>((lo - 2) / 3);
    u.d_da = static_cast<int>(lo - 2 - u.d_ab);
    u.d_da_long = u.d_da + 1;
    int off = 0;
    for (long long i = 0; i < t; ++i) {
        u.offsets.push_back(off);
        int len = static_cast<int>(i < u.x ? hi : lo);
        u.lengths.push_back(len);
        off += len;
    }
    u.spec.root = root;
    u.spec.period = static_cast<int>(p);
    for (int o : u.offsets)
        for (int r : {o, o + u.d_ab, o + u.d_ab + 1, o + u.d_ab + 2})
            u.spec.black_residues.push_back(r % static_cast<int>(p));
    u.spec.normalize();
    if (static_cast<long long>(u.spec.black_residues.size()) != 4 * t)
        throw InternalError("union labeling does not have 4t distinct black residues");
    if (u.d_da / 2 < u.d_ab || u.d_da_long / 2 < u.d_ab)
        throw InternalError("union labeling violates floor(d_DA/2) >= d_AB");
    return u;
}

PLSpec circular_shift(const PLSpec& spec, int l) {
    PLSpec out;
    out.root = spec.root;
    out.period = spec.period;
    for (int r : spec.black_residues) out.black_residues.push_back((r + l) % spec.period);
    out.normalize();
    return out;
}

ShiftChoice select_shift(const PortGraph& g, const UnionLabeling& u) {
    auto ld = oracle::bfs_layers(g, u.spec.root);
    int p = u.spec.period;
    std::vector<long long> layer_size;
    for (const auto& layer : ld.layers) layer_size.push_back(static_cast<long long>(layer.size()));

    ShiftChoice choice;
    choice.bn.assign(static_cast<size_t>(p), 0);
    for (int k = 0; k < p; ++k) {
        PLSpec shifted = circular_shift(u.spec, k);
        long long bn = 0;
        for (size_t i = 0; i < layer_size.size(); ++i)
            if (shifted.residue_black(static_cast<int>(i) % p)) bn += layer_size[i];
        choice.bn[static_cast<size_t>(k)] = bn;
        choice.certificate_sum += bn;
    }
    long long expect = 4 * u.t * g.node_count();
    if (choice.certificate_sum != expect)
        throw InternalError("pigeonhole certificate mismatch: sum BN(P^k) = " +
                            std::to_string(choice.certificate_sum) + ", expected 4tn = " + std::to_string(expect));
    choice.k_star = static_cast<int>(std::min_element(choice.bn.begin(), choice.bn.end()) - choice.bn.begin());
    choice.bn_star = choice.bn[static_cast<size_t>(choice.k_star)];
    choice.shifted = circular_shift(u.spec, choice.k_star);
    return choice;
}

TransformedSpec transform_to_root_c(const PortGraph& g, const UnionLabeling& u, const ShiftChoice& choice) {
    auto ld = oracle::bfs_layers(g, u.spec.root);
    TransformedSpec ts;
    ts.root = u.spec.root;
    ts.m = u.m;
    ts.t = u.t;
    ts.x = u.x;
    ts.d_ab = u.d_ab;
    ts.d_da = u.d_da;
    ts.d_da_long = u.d_da_long;
    ts.period = u.spec.period;
    ts.k_star = choice.k_star;
    ts.tail_residues = choice.shifted.black_residues;
    ts.diameter = ld.diameter_from_root;

    int p = ts.period;
    // Find the first A-layer with exactly one C-layer before it.
    std::vector<char> is_a(static_cast<size_t>(p), 0), is_c(static_cast<size_t>(p), 0);
    for (size_t i = 0; i < u.offsets.size(); ++i) {
        is_a[static_cast<size_t>((u.offsets[i] + choice.k_star) % p)] = 1;
        is_c[static_cast<size_t>((u.offsets[i] + u.d_ab + 1 + choice.k_star) % p)] = 1;
    }
    int c_before = 0;
    ts.has_a_layer = false;
    for (int layer = 0; layer <= ld.diameter_from_root; ++layer) {
        if (is_a[static_cast<size_t>(layer % p)] && c_before == 1) {
            ts.has_a_layer = true;
            ts.first_a_layer = layer;
            break;
        }
        if (is_c[static_cast<size_t>(layer % p)]) ++c_before;
    }
    if (ts.has_a_layer) {
        // the exploration's root-unit descent radius is the BL_1 -> first-A gap
        ts.d_r = ts.first_a_layer - 1;
        int res = (ts.first_a_layer - choice.k_star) % p;
        if (res < 0) res += p;
        ts.j = 0;
        for (size_t i = 0; i < u.offsets.size(); ++i)
            if (u.offsets[i] == res) ts.j = static_cast<int>(i);
    } else {
        ts.first_a_layer = ld.diameter_from_root + 1;
        ts.d_r = ld.diameter_from_root;
        ts.j = 0;
    }
    return ts;
}

ColorMap TransformedSpec::apply(const PortGraph& g) const {
    auto ld = oracle::bfs_layers(g, root);
    ColorMap cm;
    cm.colors.assign(static_cast<size_t>(g.node_count()), Color::White);
    PLSpec tail;
    tail.root = root;
    tail.period = period;
    tail.black_residues = tail_residues;
    for (int v = 0; v < g.node_count(); ++v) {
        int layer = ld.layer_of[static_cast<size_t>(v)];
        bool black = false;
        if (layer <= 1)
            black = true;
        else if (has_a_layer && layer >= first_a_layer)
            black = tail.residue_black(layer % period);
        cm.colors[static_cast<size_t>(v)] = black ? Color::Black : Color::White;
    }
    cm.provenance_root = root;
    cm.provenance = "TR m=" + std::to_string(m) + "/t=" + std::to_string(t) + " k*=" + std::to_string(k_star);
    return cm;
}

std::vector<int> TransformedSpec::group_offsets() const {
    std::vector<int> offs;
    long long lo = static_cast<long long>(period) / t, hi = (period + t - 1) / t;
    int off = 0;
    for (long long i = 0; i < t; ++i) {
        offs.push_back(off);
        off += static_cast<int>(i < x ? hi : lo);
    }
    return offs;
}

LayerClass TransformedSpec::layer_class(int layer) const {
    if (layer == 0) return LayerClass::C;
    if (layer == 1) return LayerClass::D;
    if (!has_a_layer || layer < first_a_layer) return LayerClass::WhiteLayer;
    int res = (layer - k_star) % period;
    if (res < 0) res += period;
    for (int off : group_offsets()) {
        if (res == off % period) return LayerClass::A;
        if (res == (off + d_ab) % period) return LayerClass::B;
        if (res == (off + d_ab + 1) % period) return LayerClass::C;
        if (res == (off + d_ab + 2) % period) return LayerClass::D;
    }
    return LayerClass::WhiteLayer;
}

ColorMap invert_colors(const ColorMap& colors) {
    if (colors.has_blank()) throw DomainError("invert_colors: map contains blank nodes");
    ColorMap out = colors;
    for (auto& c : out.colors) c = (c == Color::Black) ? Color::White : Color::Black;
    out.provenance = "inverted(" + colors.provenance + ")";
    return out;
}

std::string TransformedSpec::to_json() const {
    nlohmann::json j9;
    j9["root"] = root;
    j9["m"] = m;
    j9["t"] = t;
    j9["x"] = x;
    j9["d_AB"] = d_ab;
    j9["d_DA"] = d_da;
    j9["d_DA_long"] = d_da_long;
    j9["period"] = period;
    j9["k_star"] = k_star;
    j9["tail_residues"] = tail_residues;
    j9["has_a_layer"] = has_a_layer;
    j9["first_a_layer"] = first_a_layer;
    j9["d_r"] = d_r;
    j9["j"] = j;
    j9["diameter"] = diameter;
    return j9.dump(2);
}

TransformedSpec TransformedSpec::from_json(const std::string& text) {
    nlohmann::json j9 = nlohmann::json::parse(text);
    TransformedSpec ts;
    ts.root = j9.at("root").get<int>();
    ts.m = j9.at("m").get<long long>();
    ts.t = j9.at("t").get<long long>();
    ts.x = j9.at("x").get<long long>();
    ts.d_ab = j9.at("d_AB").get<int>();
    ts.d_da = j9.at("d_DA").get<int>();
    ts.d_da_long = j9.at("d_DA_long").get<int>();
    ts.period = j9.at("period").get<int>();
    ts.k_star = j9.at("k_star").get<int>();
    ts.tail_residues = j9.at("tail_residues").get<std::vector<int>>();
    ts.has_a_layer = j9.at("has_a_layer").get<bool>();
    ts.first_a_layer = j9.at("first_a_layer").get<int>();
    ts.d_r = j9.at("d_r").get<int>();
    ts.j = j9.at("j").get<int>();
    ts.diameter = j9.at("diameter").get<int>();
    return ts;
}

std::string RatioResult::sidecar_json() const {
    nlohmann::json j9 = nlohmann::json::parse(spec.to_json());
    j9["BN"] = bn_transformed;
    j9["BN_p_star"] = bn_p_star;
    j9["certificate_sum"] = certificate_sum;
    return j9.dump(2);
}

RatioResult label_with_ratio(const PortGraph& g, const Rational& rho) {
    // root with the minimal number of distinct neighbors, smallest id on ties
    int root = 0;
    size_t best = g.distinct_neighbors(0).size();
    for (int v = 1; v < g.node_count(); ++v) {
        size_t nb = g.distinct_neighbors(v).size();
        if (nb < best) {
            best = nb;
            root = v;
        }
    }
    auto ld = oracle::bfs_layers(g, root);
    auto [m, t] = fit_period(rho, ld.diameter_from_root);
    UnionLabeling u = build_union_labeling(g, root, m, t);
    ShiftChoice choice = select_shift(g, u);
    RatioResult res;
    res.spec = transform_to_root_c(g, u, choice);
    res.colors = res.spec.apply(g);
    res.bn_p_star = choice.bn_star;
    res.bn_transformed = res.colors.count(Color::Black);
    res.certificate_sum = choice.certificate_sum;
    if (res.bn_transformed > res.bn_p_star)
        throw InternalError("transformation increased the black count: " + std::to_string(res.bn_transformed) +
                            " > " + std::to_string(res.bn_p_star));
    if (Rational(g.node_count(), res.bn_transformed) < Rational(m, t))
        throw InternalError("transformed labeling misses the ratio guarantee");
    return res;
}

} // namespace lgx
