#include "lgx/labeling.hpp"

#include <algorithm>
#include <numeric>

#include "lgx/oracle.hpp"

namespace lgx {

char color_char(Color c) {
    switch (c) {
        case Color::Black: return 'B';
        case Color::White: return 'W';
        case Color::Blank: return 'N';
    }
    return '?';
}

Color color_from_char(char c) {
    switch (c) {
        case 'B': return Color::Black;
        case 'W': return Color::White;
        case 'N': return Color::Blank;
        default: throw ParseError(std::string("unknown color '") + c + "'");
    }
}

long long ColorMap::count(Color c) const {
    return std::count(colors.begin(), colors.end(), c);
}

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (d <= 0 || n < 0) throw DomainError("rational must be nonnegative with positive denominator");
    long long g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(text), 1);
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

const char* layer_class_name(LayerClass c) {
    switch (c) {
        case LayerClass::A: return "A";
        case LayerClass::B: return "B";
        case LayerClass::C: return "C";
        case LayerClass::D: return "D";
        case LayerClass::WhiteLayer: return "white";
    }
    return "?";
}

void PLSpec::normalize() {
    std::sort(black_residues.begin(), black_residues.end());
    black_residues.erase(std::unique(black_residues.begin(), black_residues.end()), black_residues.end());
}

void PLSpec::validate() const {
    if (period < 1) throw SpecError("PL period must be positive");
    if (black_residues.empty()) throw SpecError("PL needs at least one black residue");
    for (int r : black_residues)
        if (r < 0 || r >= period) throw SpecError("PL residue " + std::to_string(r) + " outside [0, period)");
}

bool PLSpec::residue_black(int residue) const {
    return std::binary_search(black_residues.begin(), black_residues.end(), residue);
}

std::string PLSpec::str() const {
    std::string s = "PL " + std::to_string(root) + " " + std::to_string(period);
    for (int r : black_residues) s += " " + std::to_string(r);
    return s;
}

void ALSpec::validate() const {
    if (d1 < 2) throw SpecError("AL requires d1 >= 2");
    if (d2 / 2 < d1) throw SpecError("AL requires floor(d2/2) >= d1");
}

PLSpec ALSpec::to_pl() const {
    validate();
    PLSpec pl;
    pl.root = root;
    pl.period = d1 + d2 + 2;
    pl.black_residues = {0, 1, d2 + 1, d1 + d2 + 1};
    pl.normalize();
    return pl;
}

std::string ALSpec::str() const {
    return "AL " + std::to_string(root) + " " + std::to_string(d1) + " " + std::to_string(d2);
}

void ElementarySpec::validate() const {
    if (d_ab < 2) throw SpecError("elementary labeling requires d_AB >= 2");
    if (d_da / 2 < d_ab) throw SpecError("elementary labeling requires floor(d_DA/2) >= d_AB");
}

PLSpec ElementarySpec::to_pl() const {
    validate();
    PLSpec pl;
    pl.root = root;
    pl.period = period();
    pl.black_residues = {res_a(), res_b(), res_c(), res_d()};
    pl.normalize();
    return pl;
}

std::string ElementarySpec::str() const {
    return "EL " + std::to_string(root) + " " + std::to_string(p_a) + " " + std::to_string(d_ab) + " " +
           std::to_string(d_da);
}

ColorMap apply_pl(const PortGraph& g, const PLSpec& spec) {
    spec.validate();
    auto layers = oracle::bfs_layers(g, spec.root);
    ColorMap cm;
    cm.colors.assign(static_cast<size_t>(g.node_count()), Color::White);
    for (int v = 0; v < g.node_count(); ++v)
        if (spec.residue_black(layers.layer_of[static_cast<size_t>(v)] % spec.period))
            cm.colors[static_cast<size_t>(v)] = Color::Black;
    cm.provenance_root = spec.root;
    cm.provenance = spec.str();
    return cm;
}

ColorMap apply_al(const PortGraph& g, const ALSpec& spec) {
    spec.validate();
    auto layers = oracle::bfs_layers(g, spec.root);
    int need = spec.d1 + spec.d2 + 1;
    if (layers.diameter_from_root < need)
        throw SpecError("AL spec rejected: D = " + std::to_string(layers.diameter_from_root) +
                        " but d1+d2+1 = " + std::to_string(need));
    ColorMap cm = apply_pl(g, spec.to_pl());
    cm.provenance = spec.str();
    return cm;
}

ColorMap apply_elementary(const PortGraph& g, const ElementarySpec& spec) {
    ColorMap cm = apply_pl(g, spec.to_pl());
    cm.provenance = spec.str();
    return cm;
}

LayerClass classify_node(const PortGraph& g, const ElementarySpec& spec, int v) {
    auto layers = oracle::bfs_layers(g, spec.root);
    int res = layers.layer_of[static_cast<size_t>(v)] % spec.period();
    if (res == spec.res_a()) return LayerClass::A;
    if (res == spec.res_b()) return LayerClass::B;
    if (res == spec.res_c()) return LayerClass::C;
    if (res == spec.res_d()) return LayerClass::D;
    return LayerClass::WhiteLayer;
}

LayerClass classify_node(const PortGraph& g, const ALSpec& spec, int v) {
    // AL as elementary: P_A = d_DA + 1 with d_AB = d1, d_DA = d2.
    ElementarySpec el{spec.root, spec.d2 + 1, spec.d1, spec.d2};
    return classify_node(g, el, v);
}

LabelingStats labeling_stats(const PortGraph& g, const ColorMap& colors) {
    if (colors.has_blank()) throw DomainError("labeling_stats: map contains blank nodes");
    if (colors.provenance_root < 0) throw DomainError("labeling_stats: color map has no root");
    LabelingStats st;
    st.n = g.node_count();
    st.b = colors.count(Color::Black);
    if (st.b == 0) throw DomainError("labeling_stats: no black nodes, N-ratio undefined");
    st.n_ratio = Rational(st.n, st.b);

    auto layers = oracle::bfs_layers(g, colors.provenance_root);
    st.layers = static_cast<int>(layers.layers.size());
    for (const auto& layer : layers.layers) {
        bool all_black = true;
        for (int v : layer)
            if (colors.at(v) != Color::Black) all_black = false;
        if (all_black) ++st.black_layers;
    }
    if (st.black_layers == 0) throw DomainError("labeling_stats: no black layers");
    st.l_ratio = Rational(st.layers, st.black_layers);
    return st;
}

} // namespace lgx
