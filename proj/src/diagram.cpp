#include "arcnest/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace arcnest {

const char* to_string(ObjectClass cls) {
    switch (cls) {
        case ObjectClass::Matching: return "matching";
        case ObjectClass::SetPartition: return "set-partition";
        case ObjectClass::Permutation: return "permutation";
    }
    return "?";
}

const char* to_string(VertexRole role) {
    switch (role) {
        case VertexRole::FixedPoint: return "fixed";
        case VertexRole::Opener: return "opener";
        case VertexRole::Closer: return "closer";
        case VertexRole::Transitory: return "transitory";
        case VertexRole::Loop: return "loop";
    }
    return "?";
}

void canonicalize(ArcDiagram& d) {
    std::sort(d.upper.begin(), d.upper.end());
    std::sort(d.lower.begin(), d.lower.end());
    std::sort(d.loops.begin(), d.loops.end());
}

namespace {

void check_endpoints(const ArcDiagram& d) {
    for (const auto* arcs : {&d.upper, &d.lower}) {
        for (const Arc& a : *arcs) {
            if (a.open < 1 || a.close > d.n || a.open >= a.close)
                throw std::invalid_argument("arc endpoints out of range or not open < close");
            if (a.colour < 1) throw std::invalid_argument("arc colour must be a positive integer");
        }
    }
    for (const Arc& l : d.loops) {
        if (l.open != l.close) throw std::invalid_argument("loop endpoints must coincide");
        if (l.open < 1 || l.open > d.n) throw std::invalid_argument("loop vertex out of range");
        if (l.colour < 1) throw std::invalid_argument("loop colour must be a positive integer");
    }
}

// degree[v] = {arcs opened at v, arcs closed at v} within one layer
struct Degrees {
    std::vector<int> out, in;
};

Degrees layer_degrees(const ArcDiagram& d, Layer layer) {
    Degrees deg{std::vector<int>(d.n + 1, 0), std::vector<int>(d.n + 1, 0)};
    const auto& arcs = layer == Layer::Upper ? d.upper : d.lower;
    for (const Arc& a : arcs) {
        ++deg.out[a.open];
        ++deg.in[a.close];
    }
    return deg;
}

}  // namespace

void validate(ObjectClass cls, const ArcDiagram& d) {
    if (d.n < 0) throw std::invalid_argument("vertex count must be non-negative");
    check_endpoints(d);
    if (cls != ObjectClass::Permutation) {
        if (!d.lower.empty()) throw std::invalid_argument("only permutations have lower arcs");
        if (!d.loops.empty()) throw std::invalid_argument("only permutations carry explicit loops");
        Degrees deg = layer_degrees(d, Layer::Upper);
        for (int v = 1; v <= d.n; ++v) {
            if (deg.out[v] > 1 || deg.in[v] > 1)
                throw std::invalid_argument("vertex used twice in the same direction");
            if (cls == ObjectClass::Matching && deg.out[v] + deg.in[v] > 1)
                throw std::invalid_argument("matchings admit no transitory vertices");
        }
        return;
    }
    // Permutation: every vertex has exactly one outgoing half (upper-left,
    // lower-right, or loop) and one incoming half (upper-right, lower-left,
    // or loop) -- i.e. the arcs define a bijection.
    std::vector<int> out(d.n + 1, 0), in(d.n + 1, 0);
    for (const Arc& a : d.upper) {
        ++out[a.open];
        ++in[a.close];
    }
    for (const Arc& a : d.lower) {
        ++out[a.close];
        ++in[a.open];
    }
    for (const Arc& l : d.loops) {
        ++out[l.open];
        ++in[l.open];
    }
    for (int v = 1; v <= d.n; ++v)
        if (out[v] != 1 || in[v] != 1)
            throw std::invalid_argument("arcs do not define a permutation (vertex " +
                                        std::to_string(v) + ")");
}

std::vector<VertexRole> roles(const ArcDiagram& d, Layer layer) {
    std::vector<VertexRole> r(static_cast<size_t>(d.n) + 1, VertexRole::FixedPoint);
    Degrees deg = layer_degrees(d, layer);
    for (int v = 1; v <= d.n; ++v) {
        if (deg.out[v] && deg.in[v])
            r[v] = VertexRole::Transitory;
        else if (deg.out[v])
            r[v] = VertexRole::Opener;
        else if (deg.in[v])
            r[v] = VertexRole::Closer;
    }
    if (layer == Layer::Upper)
        for (const Arc& l : d.loops) r[l.open] = VertexRole::Loop;
    return r;
}

std::vector<int> to_one_line(const ArcDiagram& d) {
    std::vector<int> sigma(static_cast<size_t>(d.n) + 1, 0);
    for (const Arc& a : d.upper) sigma[a.open] = a.close;
    for (const Arc& a : d.lower) sigma[a.close] = a.open;
    for (const Arc& l : d.loops) sigma[l.open] = l.open;
    for (int v = 1; v <= d.n; ++v)
        if (!sigma[v]) throw std::invalid_argument("diagram does not cover vertex " + std::to_string(v));
    sigma.erase(sigma.begin());
    return sigma;
}

ArcDiagram from_one_line(const std::vector<int>& sigma) {
    ArcDiagram d;
    d.n = static_cast<int>(sigma.size());
    std::vector<char> seen(static_cast<size_t>(d.n) + 1, 0);
    for (int a = 1; a <= d.n; ++a) {
        int b = sigma[a - 1];
        if (b < 1 || b > d.n || seen[b]) throw std::invalid_argument("one-line form is not a permutation");
        seen[b] = 1;
        if (a < b)
            d.upper.push_back({a, b});
        else if (a > b)
            d.lower.push_back({b, a});
        else
            d.loops.push_back({a, a});
    }
    canonicalize(d);
    return d;
}

bool has_transitory(const ArcDiagram& d, Layer layer) {
    auto r = roles(d, layer);
    return std::find(r.begin(), r.end(), VertexRole::Transitory) != r.end();
}

std::vector<int> isolated_vertices(const ArcDiagram& d, Layer layer) {
    auto r = roles(d, layer);
    std::vector<int> out;
    for (int v = 1; v <= d.n; ++v)
        if (r[v] == VertexRole::FixedPoint) out.push_back(v);
    return out;
}

ArcDiagram with_fixed_points_as_loops(const ArcDiagram& d) {
    ArcDiagram e = d;
    for (int v : isolated_vertices(d, Layer::Upper)) e.loops.push_back({v, v});
    canonicalize(e);
    return e;
}

ArcDiagram with_loops_as_fixed_points(const ArcDiagram& d) {
    ArcDiagram e = d;
    e.loops.clear();
    return e;
}

}  // namespace arcnest
