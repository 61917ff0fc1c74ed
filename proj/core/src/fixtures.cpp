#include "elliptic/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace elliptic {

namespace {

using R = Rational;

Rational perimeter_parameter(const R& s, const R& t) {
    if (t == 0 && s < 1) return s;
    if (s == 1 && t < 1) return 1 + t;
    if (t == 1 && s > 0) return 2 + (1 - s);
    return 3 + (1 - t);
}

double to_double(const R& r) { return boost::rational_cast<double>(r); }

struct Pt {
    double s;
    double t;
};

bool inside(const std::vector<Pt>& poly, Pt p) {
    bool in = false;
    for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        const Pt& a = poly[i];
        const Pt& b = poly[j];
        if ((a.t > p.t) != (b.t > p.t) && p.s < (b.s - a.s) * (p.t - a.t) / (b.t - a.t) + a.s) in = !in;
    }
    return in;
}

const std::vector<Tangency> kSaddle{Tangency::stable_saddle};
const std::vector<Tangency> kCenter{Tangency::stable_center};
const std::vector<Tangency> kDouble{Tangency::stable_saddle, Tangency::stable_saddle};

std::vector<PlanarPoint> corners() {
    return {{1, 0, 0, VertexKind::corner},
            {2, 1, 0, VertexKind::corner},
            {3, 1, 1, VertexKind::corner},
            {4, 0, 1, VertexKind::corner}};
}

// Cuts off each corner along s + t = c (and its mirror images), ids 17 to 24.
void add_corner_cuts(std::vector<PlanarPoint>& pts, std::vector<PlanarSegment>& segs,
                     std::vector<LabelSeed>& seeds, const R& c, int first_segment) {
    auto b1 = VertexKind::boundary_valence1;
    pts.push_back({17, c, 0, b1});
    pts.push_back({18, 0, c, b1});
    pts.push_back({19, 1 - c, 0, b1});
    pts.push_back({20, 1, c, b1});
    pts.push_back({21, 1, 1 - c, b1});
    pts.push_back({22, 1 - c, 1, b1});
    pts.push_back({23, c, 1, b1});
    pts.push_back({24, 0, 1 - c, b1});
    segs.push_back({first_segment, 17, 18, kCenter});
    segs.push_back({first_segment + 1, 19, 20, kCenter});
    segs.push_back({first_segment + 2, 21, 22, kCenter});
    segs.push_back({first_segment + 3, 23, 24, kCenter});
    R d = c / 4;
    seeds.push_back({d, d, "ax"});
    seeds.push_back({1 - d, d, "ay"});
    seeds.push_back({1 - d, 1 - d, "by"});
    seeds.push_back({d, 1 - d, "bx"});
}

Graphic collapsed_graphic() {
    auto b1 = VertexKind::boundary_valence1;
    auto high = VertexKind::interior_high_order;
    R third(1, 3), two_thirds(2, 3);
    auto pts = corners();
    pts.insert(pts.end(), {{5, 0, two_thirds, b1},
                           {6, two_thirds, 0, b1},
                           {7, 1, third, b1},
                           {8, third, 1, b1},
                           {9, 0, third, b1},
                           {10, two_thirds, 1, b1},
                           {11, third, 0, b1},
                           {12, 1, two_thirds, b1},
                           {13, R(1, 6), R(1, 6), high},
                           {14, third, third, high},
                           {15, two_thirds, two_thirds, high},
                           {16, R(5, 6), R(5, 6), high}});
    std::vector<PlanarSegment> segs{
        {1, 9, 13, kSaddle},  {2, 11, 13, kSaddle}, {3, 13, 14, kDouble}, {4, 5, 14, kSaddle},
        {5, 6, 14, kSaddle},  {6, 14, 15, kDouble}, {7, 8, 15, kSaddle},  {8, 7, 15, kSaddle},
        {9, 15, 16, kDouble}, {10, 10, 16, kSaddle}, {11, 12, 16, kSaddle},
    };
    std::vector<LabelSeed> seeds{
        {R(1, 8), R(1, 8), "ax"},   {R(1, 10), R(2, 5), "X"},  {R(2, 5), R(1, 10), "A"},
        {R(1, 4), R(3, 4), "bx"},   {R(3, 4), R(1, 4), "ay"},  {R(3, 5), R(9, 10), "B"},
        {R(9, 10), R(3, 5), "Y"},   {R(7, 8), R(7, 8), "by"},
    };
    add_corner_cuts(pts, segs, seeds, R(1, 12), 12);
    return build_planar_graphic(pts, segs, seeds);
}

Graphic star_graphic() {
    auto b1 = VertexKind::boundary_valence1;
    R lo(3, 10), hi(7, 10), mid(1, 2);
    auto pts = corners();
    pts.insert(pts.end(), {{5, lo, 0, b1},
                           {6, hi, 0, b1},
                           {7, 1, lo, b1},
                           {8, 1, hi, b1},
                           {9, hi, 1, b1},
                           {10, lo, 1, b1},
                           {11, 0, hi, b1},
                           {12, 0, lo, b1},
                           {13, mid, mid, VertexKind::interior_high_order}});
    std::vector<PlanarSegment> segs;
    for (int i = 0; i < 8; ++i) segs.push_back({i + 1, 13, 5 + i, kSaddle});
    R near(1, 10), far(9, 10);
    std::vector<LabelSeed> seeds{
        {mid, near, "A"}, {far, near, "ay"}, {far, mid, "Y"},  {far, far, "by"},
        {mid, far, "B"},  {near, far, "bx"}, {near, mid, "X"}, {near, near, "ax"},
    };
    return build_planar_graphic(pts, segs, seeds);
}

Graphic trivial_graphic() { return build_planar_graphic(corners(), {}, {}); }

}  // namespace

Graphic build_planar_graphic(const std::vector<PlanarPoint>& points, const std::vector<PlanarSegment>& segments,
                             const std::vector<LabelSeed>& seeds) {
    std::map<int, GraphicVertex> vertices;
    for (const auto& p : points) {
        if (!vertices.emplace(p.id, GraphicVertex{p.id, p.s, p.t, p.kind, {}}).second)
            throw GraphicError("duplicate vertex " + std::to_string(p.id));
    }
    std::vector<GraphicEdge> edges;
    int next_id = 1;
    for (const auto& s : segments) {
        edges.push_back({s.id, s.from, s.to, s.tangencies});
        next_id = std::max(next_id, s.id + 1);
    }

    std::vector<std::pair<R, int>> boundary;
    for (const auto& p : points)
        if (is_boundary_kind(p.kind)) boundary.emplace_back(perimeter_parameter(p.s, p.t), p.id);
    std::sort(boundary.begin(), boundary.end());
    for (std::size_t i = 0; i < boundary.size(); ++i)
        edges.push_back({next_id++, boundary[i].second, boundary[(i + 1) % boundary.size()].second,
                         {Tangency::boundary}});

    auto at = [&](int id) -> GraphicVertex& {
        auto it = vertices.find(id);
        if (it == vertices.end()) throw GraphicError("unknown vertex " + std::to_string(id));
        return it->second;
    };
    std::map<int, const GraphicEdge*> edge_by_id;
    for (const auto& e : edges) edge_by_id[e.id] = &e;

    std::map<int, std::vector<std::pair<double, int>>> around;
    for (const auto& e : edges) {
        const auto& a = at(e.from);
        const auto& b = at(e.to);
        double ds = to_double(b.s - a.s), dt = to_double(b.t - a.t);
        around[e.from].emplace_back(std::atan2(dt, ds), e.id);
        around[e.to].emplace_back(std::atan2(-dt, -ds), e.id);
    }
    for (auto& [id, list] : around) {
        std::sort(list.begin(), list.end());
        for (std::size_t i = 0; i + 1 < list.size(); ++i)
            if (list[i].first == list[i + 1].first)
                throw GraphicError("overlapping segments at vertex " + std::to_string(id));
        for (const auto& [angle, e] : list) at(id).edge_order.push_back(e);
    }

    std::set<std::pair<int, bool>> visited;
    std::vector<std::vector<int>> faces;
    for (const auto& e0 : edges) {
        for (bool fwd0 : {true, false}) {
            if (visited.count({e0.id, fwd0})) continue;
            std::vector<int> face;
            int e = e0.id;
            bool fwd = fwd0;
            while (visited.insert({e, fwd}).second) {
                face.push_back(fwd ? e : -e);
                const auto* ed = edge_by_id.at(e);
                int head = fwd ? ed->to : ed->from;
                const auto& order = at(head).edge_order;
                auto idx = static_cast<std::size_t>(std::find(order.begin(), order.end(), e) - order.begin());
                e = order[(idx + order.size() - 1) % order.size()];
                fwd = edge_by_id.at(e)->from == head;
            }
            faces.push_back(face);
        }
    }

    std::vector<GraphicRegion> regions;
    std::vector<bool> used(seeds.size(), false);
    for (const auto& face : faces) {
        bool outer = std::all_of(face.begin(), face.end(), [&](int h) { return h < 0 && edge_by_id.at(-h)->is_side(); });
        if (outer) continue;
        std::vector<Pt> poly;
        for (int h : face) {
            const auto* ed = edge_by_id.at(std::abs(h));
            const auto& v = at(h > 0 ? ed->from : ed->to);
            poly.push_back({to_double(v.s), to_double(v.t)});
        }
        GraphicRegion r{static_cast<int>(regions.size()) + 1, face, {}};
        bool labeled = false;
        for (std::size_t i = 0; i < seeds.size(); ++i) {
            if (!inside(poly, {to_double(seeds[i].s), to_double(seeds[i].t)})) continue;
            if (labeled) throw GraphicError("two label seeds fall in region " + std::to_string(r.id));
            r.label = Label::parse(seeds[i].label);
            used[i] = true;
            labeled = true;
        }
        regions.push_back(r);
    }
    for (std::size_t i = 0; i < seeds.size(); ++i)
        if (!used[i]) throw GraphicError("label seed " + seeds[i].label + " lies in no region");

    std::vector<GraphicVertex> vs;
    for (auto& [id, v] : vertices) vs.push_back(std::move(v));
    return Graphic(std::move(vs), std::move(edges), std::move(regions));
}

Graphic morse_graphic(const Rational& lo, const Rational& corner_cut) {
    if (lo <= 0 || lo >= R(1, 2)) throw GraphicError("the offset must lie in (0, 1/2)");
    if (corner_cut <= 0 || corner_cut >= lo) throw GraphicError("the corner cut must lie in (0, offset)");
    auto b1 = VertexKind::boundary_valence1;
    auto v4 = VertexKind::interior_valence4;
    R hi = 1 - lo, half(1, 2), w = half - lo;
    auto pts = corners();
    pts.insert(pts.end(), {{5, 0, hi, b1},
                           {6, hi, 0, b1},
                           {7, 1, lo, b1},
                           {8, lo, 1, b1},
                           {9, 0, lo, b1},
                           {10, hi, 1, b1},
                           {11, lo, 0, b1},
                           {12, 1, hi, b1},
                           {13, w, half, v4},
                           {14, half, w, v4},
                           {15, half, 1 - w, v4},
                           {16, 1 - w, half, v4}});
    std::vector<PlanarSegment> segs{
        {1, 5, 13, kSaddle},  {2, 13, 14, kSaddle}, {3, 14, 6, kSaddle},  {4, 9, 13, kSaddle},
        {5, 13, 15, kSaddle}, {6, 15, 10, kSaddle}, {7, 11, 14, kSaddle}, {8, 14, 16, kSaddle},
        {9, 16, 12, kSaddle}, {10, 7, 16, kSaddle}, {11, 16, 15, kSaddle}, {12, 15, 8, kSaddle},
    };
    R tri = w / 3, d = (corner_cut + hi) / 4;
    std::vector<LabelSeed> seeds{
        {tri, half, "X"},  {half, tri, "A"},     {1 - tri, half, "Y"}, {half, 1 - tri, "B"},
        {d, d, "ax"},      {1 - d, d, "ay"},     {1 - d, 1 - d, "by"}, {d, 1 - d, "bx"},
    };
    add_corner_cuts(pts, segs, seeds, corner_cut, 13);
    return build_planar_graphic(pts, segs, seeds);
}

Graphic builtin_graphic(const std::string& name) {
    if (name == "morse") return morse_graphic(R(1, 3), R(1, 12));
    if (name == "collapsed") return collapsed_graphic();
    if (name == "star") return star_graphic();
    if (name == "trivial") return trivial_graphic();
    throw GraphicError("unknown built-in graphic: " + name);
}

std::vector<std::string> builtin_graphic_names() { return {"morse", "collapsed", "star", "trivial"}; }

}  // namespace elliptic
