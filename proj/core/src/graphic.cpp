#include "elliptic/graphic.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>

namespace elliptic {

namespace {

constexpr std::array<std::pair<VertexKind, const char*>, 6> kKinds{{
    {VertexKind::interior_valence4, "interior-valence4"},
    {VertexKind::interior_birth_death, "interior-birth-death"},
    {VertexKind::interior_high_order, "interior-high-order"},
    {VertexKind::boundary_valence1, "boundary-valence1"},
    {VertexKind::boundary_valence2, "boundary-valence2"},
    {VertexKind::corner, "corner"},
}};

constexpr std::array<std::pair<Tangency, const char*>, 5> kTangencies{{
    {Tangency::stable_center, "stable-center"},
    {Tangency::stable_saddle, "stable-saddle"},
    {Tangency::birth_death, "birth-death"},
    {Tangency::other, "other"},
    {Tangency::boundary, "boundary"},
}};

std::string vid(int id) { return "vertex " + std::to_string(id); }
std::string eid(int id) { return "edge " + std::to_string(id); }

Rational perimeter_parameter(const GraphicVertex& v) {
    if (v.t == 0 && v.s < 1) return v.s;
    if (v.s == 1 && v.t < 1) return 1 + v.t;
    if (v.t == 1 && v.s > 0) return 2 + (1 - v.s);
    return 3 + (1 - v.t);
}

}  // namespace

std::string to_string(VertexKind k) {
    for (auto [kind, name] : kKinds)
        if (kind == k) return name;
    return "unknown";
}

std::string to_string(Tangency t) {
    for (auto [tan, name] : kTangencies)
        if (tan == t) return name;
    return "unknown";
}

std::optional<VertexKind> parse_vertex_kind(const std::string& s) {
    for (auto [kind, name] : kKinds)
        if (s == name) return kind;
    return std::nullopt;
}

std::optional<Tangency> parse_tangency(const std::string& s) {
    for (auto [tan, name] : kTangencies)
        if (s == name) return tan;
    return std::nullopt;
}

bool is_boundary_kind(VertexKind k) {
    return k == VertexKind::boundary_valence1 || k == VertexKind::boundary_valence2 || k == VertexKind::corner;
}

std::string to_string(SquareSide s) {
    switch (s) {
        case SquareSide::bottom: return "t=0";
        case SquareSide::right: return "s=1";
        case SquareSide::top: return "t=1";
        case SquareSide::left: return "s=0";
    }
    return "unknown";
}

bool GraphicEdge::is_side() const { return tangencies.size() == 1 && tangencies.front() == Tangency::boundary; }

bool GraphicEdge::rs2_eligible() const {
    return tangencies.size() == 1 &&
           (tangencies.front() == Tangency::stable_center || tangencies.front() == Tangency::stable_saddle);
}

Graphic::Graphic(std::vector<GraphicVertex> vertices, std::vector<GraphicEdge> edges,
                 std::vector<GraphicRegion> regions)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), regions_(std::move(regions)) {
    validate_ids();
    validate_edges();
    validate_vertices();
    validate_perimeter();
    trace_faces();
}

void Graphic::validate_ids() {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (!vertex_index_.emplace(vertices_[i].id, i).second) throw GraphicError("duplicate " + vid(vertices_[i].id));
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].id <= 0) throw GraphicError("edge ids must be positive");
        if (!edge_index_.emplace(edges_[i].id, i).second) throw GraphicError("duplicate " + eid(edges_[i].id));
    }
    for (std::size_t i = 0; i < regions_.size(); ++i)
        if (!region_index_.emplace(regions_[i].id, i).second)
            throw GraphicError("duplicate region " + std::to_string(regions_[i].id));
    if (regions_.empty()) throw GraphicError("a graphic needs at least one region");
}

void Graphic::validate_edges() {
    for (const auto& e : edges_) {
        if (!vertex_index_.count(e.from) || !vertex_index_.count(e.to))
            throw GraphicError(eid(e.id) + " has an unknown endpoint");
        if (e.from == e.to) throw GraphicError(eid(e.id) + " is a loop");
        if (e.tangencies.empty()) throw GraphicError(eid(e.id) + " has no tangency profile");
        bool side = std::find(e.tangencies.begin(), e.tangencies.end(), Tangency::boundary) != e.tangencies.end();
        if (side && !e.is_side()) throw GraphicError(eid(e.id) + " mixes boundary with tangencies");
        if (e.is_side()) {
            auto a = sides_of(e.from);
            auto b = sides_of(e.to);
            bool shared = std::any_of(a.begin(), a.end(),
                                      [&](SquareSide s) { return std::find(b.begin(), b.end(), s) != b.end(); });
            if (!shared) throw GraphicError(eid(e.id) + " is a side segment whose ends are on different sides");
        }
    }
}

void Graphic::validate_vertices() {
    std::map<int, std::multiset<int>> incident;
    for (const auto& e : edges_) {
        incident[e.from].insert(e.id);
        incident[e.to].insert(e.id);
    }
    int corners = 0;
    for (const auto& v : vertices_) {
        if (v.s < 0 || v.s > 1 || v.t < 0 || v.t > 1) throw GraphicError(vid(v.id) + " lies outside I^2");
        auto sides = sides_of(v.id);
        bool boundary = is_boundary_kind(v.kind);
        if (v.kind == VertexKind::corner && sides.size() != 2) throw GraphicError(vid(v.id) + " is not at a corner");
        if (v.kind == VertexKind::corner) ++corners;
        if (boundary && v.kind != VertexKind::corner && sides.size() != 1)
            throw GraphicError(vid(v.id) + " must lie in the interior of a side");
        if (!boundary && !sides.empty()) throw GraphicError(vid(v.id) + " must lie in the open square");

        std::multiset<int> order(v.edge_order.begin(), v.edge_order.end());
        if (order != incident[v.id]) throw GraphicError(vid(v.id) + " has an edge_order that differs from its edges");
        if (std::set<int>(order.begin(), order.end()).size() != order.size())
            throw GraphicError(vid(v.id) + " lists an edge twice");

        int side_edges = 0;
        for (int e : v.edge_order) side_edges += edge(e).is_side() ? 1 : 0;
        int gamma = static_cast<int>(v.edge_order.size()) - side_edges;
        if (boundary && side_edges != 2) throw GraphicError(vid(v.id) + " needs two side segments");
        if (!boundary && side_edges != 0) throw GraphicError(vid(v.id) + " is interior but meets a side segment");
        bool ok = true;
        switch (v.kind) {
            case VertexKind::interior_valence4: ok = gamma == 4; break;
            case VertexKind::interior_birth_death: ok = gamma == 2; break;
            case VertexKind::interior_high_order: ok = gamma >= 1; break;
            case VertexKind::boundary_valence1: ok = gamma == 1; break;
            case VertexKind::boundary_valence2: ok = gamma == 2; break;
            case VertexKind::corner: ok = gamma == 0; break;
        }
        if (!ok) throw GraphicError(vid(v.id) + " has valence " + std::to_string(gamma) + ", wrong for kind " + to_string(v.kind));
    }
    if (corners != 4) throw GraphicError("a graphic needs exactly four corner vertices");
}

void Graphic::validate_perimeter() {
    std::vector<std::pair<Rational, int>> boundary;
    for (const auto& v : vertices_)
        if (is_boundary_kind(v.kind)) boundary.emplace_back(perimeter_parameter(v), v.id);
    std::sort(boundary.begin(), boundary.end());
    for (std::size_t i = 0; i + 1 < boundary.size(); ++i)
        if (boundary[i].first == boundary[i + 1].first)
            throw GraphicError(vid(boundary[i].second) + " and " + vid(boundary[i + 1].second) + " coincide");
    perimeter_.clear();
    for (const auto& [param, id] : boundary) perimeter_.push_back(id);

    std::set<std::pair<int, int>> expected;
    for (std::size_t i = 0; i < perimeter_.size(); ++i)
        expected.emplace(perimeter_[i], perimeter_[(i + 1) % perimeter_.size()]);
    std::size_t sides = 0;
    for (const auto& e : edges_) {
        if (!e.is_side()) continue;
        ++sides;
        if (!expected.count({e.from, e.to}))
            throw GraphicError(eid(e.id) + " does not join consecutive boundary vertices counterclockwise");
    }
    if (sides != perimeter_.size()) throw GraphicError("the sides of I^2 are not covered by side segments");
}

void Graphic::trace_faces() {
    // Connectivity.
    std::set<int> reached{vertices_.front().id};
    std::deque<int> queue{vertices_.front().id};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int e : vertex(v).edge_order) {
            const auto& ed = edge(e);
            int w = ed.from == v ? ed.to : ed.from;
            if (reached.insert(w).second) queue.push_back(w);
        }
    }
    if (reached.size() != vertices_.size()) throw GraphicError("the graphic is not connected");

    // Half-edge (e, forward) runs from e.from to e.to; the next half-edge
    // around its left face leaves the head along the clockwise neighbour.
    std::set<std::pair<int, bool>> visited;
    std::vector<std::vector<int>> faces;
    std::map<int, std::size_t> face_of_forward, face_of_backward;
    for (const auto& e0 : edges_) {
        for (bool fwd0 : {true, false}) {
            if (visited.count({e0.id, fwd0})) continue;
            std::vector<int> face;
            int e = e0.id;
            bool fwd = fwd0;
            while (visited.insert({e, fwd}).second) {
                face.push_back(fwd ? e : -e);
                (fwd ? face_of_forward : face_of_backward)[e] = faces.size();
                const auto& ed = edge(e);
                int head = fwd ? ed.to : ed.from;
                const auto& order = vertex(head).edge_order;
                auto it = std::find(order.begin(), order.end(), e);
                std::size_t idx = static_cast<std::size_t>(it - order.begin());
                int next = order[(idx + order.size() - 1) % order.size()];
                e = next;
                fwd = edge(next).from == head;
            }
            faces.push_back(face);
        }
    }
    face_count_ = faces.size();
    long chi = static_cast<long>(vertices_.size()) - static_cast<long>(edges_.size()) + static_cast<long>(faces.size());
    if (chi != 2) throw GraphicError("rotation system is not planar: V - E + F = " + std::to_string(chi));

    std::map<std::vector<int>, std::size_t> signature;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        auto key = faces[f];
        std::sort(key.begin(), key.end());
        if (!signature.emplace(key, f).second) throw GraphicError("two faces have the same boundary");
    }
    std::vector<std::optional<int>> region_of_face(faces.size());
    std::vector<bool> matched(faces.size(), false);
    for (const auto& r : regions_) {
        auto key = r.boundary;
        std::sort(key.begin(), key.end());
        auto it = signature.find(key);
        if (it == signature.end())
            throw GraphicError("region " + std::to_string(r.id) + " does not match a face of the rotation system");
        matched[it->second] = true;
        region_of_face[it->second] = r.id;
    }
    if (faces.size() != regions_.size() + 1) throw GraphicError("regions do not cover the faces of the square");
    std::vector<int> outer;
    for (const auto& e : edges_)
        if (e.is_side()) outer.push_back(-e.id);
    std::sort(outer.begin(), outer.end());
    auto out = signature.find(outer);
    if (out == signature.end() || matched[out->second])
        throw GraphicError("the outer face is not bounded by the side segments");

    for (const auto& e : edges_) {
        left_[e.id] = region_of_face[face_of_forward.at(e.id)];
        right_[e.id] = region_of_face[face_of_backward.at(e.id)];
    }
}

const GraphicVertex& Graphic::vertex(int id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end()) throw GraphicError("unknown " + vid(id));
    return vertices_[it->second];
}

const GraphicEdge& Graphic::edge(int id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) throw GraphicError("unknown " + eid(id));
    return edges_[it->second];
}

const GraphicRegion& Graphic::region(int id) const {
    auto it = region_index_.find(id);
    if (it == region_index_.end()) throw GraphicError("unknown region " + std::to_string(id));
    return regions_[it->second];
}

std::optional<int> Graphic::left_region(int edge_id) const {
    edge(edge_id);
    return left_.at(edge_id);
}

std::optional<int> Graphic::right_region(int edge_id) const {
    edge(edge_id);
    return right_.at(edge_id);
}

std::vector<std::optional<int>> Graphic::sectors(int vertex_id) const {
    const auto& v = vertex(vertex_id);
    std::vector<std::optional<int>> out;
    for (int e : v.edge_order) out.push_back(edge(e).from == vertex_id ? left_.at(e) : right_.at(e));
    return out;
}

std::vector<SquareSide> Graphic::sides_of(int vertex_id) const {
    const auto& v = vertex(vertex_id);
    std::vector<SquareSide> out;
    if (v.t == 0) out.push_back(SquareSide::bottom);
    if (v.s == 1) out.push_back(SquareSide::right);
    if (v.t == 1) out.push_back(SquareSide::top);
    if (v.s == 0) out.push_back(SquareSide::left);
    return out;
}

SquareSide Graphic::side_of_edge(int edge_id) const {
    const auto& e = edge(edge_id);
    if (!e.is_side()) throw GraphicError(eid(edge_id) + " is not a side segment");
    auto a = sides_of(e.from);
    auto b = sides_of(e.to);
    for (SquareSide s : a)
        if (std::find(b.begin(), b.end(), s) != b.end()) return s;
    throw GraphicError(eid(edge_id) + " has no common side");
}

long Graphic::euler_characteristic() const {
    return static_cast<long>(vertices_.size()) - static_cast<long>(edges_.size()) + static_cast<long>(face_count_);
}

}  // namespace elliptic
