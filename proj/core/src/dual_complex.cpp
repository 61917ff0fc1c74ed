#include "elliptic/dual_complex.hpp"

#include <map>
#include <set>

namespace elliptic {

int DualComplex::start_of(const OrientedCell& c) const {
    const auto& e = cells1.at(static_cast<std::size_t>(c.cell));
    return c.forward ? e.from : e.to;
}

int DualComplex::end_of(const OrientedCell& c) const {
    const auto& e = cells1.at(static_cast<std::size_t>(c.cell));
    return c.forward ? e.to : e.from;
}

DualComplex build_dual(const Graphic& g) {
    DualComplex k;
    std::map<int, int> region_cell, side_cell, edge_cell, vertex_cell;

    for (const auto& r : g.regions()) {
        int id = static_cast<int>(k.cells0.size());
        k.cells0.push_back({id, DualCell0::Where::region, r.id, 0, SquareSide::bottom});
        region_cell[r.id] = id;
    }
    for (const auto& e : g.edges()) {
        if (!e.is_side()) continue;
        int id = static_cast<int>(k.cells0.size());
        k.cells0.push_back({id, DualCell0::Where::side, 0, e.id, g.side_of_edge(e.id)});
        side_cell[e.id] = id;
    }

    for (const auto& e : g.edges()) {
        int id = static_cast<int>(k.cells1.size());
        if (e.is_side()) {
            k.cells1.push_back({id, DualCell1::Kind::side_link, side_cell.at(e.id), region_cell.at(*g.left_region(e.id)), e.id, 0});
        } else {
            k.cells1.push_back({id, DualCell1::Kind::crossing, region_cell.at(*g.left_region(e.id)),
                                region_cell.at(*g.right_region(e.id)), e.id, 0});
        }
        edge_cell[e.id] = id;
    }

    // Side segments leaving and entering each boundary vertex.
    std::map<int, int> next_side, prev_side;
    for (const auto& e : g.edges()) {
        if (!e.is_side()) continue;
        next_side[e.from] = e.id;
        prev_side[e.to] = e.id;
    }
    for (int v : g.perimeter()) {
        int id = static_cast<int>(k.cells1.size());
        k.cells1.push_back({id, DualCell1::Kind::boundary, side_cell.at(prev_side.at(v)), side_cell.at(next_side.at(v)), 0, v});
        vertex_cell[v] = id;
        k.boundary_loop.push_back({id, true});
    }

    for (const auto& v : g.vertices()) {
        DualCell2 cell;
        cell.id = static_cast<int>(k.cells2.size());
        cell.graphic_vertex = v.id;
        auto sectors = g.sectors(v.id);
        std::size_t d = v.edge_order.size();
        for (std::size_t i = 0; i < d; ++i) {
            const auto& e = g.edge(v.edge_order[i]);
            bool outgoing_forward = e.from == v.id;
            if (e.is_side()) {
                // side_link runs from the outside toward the region.
                bool from_outside = !sectors[(i + d - 1) % d].has_value();
                cell.boundary.push_back({edge_cell.at(e.id), from_outside});
            } else {
                // Sector i - 1 is right of the outgoing edge, sector i is left of it.
                cell.boundary.push_back({edge_cell.at(e.id), !outgoing_forward});
            }
            if (!sectors[i]) {
                int next_edge = v.edge_order[(i + 1) % d];
                bool forward = next_edge == next_side.at(v.id);
                cell.boundary.push_back({vertex_cell.at(v.id), forward});
            }
        }
        k.cells2.push_back(std::move(cell));
    }
    return k;
}

DualAudit audit_dual(const DualComplex& k, const Graphic& g) {
    DualAudit a;
    auto fail = [&](bool& flag, const std::string& why) {
        flag = false;
        a.problems.push_back(why);
    };

    // Regions on each side of an edge, read from the declared boundaries.
    std::map<int, std::set<int>> regions_of_edge;
    std::map<int, std::set<int>> regions_at_vertex;
    std::map<int, int> region_with_positive;
    for (const auto& r : g.regions()) {
        for (int s : r.boundary) {
            int e = s < 0 ? -s : s;
            regions_of_edge[e].insert(r.id);
            if (s > 0) region_with_positive[e] = r.id;
            regions_at_vertex[g.edge(e).from].insert(r.id);
            regions_at_vertex[g.edge(e).to].insert(r.id);
        }
    }

    // K1
    for (const auto& c : k.cells0) {
        if (c.where == DualCell0::Where::region) {
            bool known = false;
            for (const auto& r : g.regions()) known = known || r.id == c.region;
            if (!known) fail(a.k1, "0-cell " + std::to_string(c.id) + " names an unknown region");
        } else if (!g.edge(c.side_edge).is_side()) {
            fail(a.k1, "0-cell " + std::to_string(c.id) + " is not on a side of I^2");
        }
    }

    // K2
    auto region_of = [&](int cell) -> std::optional<int> {
        const auto& c = k.cells0.at(static_cast<std::size_t>(cell));
        if (c.where == DualCell0::Where::region) return c.region;
        return std::nullopt;
    };
    for (const auto& c : k.cells1) {
        std::string name = "1-cell " + std::to_string(c.id);
        switch (c.kind) {
            case DualCell1::Kind::crossing: {
                auto p = region_of(c.from);
                auto q = region_of(c.to);
                if (!p || !q || g.edge(c.graphic_edge).is_side()) {
                    fail(a.k2, name + " does not join two regions across an edge of the graphic");
                    break;
                }
                std::set<int> ends{*p, *q};
                if (ends != regions_of_edge[c.graphic_edge] || *p == *q)
                    fail(a.k2, name + " does not cross edge " + std::to_string(c.graphic_edge) + " between its two regions");
                break;
            }
            case DualCell1::Kind::side_link: {
                const auto& s = k.cells0.at(static_cast<std::size_t>(c.from));
                auto q = region_of(c.to);
                if (s.where != DualCell0::Where::side || s.side_edge != c.graphic_edge || !q ||
                    region_with_positive[c.graphic_edge] != *q)
                    fail(a.k2, name + " does not link side segment " + std::to_string(c.graphic_edge) + " to its region");
                break;
            }
            case DualCell1::Kind::boundary: {
                const auto& p = k.cells0.at(static_cast<std::size_t>(c.from));
                const auto& q = k.cells0.at(static_cast<std::size_t>(c.to));
                bool ok = p.where == DualCell0::Where::side && q.where == DualCell0::Where::side &&
                          g.edge(p.side_edge).to == c.graphic_vertex && g.edge(q.side_edge).from == c.graphic_vertex;
                if (!ok) fail(a.k2, name + " does not run along the boundary past vertex " + std::to_string(c.graphic_vertex));
                break;
            }
        }
    }

    // Closed boundaries, K3, incidences.
    std::map<int, std::vector<bool>> uses;
    for (const auto& c : k.cells2) {
        std::string name = "2-cell " + std::to_string(c.id);
        if (c.boundary.empty()) {
            fail(a.closed_boundaries, name + " has an empty boundary");
            continue;
        }
        for (std::size_t i = 0; i < c.boundary.size(); ++i) {
            const auto& cur = c.boundary[i];
            const auto& nxt = c.boundary[(i + 1) % c.boundary.size()];
            if (k.end_of(cur) != k.start_of(nxt)) fail(a.closed_boundaries, name + " boundary is not a closed walk");
            uses[cur.cell].push_back(cur.forward);
        }
        const auto& v = g.vertex(c.graphic_vertex);
        const auto& adjacent = regions_at_vertex[v.id];
        for (const auto& oc : c.boundary) {
            for (int end : {k.start_of(oc), k.end_of(oc)}) {
                const auto& z = k.cells0.at(static_cast<std::size_t>(end));
                if (z.where == DualCell0::Where::region && !adjacent.count(z.region))
                    fail(a.k3, name + " reaches region " + std::to_string(z.region) + " which does not touch vertex " + std::to_string(v.id));
                if (z.where == DualCell0::Where::side) {
                    const auto& se = g.edge(z.side_edge);
                    if (se.from != v.id && se.to != v.id)
                        fail(a.k3, name + " reaches a side segment away from vertex " + std::to_string(v.id));
                }
            }
        }
    }
    for (const auto& c : k.cells1) {
        const auto& u = uses[c.id];
        bool ok = c.kind == DualCell1::Kind::boundary ? u.size() == 1
                                                      : (u.size() == 2 && u[0] != u[1]);
        if (!ok) fail(a.incidences, "1-cell " + std::to_string(c.id) + " has the wrong 2-cell incidences");
    }
    for (std::size_t i = 0; i < k.boundary_loop.size(); ++i) {
        const auto& cur = k.boundary_loop[i];
        const auto& nxt = k.boundary_loop[(i + 1) % k.boundary_loop.size()];
        if (k.end_of(cur) != k.start_of(nxt)) fail(a.closed_boundaries, "the boundary loop is not closed");
    }
    if (k.euler_characteristic() != 1)
        fail(a.disk, "Euler characteristic is " + std::to_string(k.euler_characteristic()) + ", not 1");
    return a;
}

}  // namespace elliptic
