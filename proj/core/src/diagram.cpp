#include "elliptic/diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace elliptic {

namespace {

using DV = DiagramVertex;

using Simplex = std::vector<int>;

std::set<Simplex> faces_of(const Simplex& s) {
    std::set<Simplex> out;
    std::size_t n = s.size();
    for (unsigned mask = 1; mask < (1U << n); ++mask) {
        Simplex f;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1U << i)) f.push_back(s[i]);
        out.insert(f);
    }
    return out;
}

bool collapses_to_point(std::set<Simplex> complex) {
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& sigma : complex) {
            const Simplex* coface = nullptr;
            int count = 0;
            for (const auto& tau : complex) {
                if (tau.size() <= sigma.size()) continue;
                if (std::includes(tau.begin(), tau.end(), sigma.begin(), sigma.end())) {
                    ++count;
                    coface = &tau;
                }
            }
            if (count == 1 && coface->size() == sigma.size() + 1) {
                Simplex s = sigma;
                Simplex t = *coface;
                complex.erase(s);
                complex.erase(t);
                progress = true;
                break;
            }
        }
    }
    return complex.size() == 1;
}

std::vector<DV> cell_loop(const DualComplex& k, const DualCell2& c,
                          const std::vector<std::optional<DV>>& images, bool& complete) {
    std::vector<DV> loop;
    complete = true;
    for (const auto& oc : c.boundary) {
        auto img = images.at(static_cast<std::size_t>(k.start_of(oc)));
        if (!img) {
            complete = false;
            return {};
        }
        loop.push_back(*img);
    }
    return loop;
}

bool mapped(const DualCell1& c, const std::vector<std::optional<DV>>& images) {
    auto p = images.at(static_cast<std::size_t>(c.from));
    auto q = images.at(static_cast<std::size_t>(c.to));
    return p && q && DiagramTarget::spans_simplex({*p, *q});
}

}  // namespace

std::string to_string(DiagramVertex v) {
    switch (v) {
        case DV::Y: return "Y";
        case DV::BY: return "BY";
        case DV::B: return "B";
        case DV::BX: return "BX";
        case DV::X: return "X";
        case DV::AX: return "AX";
        case DV::A: return "A";
        case DV::AY: return "AY";
    }
    return "?";
}

int octant(DiagramVertex v) { return static_cast<int>(v); }

bool is_axis(DiagramVertex v) { return v == DV::A || v == DV::B || v == DV::X || v == DV::Y; }

const std::vector<std::vector<DiagramVertex>>& DiagramTarget::maximal_simplices() {
    static const std::vector<std::vector<DV>> simplices{
        {DV::AX, DV::A, DV::X},
        {DV::AY, DV::A, DV::Y},
        {DV::BY, DV::B, DV::Y},
        {DV::BX, DV::B, DV::X},
    };
    return simplices;
}

bool DiagramTarget::spans_simplex(const std::set<DiagramVertex>& vertices) {
    if (vertices.empty()) return false;
    if (vertices.size() == 1) return true;
    for (const auto& s : maximal_simplices()) {
        std::set<DV> full(s.begin(), s.end());
        if (std::includes(full.begin(), full.end(), vertices.begin(), vertices.end())) return true;
    }
    return false;
}

bool DiagramTarget::complement_collapses(DiagramVertex removed) {
    std::set<Simplex> complex;
    for (const auto& s : maximal_simplices()) {
        Simplex kept;
        for (DV v : s)
            if (v != removed) kept.push_back(octant(v));
        std::sort(kept.begin(), kept.end());
        auto f = faces_of(kept);
        complex.insert(f.begin(), f.end());
    }
    for (DV v : {DV::Y, DV::BY, DV::B, DV::BX, DV::X, DV::AX, DV::A, DV::AY})
        if (v != removed) complex.insert(Simplex{octant(v)});
    return collapses_to_point(std::move(complex));
}

std::optional<DiagramVertex> diagram_vertex_of(const Label& l) {
    bool a = l.has_class(LetterClass::a);
    bool b = l.has_class(LetterClass::b);
    bool x = l.has_class(LetterClass::x);
    bool y = l.has_class(LetterClass::y);
    if ((a && b) || (x && y)) return std::nullopt;
    if (a) return x ? DV::AX : y ? DV::AY : DV::A;
    if (b) return x ? DV::BX : y ? DV::BY : DV::B;
    if (x) return DV::X;
    if (y) return DV::Y;
    return std::nullopt;
}

DiagramVertex diagram_vertex_of(SquareSide s) {
    switch (s) {
        case SquareSide::bottom: return DV::A;
        case SquareSide::right: return DV::Y;
        case SquareSide::top: return DV::B;
        case SquareSide::left: return DV::X;
    }
    throw std::logic_error("unknown side");
}

long loop_winding(const std::vector<DiagramVertex>& loop) {
    long total = 0;
    for (std::size_t i = 0; i < loop.size(); ++i) {
        DV cur = loop[i];
        DV nxt = loop[(i + 1) % loop.size()];
        if (!DiagramTarget::spans_simplex({cur, nxt}))
            throw std::invalid_argument("loop step " + to_string(cur) + " -> " + to_string(nxt) + " is not a simplex");
        int d = ((octant(nxt) - octant(cur)) % 8 + 8) % 8;
        if (d > 4) d -= 8;
        total += d;
    }
    if (total % 8 != 0) throw std::logic_error("loop winding is not an integer");
    return total / 8;
}

std::vector<std::optional<DiagramVertex>> zero_cell_images(const DualComplex& k, const Graphic& g) {
    std::vector<std::optional<DV>> images;
    for (const auto& c : k.cells0) {
        if (c.where == DualCell0::Where::side) images.push_back(diagram_vertex_of(c.side));
        else images.push_back(diagram_vertex_of(g.region(c.region).label));
    }
    return images;
}

std::vector<DiagramVertex> boundary_image(const DualComplex& k) {
    std::vector<DV> loop;
    for (const auto& oc : k.boundary_loop) {
        const auto& z = k.cells0.at(static_cast<std::size_t>(k.start_of(oc)));
        if (z.where != DualCell0::Where::side) throw std::logic_error("boundary loop leaves the sides of I^2");
        loop.push_back(diagram_vertex_of(z.side));
    }
    return loop;
}

long boundary_degree(const DualComplex& k) { return loop_winding(boundary_image(k)); }

std::optional<long> interior_winding_sum(const DualComplex& k, const Graphic& g) {
    auto images = zero_cell_images(k, g);
    for (const auto& c : k.cells1)
        if (!mapped(c, images)) return std::nullopt;
    long total = 0;
    for (const auto& c : k.cells2) {
        bool complete = false;
        auto loop = cell_loop(k, c, images, complete);
        if (!complete) return std::nullopt;
        total += loop_winding(loop);
    }
    return total;
}

ObstructionReport diagram_map(const DualComplex& k, const Graphic& g) {
    ObstructionReport report{GoodRegionsFound{}, boundary_degree(k)};

    std::vector<int> unlabeled;
    for (const auto& r : g.regions())
        if (r.label.empty()) unlabeled.push_back(r.id);
    if (!unlabeled.empty()) {
        std::sort(unlabeled.begin(), unlabeled.end());
        report.verdict = GoodRegionsFound{unlabeled};
        return report;
    }

    auto images = zero_cell_images(k, g);
    RulePreconditionFailed pre;
    std::vector<ExtensionObstructed> obstructed;
    std::set<int> unmapped;

    std::set<int> ineligible_edges;
    for (const auto& c : k.cells1) {
        bool ineligible = c.kind == DualCell1::Kind::crossing && !g.edge(c.graphic_edge).rs2_eligible();
        // Across an edge RS2 does not cover, distinct labels are already a gap in the rules.
        if (ineligible) {
            const auto& from = k.cells0.at(static_cast<std::size_t>(c.from));
            const auto& to = k.cells0.at(static_cast<std::size_t>(c.to));
            if (g.region(from.region).label != g.region(to.region).label) ineligible_edges.insert(c.graphic_edge);
        }
        if (mapped(c, images)) continue;
        unmapped.insert(c.id);
        std::vector<DV> hit;
        for (int end : {c.from, c.to})
            if (auto img = images.at(static_cast<std::size_t>(end))) hit.push_back(*img);
        if (ineligible) ineligible_edges.insert(c.graphic_edge);
        else obstructed.push_back({1, c.id, hit, 1});
    }
    pre.edges.assign(ineligible_edges.begin(), ineligible_edges.end());

    ContradictionCertified cert{report.boundary_degree, {}};
    for (const auto& c : k.cells2) {
        bool touches_unmapped = std::any_of(c.boundary.begin(), c.boundary.end(),
                                            [&](const OrientedCell& oc) { return unmapped.count(oc.cell) > 0; });
        if (touches_unmapped) continue;
        bool complete = false;
        auto loop = cell_loop(k, c, images, complete);
        if (!complete) continue;
        std::set<DV> seen(loop.begin(), loop.end());
        std::optional<DV> avoided;
        for (DV axis : kAxisVertices)
            if (!seen.count(axis)) {
                avoided = axis;
                break;
            }
        if (avoided) {
            cert.witnesses.push_back({c.id, *avoided});
            continue;
        }
        std::vector<DV> hit(std::begin(kAxisVertices), std::end(kAxisVertices));
        if (g.vertex(c.graphic_vertex).kind == VertexKind::interior_valence4) obstructed.push_back({2, c.id, hit, 1});
        else pre.vertices.push_back(c.graphic_vertex);
    }

    if (!pre.edges.empty() || !pre.vertices.empty()) {
        std::sort(pre.edges.begin(), pre.edges.end());
        std::sort(pre.vertices.begin(), pre.vertices.end());
        report.verdict = pre;
    } else if (!obstructed.empty()) {
        ExtensionObstructed first = obstructed.front();
        first.total = obstructed.size();
        report.verdict = first;
    } else {
        report.verdict = cert;
    }
    return report;
}

bool recheck_certificate(const ContradictionCertified& c, const DualComplex& k, const Graphic& g) {
    if (boundary_degree(k) != c.boundary_degree || c.boundary_degree == 0) return false;
    auto images = zero_cell_images(k, g);
    for (const auto& cell : k.cells1)
        if (!mapped(cell, images)) return false;
    if (c.witnesses.size() != k.cells2.size()) return false;
    std::set<int> covered;
    for (const auto& w : c.witnesses) {
        if (w.cell < 0 || static_cast<std::size_t>(w.cell) >= k.cells2.size() || !is_axis(w.avoided)) return false;
        if (!covered.insert(w.cell).second) return false;
        bool complete = false;
        auto loop = cell_loop(k, k.cells2[static_cast<std::size_t>(w.cell)], images, complete);
        if (!complete || std::find(loop.begin(), loop.end(), w.avoided) != loop.end()) return false;
    }
    return true;
}

std::string ObstructionReport::verdict_name() const {
    switch (verdict.index()) {
        case 0: return "GoodRegionsFound";
        case 1: return "ContradictionCertified";
        case 2: return "RulePreconditionFailed";
        default: return "ExtensionObstructed";
    }
}

std::string ObstructionReport::summary() const {
    std::ostringstream os;
    auto list = [&](const std::vector<int>& xs) {
        if (xs.empty()) os << "none";
        for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
    };
    os << verdict_name() << ": ";
    if (const auto* good = std::get_if<GoodRegionsFound>(&verdict)) {
        os << good->regions.size() << (good->regions.size() == 1 ? " region" : " regions") << "\n";
        os << "unlabeled regions: ";
        list(good->regions);
        os << "\n";
    } else if (const auto* cert = std::get_if<ContradictionCertified>(&verdict)) {
        os << "boundary degree " << cert->boundary_degree << "\n";
        for (const auto& w : cert->witnesses) os << "2-cell " << w.cell << " avoids " << to_string(w.avoided) << "\n";
    } else if (const auto* pre = std::get_if<RulePreconditionFailed>(&verdict)) {
        os << pre->edges.size() << " edges, " << pre->vertices.size() << " vertices\n";
        os << "ineligible edges: ";
        list(pre->edges);
        os << "\nvertices outside RS3: ";
        list(pre->vertices);
        os << "\n";
    } else if (const auto* ext = std::get_if<ExtensionObstructed>(&verdict)) {
        os << ext->dimension << "-cell " << ext->cell << " hits";
        for (DV v : ext->hit) os << " " << to_string(v);
        os << " (" << ext->total << " obstructed cells)\n";
    }
    os << "boundary degree: " << boundary_degree << "\n";
    return os.str();
}

}  // namespace elliptic
