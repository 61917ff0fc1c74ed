#include "elliptic/graphic_checks.hpp"

#include <algorithm>
#include <set>

namespace elliptic {

namespace {

using LC = LetterClass;

std::string rid(int id) { return "region " + std::to_string(id); }

struct Extent {
    Rational min_s{1}, max_s{0}, min_t{1}, max_t{0};
};

Extent extent_of(const Graphic& g, const GraphicRegion& r) {
    Extent x;
    for (int signed_edge : r.boundary) {
        const auto& e = g.edge(signed_edge < 0 ? -signed_edge : signed_edge);
        for (int vid : {e.from, e.to}) {
            const auto& v = g.vertex(vid);
            x.min_s = std::min(x.min_s, v.s);
            x.max_s = std::max(x.max_s, v.s);
            x.min_t = std::min(x.min_t, v.t);
            x.max_t = std::max(x.max_t, v.t);
        }
    }
    return x;
}

}  // namespace

bool labels_opposed(const Label& p, const Label& q) {
    auto cross = [&](LC u, LC v) {
        return (p.has_class(u) && q.has_class(v)) || (p.has_class(v) && q.has_class(u));
    };
    return cross(LC::a, LC::b) || cross(LC::x, LC::y);
}

bool violates_rs1(const Label& l) {
    return (l.has_class(LC::a) && l.has_class(LC::b)) || (l.has_class(LC::x) && l.has_class(LC::y));
}

CheckReport validate_labels(const Graphic& g, bool strong_irreducible) {
    CheckReport report;
    for (const auto& r : g.regions()) {
        const Label& l = r.label;
        if (strong_irreducible && violates_rs1(l))
            report.violations.push_back({"RS1", {r.id}, {}, {}, rid(r.id) + " label " + l.to_string() + " is opposed"});
        bool small_ab = l.has(Letter::a) || l.has(Letter::b);
        bool small_xy = l.has(Letter::x) || l.has(Letter::y);
        if (small_ab != small_xy)
            report.violations.push_back(
                {"lone-small-letter", {r.id}, {}, {}, rid(r.id) + " label " + l.to_string() + " has a lone small letter"});
    }
    return report;
}

CheckReport check_border_labels(const Graphic& g, const Rational& eps, BorderMode mode) {
    if (eps <= 0 || eps >= Rational(1, 2)) throw GraphicError("eps must lie in (0, 1/2)");
    CheckReport report;
    struct Band {
        const char* name;
        Letter capital;
        bool (*meets)(const Extent&, const Rational&);
    };
    static const Band bands[] = {
        {"t<=eps", Letter::A, [](const Extent& x, const Rational& e) { return x.min_t < e; }},
        {"t>=1-eps", Letter::B, [](const Extent& x, const Rational& e) { return x.max_t > 1 - e; }},
        {"s<=eps", Letter::X, [](const Extent& x, const Rational& e) { return x.min_s < e; }},
        {"s>=1-eps", Letter::Y, [](const Extent& x, const Rational& e) { return x.max_s > 1 - e; }},
    };
    for (const auto& r : g.regions()) {
        Extent x = extent_of(g, r);
        for (const auto& band : bands) {
            if (!band.meets(x, eps)) continue;
            bool ok = mode == BorderMode::capital_only ? r.label.has(band.capital)
                                                       : r.label.has_class(class_of(band.capital));
            if (!ok)
                report.violations.push_back({"border", {r.id}, {}, {},
                                             rid(r.id) + " meets band " + band.name + " but its label '" +
                                                 r.label.to_string() + "' lacks " + to_char(band.capital)});
        }
    }
    return report;
}

CheckReport check_rs2(const Graphic& g) {
    CheckReport report;
    for (const auto& e : g.edges()) {
        if (e.is_side()) continue;
        int l = *g.left_region(e.id);
        int r = *g.right_region(e.id);
        bool opposed = labels_opposed(g.region(l).label, g.region(r).label);
        std::string across = rid(l) + " '" + g.region(l).label.to_string() + "' | " + rid(r) + " '" +
                             g.region(r).label.to_string() + "'";
        if (!e.rs2_eligible()) {
            report.precondition_failures.push_back(
                {"RS2", {l, r}, {e.id}, {},
                 "edge " + std::to_string(e.id) + " is not a single stable tangency" +
                     (opposed ? "; opposed labels across it: " : "; across it: ") + across});
        } else if (opposed) {
            report.violations.push_back({"RS2", {l, r}, {e.id}, {}, "opposed labels across edge " + std::to_string(e.id) + ": " + across});
        }
    }
    return report;
}

CheckReport check_rs3(const Graphic& g) {
    CheckReport report;
    for (const auto& v : g.vertices()) {
        if (is_boundary_kind(v.kind)) continue;
        if (v.kind != VertexKind::interior_valence4) {
            report.out_of_scope.push_back({"RS3", {}, {}, {v.id},
                                           "vertex " + std::to_string(v.id) + " (" + to_string(v.kind) + ") is not a valence-4 crossing"});
            continue;
        }
        auto sec = g.sectors(v.id);
        std::vector<Label> labels;
        std::set<int> regions;
        for (const auto& s : sec) {
            labels.push_back(g.region(*s).label);
            regions.insert(*s);
        }
        bool all = true;
        for (LC c : {LC::a, LC::b, LC::x, LC::y})
            all = all && std::any_of(labels.begin(), labels.end(), [&](const Label& l) { return l.has_class(c); });
        if (!all) continue;
        bool opposite_empty = (labels[0].empty() && labels[2].empty()) || (labels[1].empty() && labels[3].empty());
        if (!opposite_empty)
            report.violations.push_back({"RS3", std::vector<int>(regions.begin(), regions.end()), {}, {v.id},
                                         "vertex " + std::to_string(v.id) + " sees all four letters without two opposite unlabeled regions"});
    }
    return report;
}

}  // namespace elliptic
