#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "elliptic/dual_complex.hpp"
#include "elliptic/graphic.hpp"

namespace elliptic {

// Vertices of the Diagram in counterclockwise order around its center; the
// value is the octant used for winding numbers.
enum class DiagramVertex { Y, BY, B, BX, X, AX, A, AY };

std::string to_string(DiagramVertex v);
int octant(DiagramVertex v);
bool is_axis(DiagramVertex v);
constexpr DiagramVertex kAxisVertices[] = {DiagramVertex::A, DiagramVertex::X, DiagramVertex::B, DiagramVertex::Y};

// The target complex: eight boundary edges, the diagonal circle A-Y-B-X-A,
// and the four triangles at the corners.
class DiagramTarget {
public:
    static const std::vector<std::vector<DiagramVertex>>& maximal_simplices();
    static bool spans_simplex(const std::set<DiagramVertex>& vertices);
    // The full subcomplex on the other seven vertices collapses to a point.
    static bool complement_collapses(DiagramVertex removed);
};

// Labels with letters from one class of {a, b} and at most one of {x, y}.
std::optional<DiagramVertex> diagram_vertex_of(const Label& l);
DiagramVertex diagram_vertex_of(SquareSide s);

// Winding number of a closed edge path around the center of the Diagram.
// Consecutive vertices must span a simplex.
long loop_winding(const std::vector<DiagramVertex>& loop);

std::vector<std::optional<DiagramVertex>> zero_cell_images(const DualComplex& k, const Graphic& g);
std::vector<DiagramVertex> boundary_image(const DualComplex& k);
long boundary_degree(const DualComplex& k);

// Sum of the winding numbers of the 2-cell boundaries; nullopt if some 1-cell
// does not map to a simplex.
std::optional<long> interior_winding_sum(const DualComplex& k, const Graphic& g);

struct GoodRegionsFound {
    std::vector<int> regions;
};

struct AvoidedVertex {
    int cell = 0;
    DiagramVertex avoided = DiagramVertex::A;
};

struct ContradictionCertified {
    long boundary_degree = 0;
    std::vector<AvoidedVertex> witnesses;  // one per 2-cell
};

struct RulePreconditionFailed {
    std::vector<int> edges;
    std::vector<int> vertices;
};

struct ExtensionObstructed {
    int dimension = 1;
    int cell = 0;
    std::vector<DiagramVertex> hit;
    std::size_t total = 1;  // number of obstructed cells
};

using Verdict = std::variant<GoodRegionsFound, ContradictionCertified, RulePreconditionFailed, ExtensionObstructed>;

struct ObstructionReport {
    Verdict verdict;
    long boundary_degree = 0;

    std::string verdict_name() const;
    std::string summary() const;
};

ObstructionReport diagram_map(const DualComplex& k, const Graphic& g);

// Recomputes the boundary degree, the 1-cell images and each witness.
bool recheck_certificate(const ContradictionCertified& c, const DualComplex& k, const Graphic& g);

}  // namespace elliptic
