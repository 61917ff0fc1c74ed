#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "elliptic/label.hpp"
#include "elliptic/quaternion_groups.hpp"

namespace elliptic {

class GraphicError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class VertexKind {
    interior_valence4,
    interior_birth_death,
    interior_high_order,
    boundary_valence1,
    boundary_valence2,
    corner,
};

// `boundary` marks the segments of the square's sides, which the graphic
// carries as explicit edges so that every region is a face of the planar map.
enum class Tangency { stable_center, stable_saddle, birth_death, other, boundary };

std::string to_string(VertexKind k);
std::string to_string(Tangency t);
std::optional<VertexKind> parse_vertex_kind(const std::string& s);
std::optional<Tangency> parse_tangency(const std::string& s);

bool is_boundary_kind(VertexKind k);

// Sides of I^2 in counterclockwise order.
enum class SquareSide { bottom, right, top, left };
std::string to_string(SquareSide s);

struct GraphicVertex {
    int id = 0;
    Rational s;
    Rational t;
    VertexKind kind = VertexKind::interior_valence4;
    std::vector<int> edge_order;  // counterclockwise

    bool operator==(const GraphicVertex&) const = default;
};

struct GraphicEdge {
    int id = 0;
    int from = 0;
    int to = 0;
    std::vector<Tangency> tangencies;

    bool is_side() const;
    // Exactly one stable tangency.
    bool rs2_eligible() const;
    bool operator==(const GraphicEdge&) const = default;
};

// Boundary: signed edge ids (+e traverses e from `from` to `to`) with the
// region on the left.
struct GraphicRegion {
    int id = 0;
    std::vector<int> boundary;
    Label label;

    bool operator==(const GraphicRegion&) const = default;
};

// Labeled planar map on I^2. Construction validates the rotation system, the
// square's boundary, and Euler's formula; the object is immutable afterwards.
class Graphic {
public:
    Graphic(std::vector<GraphicVertex> vertices, std::vector<GraphicEdge> edges, std::vector<GraphicRegion> regions);

    const std::vector<GraphicVertex>& vertices() const { return vertices_; }
    const std::vector<GraphicEdge>& edges() const { return edges_; }
    const std::vector<GraphicRegion>& regions() const { return regions_; }

    const GraphicVertex& vertex(int id) const;
    const GraphicEdge& edge(int id) const;
    const GraphicRegion& region(int id) const;

    // Region on each side of an edge; nullopt is the outside of the square.
    std::optional<int> left_region(int edge_id) const;
    std::optional<int> right_region(int edge_id) const;

    // Sector i at a vertex lies between edge_order[i] and edge_order[i + 1].
    std::vector<std::optional<int>> sectors(int vertex_id) const;

    std::vector<SquareSide> sides_of(int vertex_id) const;
    SquareSide side_of_edge(int edge_id) const;

    // Boundary vertices in counterclockwise order starting at the corner (0, 0).
    const std::vector<int>& perimeter() const { return perimeter_; }

    std::size_t face_count() const { return face_count_; }
    long euler_characteristic() const;

    bool operator==(const Graphic& other) const {
        return vertices_ == other.vertices_ && edges_ == other.edges_ && regions_ == other.regions_;
    }

private:
    void validate_ids();
    void validate_vertices();
    void validate_edges();
    void validate_perimeter();
    void trace_faces();

    std::vector<GraphicVertex> vertices_;
    std::vector<GraphicEdge> edges_;
    std::vector<GraphicRegion> regions_;
    std::map<int, std::size_t> vertex_index_;
    std::map<int, std::size_t> edge_index_;
    std::map<int, std::size_t> region_index_;
    std::map<int, std::optional<int>> left_;
    std::map<int, std::optional<int>> right_;
    std::vector<int> perimeter_;
    std::size_t face_count_ = 0;
};

}  // namespace elliptic
