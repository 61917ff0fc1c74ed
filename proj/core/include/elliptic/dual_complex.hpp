#pragma once

#include <string>
#include <vector>

#include "elliptic/graphic.hpp"

namespace elliptic {

struct DualCell0 {
    enum class Where { region, side };
    int id = 0;
    Where where = Where::region;
    int region = 0;     // when in a region
    int side_edge = 0;  // when on a side segment
    SquareSide side = SquareSide::bottom;
};

struct DualCell1 {
    enum class Kind {
        crossing,   // crosses one edge of the graphic, left region to right region
        side_link,  // side 0-cell to the region along that side segment
        boundary,   // runs along a side of I^2 past a boundary vertex
    };
    int id = 0;
    Kind kind = Kind::crossing;
    int from = 0;
    int to = 0;
    int graphic_edge = 0;    // crossing and side_link
    int graphic_vertex = 0;  // boundary
};

struct OrientedCell {
    int cell = 0;
    bool forward = true;
    bool operator==(const OrientedCell&) const = default;
};

// One 2-cell per vertex of the graphic, corners included; the boundary runs
// counterclockwise around the vertex.
struct DualCell2 {
    int id = 0;
    int graphic_vertex = 0;
    std::vector<OrientedCell> boundary;
};

class DualComplex {
public:
    std::vector<DualCell0> cells0;
    std::vector<DualCell1> cells1;
    std::vector<DualCell2> cells2;

    // Boundary 1-cells counterclockwise around I^2, starting at the corner (0, 0).
    std::vector<OrientedCell> boundary_loop;

    long euler_characteristic() const {
        return static_cast<long>(cells0.size()) - static_cast<long>(cells1.size()) + static_cast<long>(cells2.size());
    }
    int start_of(const OrientedCell& c) const;
    int end_of(const OrientedCell& c) const;
};

DualComplex build_dual(const Graphic& g);

struct DualAudit {
    bool k1 = true;
    bool k2 = true;
    bool k3 = true;
    bool closed_boundaries = true;
    bool incidences = true;
    bool disk = true;  // chi = 1
    std::vector<std::string> problems;
    bool ok() const { return k1 && k2 && k3 && closed_boundaries && incidences && disk; }
};

// Independent audit that works from the declared region boundaries rather
// than the rotation system.
DualAudit audit_dual(const DualComplex& k, const Graphic& g);

}  // namespace elliptic
