#pragma once

#include <string>
#include <vector>

#include "elliptic/graphic.hpp"

namespace elliptic {

struct PlanarPoint {
    int id = 0;
    Rational s;
    Rational t;
    VertexKind kind = VertexKind::interior_valence4;
};

struct PlanarSegment {
    int id = 0;
    int from = 0;
    int to = 0;
    std::vector<Tangency> tangencies;
};

// A point strictly inside a region together with the region's label.
struct LabelSeed {
    Rational s;
    Rational t;
    std::string label;
};

// Builds a graphic drawn with straight segments. Side segments are added
// between consecutive boundary points, rotations come from the geometry, and
// each face takes the label of the seed it contains (none leaves it unlabeled).
Graphic build_planar_graphic(const std::vector<PlanarPoint>& points, const std::vector<PlanarSegment>& segments,
                             const std::vector<LabelSeed>& seeds);

// "morse", "collapsed", "star", "trivial".
Graphic builtin_graphic(const std::string& name);
std::vector<std::string> builtin_graphic_names();

// The Morse-position picture: four diagonals meeting the sides at lo and
// 1 - lo, with every corner cut off along a stable-center arc at corner_cut.
// Requires 0 < corner_cut < lo < 1/2.
Graphic morse_graphic(const Rational& lo, const Rational& corner_cut);

}  // namespace elliptic
