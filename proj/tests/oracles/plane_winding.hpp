#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace oracle {

// Diagram vertices placed on the unit circle: Y east, B north, X west, A
// south, the mixed vertices on the diagonals between them.
inline std::optional<double> diagram_angle(const std::string& label) {
    bool a = false, b = false, x = false, y = false;
    for (char c : label) {
        switch (c) {
            case 'A': case 'a': a = true; break;
            case 'B': case 'b': b = true; break;
            case 'X': case 'x': x = true; break;
            case 'Y': case 'y': y = true; break;
            default: return std::nullopt;
        }
    }
    if ((a && b) || (x && y) || !(a || b || x || y)) return std::nullopt;
    double deg = 0;
    if (a && !x && !y) deg = 270;
    else if (b && !x && !y) deg = 90;
    else if (x && !a && !b) deg = 180;
    else if (y && !a && !b) deg = 0;
    else if (a && x) deg = 225;
    else if (a && y) deg = 315;
    else if (b && x) deg = 135;
    else deg = 45;
    return deg * std::numbers::pi / 180;
}

// Winding number of the closed polygon through the given angles on the
// unit circle around the origin.
inline double winding(const std::vector<double>& angles) {
    double total = 0;
    for (std::size_t i = 0; i < angles.size(); ++i) {
        double a0 = angles[i], a1 = angles[(i + 1) % angles.size()];
        double d = std::remainder(a1 - a0, 2 * std::numbers::pi);
        total += d;
    }
    return total / (2 * std::numbers::pi);
}

}  // namespace oracle
