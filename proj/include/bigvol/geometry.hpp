#pragma once

#include <vector>

#include "bigvol/quadnum.hpp"

namespace bigvol {

struct QPoint {
    QuadNum x, y;
    friend bool operator==(const QPoint& l, const QPoint& r) { return l.x == r.x && l.y == r.y; }
};

// Convex polygon, vertices in counterclockwise order. Degenerate polygons
// (empty, a point, a segment) are allowed and carry zero area.
using Polygon = std::vector<QPoint>;

// Closed half-plane a*x + b*y + c >= 0.
struct HalfPlane {
    QuadNum a, b, c;
    QuadNum eval(const QPoint& p) const { return a * p.x + b * p.y + c; }
};

QuadNum cross(const QPoint& o, const QPoint& p, const QPoint& q);

// Twice the signed area (positive for CCW order).
QuadNum polygon_area2(const Polygon& poly);

// Removes consecutive duplicates and collinear middle vertices, then rotates
// so the lexicographically smallest vertex comes first. Keeps orientation.
Polygon canonical_polygon(Polygon poly);

// Sutherland-Hodgman clip against one half-plane. Input and output CCW.
Polygon clip(const Polygon& poly, const HalfPlane& h);

bool polygon_contains(const Polygon& poly, const QPoint& p);

// Convex hull (monotone chain), CCW, collinear points dropped.
Polygon convex_hull(std::vector<QPoint> pts);

}  // namespace bigvol
