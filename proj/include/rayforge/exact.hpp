#pragma once

// Exact integer/rational 2-D primitives and predicates.  Everything here is
// computed with arbitrary-precision arithmetic and is the ground truth for
// the final verification; there are no floating-point fast paths.

#include <gmpxx.h>

#include <optional>
#include <utility>

#include "rayforge/errors.hpp"

namespace rayforge {

using Int = mpz_class;
using Rat = mpq_class;

struct IntPoint {
    Int x, y;

    bool operator==(const IntPoint& o) const { return x == o.x && y == o.y; }
    bool operator!=(const IntPoint& o) const { return !(*this == o); }
};

struct RatPoint {
    Rat x, y;  // kept in canonical (reduced, positive-denominator) form

    RatPoint() = default;
    RatPoint(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {
        x.canonicalize();
        y.canonicalize();
    }
    explicit RatPoint(const IntPoint& p) : x(p.x), y(p.y) {}

    bool operator==(const RatPoint& o) const { return x == o.x && y == o.y; }
};

// Nonzero integer vector, reduced by gcd.  Orientation is preserved: a ray
// pointing (-2,0) is stored as (-1,0).  Lines, for which the sign carries no
// meaning, use the axis-canonical form (dx>0, or dx=0 and dy>0) so that line
// equality is syntactic.
struct Direction {
    Int dx, dy;

    Direction(Int x, Int y);                 // gcd-reduced, orientation kept
    Direction axis_canonical() const;        // sign-normalized copy
    Direction reversed() const { return Direction(-dx, -dy); }

    bool operator==(const Direction& o) const { return dx == o.dx && dy == o.dy; }
};

// Open ray {origin + t*dir : t > 0}; the origin itself is excluded.
struct OpenRay {
    IntPoint origin;
    Direction dir;
};

// Full line through anchor with direction dir; used only inside scenes and
// converted to an OpenRay before export.
struct Line {
    IntPoint anchor;
    Direction dir;
};

int sign(const Int& v);
int sign(const Rat& v);

// +1 iff c lies strictly left of the directed line a->b, 0 iff collinear.
int orientation(const IntPoint& a, const IntPoint& b, const IntPoint& c);
int orientation(const RatPoint& a, const RatPoint& b, const RatPoint& c);

// Exact: true iff the two open point sets share a point.  Handles parallel,
// collinear-overlapping and shared-supporting-line cases.
bool ray_ray_intersect(const OpenRay& r1, const OpenRay& r2);

struct LineMeet {
    std::optional<RatPoint> point;  // empty when parallel
    bool coincident = false;        // parallel and equal supporting lines
};

LineMeet line_line_meet(const Line& l1, const Line& l2);

// Axis-aligned rational box, used as the clip region when exporting lines.
struct RatBox {
    Rat xmin, ymin, xmax, ymax;

    bool contains(const RatPoint& p) const {
        return xmin <= p.x && p.x <= xmax && ymin <= p.y && p.y <= ymax;
    }
    void expand(const RatPoint& p);
};

// Replace a line by an open ray on the same supporting line whose integer
// origin lies strictly outside `region` and which covers line-over-region
// entirely.  The retreat distance is the smallest power of two exceeding the
// required bound, for reproducible output.  Throws NoIntersection when the
// line misses the region.
OpenRay line_to_ray(const Line& l, const RatBox& region);

} // namespace rayforge
