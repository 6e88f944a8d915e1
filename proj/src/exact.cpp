#include "rayforge/exact.hpp"

namespace rayforge {

int sign(const Int& v) { return mpz_sgn(v.get_mpz_t()); }
int sign(const Rat& v) { return mpq_sgn(v.get_mpq_t()); }

Direction::Direction(Int x, Int y) : dx(std::move(x)), dy(std::move(y)) {
    if (dx == 0 && dy == 0) throw Error("Direction: zero vector");
    Int g;
    mpz_gcd(g.get_mpz_t(), dx.get_mpz_t(), dy.get_mpz_t());
    dx /= g;
    dy /= g;
}

Direction Direction::axis_canonical() const {
    if (dx < 0 || (dx == 0 && dy < 0)) return Direction(-dx, -dy);
    return *this;
}

int orientation(const IntPoint& a, const IntPoint& b, const IntPoint& c) {
    Int det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sign(det);
}

int orientation(const RatPoint& a, const RatPoint& b, const RatPoint& c) {
    Rat det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sign(det);
}

bool ray_ray_intersect(const OpenRay& r1, const OpenRay& r2) {
    const Int& ax = r1.dir.dx;
    const Int& ay = r1.dir.dy;
    const Int& bx = r2.dir.dx;
    const Int& by = r2.dir.dy;
    Int wx = r2.origin.x - r1.origin.x;
    Int wy = r2.origin.y - r1.origin.y;
    Int c = ax * by - ay * bx;
    if (c != 0) {
        // o1 + t1 d1 = o2 + t2 d2 with t1 = (w x d2)/c, t2 = (w x d1)/c.
        // Intersect iff both parameters are strictly positive.
        Int t1n = wx * by - wy * bx;
        Int t2n = wx * ay - wy * ax;
        int sc = sign(c);
        return sign(t1n) == sc && sign(t2n) == sc;
    }
    // Parallel.  Distinct supporting lines never meet.
    if (wx * ay - wy * ax != 0) return false;
    // Same supporting line.  Same orientation: the far tails overlap.
    Int dd = ax * bx + ay * by;
    if (dd > 0) return true;
    // Opposite orientation: the open interval (o1, o2) along d1, nonempty iff
    // o2 is strictly ahead of o1.  Equal origins leave nothing (open rays).
    return wx * ax + wy * ay > 0;
}

LineMeet line_line_meet(const Line& l1, const Line& l2) {
    LineMeet out;
    Int c = l1.dir.dx * l2.dir.dy - l1.dir.dy * l2.dir.dx;
    Int wx = l2.anchor.x - l1.anchor.x;
    Int wy = l2.anchor.y - l1.anchor.y;
    if (c == 0) {
        out.coincident = (wx * l1.dir.dy - wy * l1.dir.dx) == 0;
        return out;
    }
    Rat t(wx * l2.dir.dy - wy * l2.dir.dx, c);
    t.canonicalize();
    out.point = RatPoint(Rat(l1.anchor.x) + t * l1.dir.dx,
                         Rat(l1.anchor.y) + t * l1.dir.dy);
    return out;
}

void RatBox::expand(const RatPoint& p) {
    if (p.x < xmin) xmin = p.x;
    if (p.x > xmax) xmax = p.x;
    if (p.y < ymin) ymin = p.y;
    if (p.y > ymax) ymax = p.y;
}

OpenRay line_to_ray(const Line& l, const RatBox& region) {
    // Parameter interval of line-over-region along the line.
    Rat tmin, tmax;
    bool has = false;
    auto clip_slab = [&](const Rat& lo, const Rat& hi, const Int& anchor,
                         const Int& d) -> bool {
        if (d == 0) return Rat(anchor) >= lo && Rat(anchor) <= hi;
        Rat t0 = (lo - anchor) / d;
        Rat t1 = (hi - anchor) / d;
        if (t0 > t1) std::swap(t0, t1);
        if (!has) {
            tmin = t0;
            tmax = t1;
            has = true;
        } else {
            if (t0 > tmin) tmin = t0;
            if (t1 < tmax) tmax = t1;
        }
        return true;
    };
    if (!clip_slab(region.xmin, region.xmax, l.anchor.x, l.dir.dx) ||
        !clip_slab(region.ymin, region.ymax, l.anchor.y, l.dir.dy) || !has ||
        tmin > tmax)
        throw NoIntersection("line_to_ray: line misses region");

    // Retreat by the smallest power of two M with -M strictly before tmin;
    // the origin then lies strictly outside the region.
    Int M = 1;
    Rat bound = -tmin;
    while (Rat(M) <= bound) M *= 2;
    return OpenRay{IntPoint{l.anchor.x - M * l.dir.dx, l.anchor.y - M * l.dir.dy},
                   l.dir};
}

} // namespace rayforge
