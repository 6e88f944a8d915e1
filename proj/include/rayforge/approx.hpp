#pragma once

// Arbitrary-precision approximate real arithmetic with tracked error radii
// (ball arithmetic on MPFR).  Used only during construction, never during
// verification.  Every branch decision goes through sign_with_margin; an
// ambiguous sign surfaces as InsufficientPrecision and is retried at higher
// precision by the adaptive loop in certify.

#include <mpfr.h>

#include <optional>
#include <string>
#include <vector>

#include "rayforge/errors.hpp"
#include "rayforge/exact.hpp"

namespace rayforge {

class Approx {
  public:
    explicit Approx(long prec);
    Approx(const Approx& o);
    Approx(Approx&& o) noexcept;
    Approx& operator=(const Approx& o);
    Approx& operator=(Approx&& o) noexcept;
    ~Approx();

    long prec() const { return prec_; }

    // Exact embeddings (err = 0).
    static Approx from_long(long v, long prec);
    static Approx from_int(const Int& v, long prec);
    static Approx pi(long prec);

    // value +/- err accessors (read-only raw handles).
    mpfr_srcptr value() const { return v_; }
    mpfr_srcptr err() const { return e_; }

    double value_d() const { return mpfr_get_d(v_, MPFR_RNDN); }
    double err_d() const { return mpfr_get_d(e_, MPFR_RNDU); }
    std::string str(int digits = 20) const;

    // The sign of the true value when |value| > err, otherwise nullopt.
    std::optional<int> sign_with_margin() const;

    bool is_exact_zero() const;

    Approx operator-() const;
    Approx abs() const;

    friend Approx operator+(const Approx& a, const Approx& b);
    friend Approx operator-(const Approx& a, const Approx& b);
    friend Approx operator*(const Approx& a, const Approx& b);
    friend Approx operator/(const Approx& a, const Approx& b);  // InsufficientPrecision if b may be 0

    Approx mul_long(long m) const;
    Approx div_long(long d) const;

    friend Approx sqrt(const Approx& a);   // InsufficientPrecision if a may be negative
    friend Approx cos(const Approx& a);
    friend Approx sin(const Approx& a);
    friend Approx atan2(const Approx& y, const Approx& x);

    // Nearest integer to value * 2^scale_bits.  Requires err * 2^scale_bits
    // to fit within half a lattice cell, else InsufficientPrecision.
    Int snap_to_int(long scale_bits) const;

    // Nearest integer without an error requirement (used for scaled exact
    // inputs whose rounding is the snapping step itself).
    Int round_to_int() const;

  private:
    mpfr_t v_;   // value, prec_ mantissa bits
    mpfr_t e_;   // error radius upper bound, fixed small precision, rounded up
    long prec_;

    void add_half_ulp();
    friend class ApproxPoint;
};

std::optional<int> compare_with_margin(const Approx& a, const Approx& b);

struct ApproxPoint {
    Approx x, y;

    ApproxPoint(Approx px, Approx py) : x(std::move(px)), y(std::move(py)) {}
    static ApproxPoint from_int(const IntPoint& p, long prec);

    ApproxPoint operator+(const ApproxPoint& o) const { return {x + o.x, y + o.y}; }
    ApproxPoint operator-(const ApproxPoint& o) const { return {x - o.x, y - o.y}; }
    ApproxPoint scaled(const Approx& s) const { return {x * s, y * s}; }
};

Approx cross(const ApproxPoint& a, const ApproxPoint& b);
Approx dot(const ApproxPoint& a, const ApproxPoint& b);
Approx dist2(const ApproxPoint& a, const ApproxPoint& b);
Approx dist(const ApproxPoint& a, const ApproxPoint& b);

struct CircleApprox {
    ApproxPoint center;
    Approx radius;  // must stay positive with margin
};

// Circular arc: supporting circle plus start angle and signed sweep, angles
// relative to the arc's own center.  end_angle = start_angle + sweep, with
// sweep in (-2pi, 2pi) \ {0}; the endpoints are redundant but kept for
// direct geometric access.
struct ArcApprox {
    CircleApprox circle;
    Approx start_angle;
    Approx sweep;
    ApproxPoint endpoint0;
    ApproxPoint endpoint1;

    Approx end_angle() const { return start_angle + sweep; }
    ApproxPoint point_at_param(const Approx& u) const;  // u in [0,1]
    ApproxPoint tangent_at_param(const Approx& u) const;  // unit, in sweep direction
    // Arc parameter in [0,1] of a point assumed on or near the supporting
    // circle; InsufficientPrecision if the fold is ambiguous.
    Approx param_of(const ApproxPoint& p) const;
};

// p_i = (cos(i*theta), sin(i*theta)), theta = (k-1)pi/k.  The angle is
// reduced modulo 2pi exactly in the integers first so err <= 2^(4-P).
ApproxPoint unit_circle_point(long i, long k, long prec);

// Line through two approximate points.
struct ApproxLine {
    ApproxPoint a, b;
};

// The circle through a and b tangent to l, picking between the two solutions
// by `side`: the tangency point lies on the side of the directed segment
// a->b given by +1 (left) / -1 (right).
CircleApprox tangent_circle_through(const ApproxPoint& a, const ApproxPoint& b,
                                    const ApproxLine& l, int side);

// Intersections of the line through (a,b) with the arc (not the full
// circle), each with tracked err, ordered by line parameter.  A tangency
// contributes one point.  InsufficientPrecision if a root's membership in
// the angular span is ambiguous.
struct LineArcHit {
    Approx t;        // parameter along a->b (b is at t=1)
    ApproxPoint point;
    Approx param;    // arc parameter in [0,1]
};
std::vector<LineArcHit> line_arc_meet(const ApproxPoint& a, const ApproxPoint& b,
                                      const ArcApprox& arc);

// d points strictly between `from` and `to` on the arc such that the d+2
// points are at equal angular increments.
std::vector<ApproxPoint> arc_spaced_points(const ArcApprox& arc,
                                           const ApproxPoint& from,
                                           const ApproxPoint& to, long d);

} // namespace rayforge
