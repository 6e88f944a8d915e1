#include "rayforge/approx.hpp"

#include <cmath>

namespace rayforge {

namespace {

constexpr long kErrPrec = 64;  // error radii carry a few digits only

// e += half ulp of v (the worst-case rounding error of an RNDN operation).
void add_rounding_err(mpfr_t e, mpfr_srcptr v, long prec, int ternary) {
    if (ternary == 0) return;  // result was exact
    mpfr_t h;
    mpfr_init2(h, kErrPrec);
    if (mpfr_zero_p(v)) {
        mpfr_set_ui_2exp(h, 1, -prec, MPFR_RNDU);
    } else {
        mpfr_set_ui_2exp(h, 1, mpfr_get_exp(v) - prec - 1, MPFR_RNDU);
    }
    mpfr_add(e, e, h, MPFR_RNDU);
    mpfr_clear(h);
}

// |v| + e, rounded up (upper bound of the ball's magnitude).
void mag_upper(mpfr_t out, mpfr_srcptr v, mpfr_srcptr e) {
    mpfr_abs(out, v, MPFR_RNDU);
    mpfr_add(out, out, e, MPFR_RNDU);
}

// max(|v| - e, 0), rounded down (lower bound of the ball's magnitude).
void mag_lower(mpfr_t out, mpfr_srcptr v, mpfr_srcptr e) {
    mpfr_abs(out, v, MPFR_RNDD);
    mpfr_sub(out, out, e, MPFR_RNDD);
    if (mpfr_sgn(out) < 0) mpfr_set_zero(out, 1);
}

} // namespace

Approx::Approx(long prec) : prec_(prec) {
    mpfr_init2(v_, prec_);
    mpfr_set_zero(v_, 1);
    mpfr_init2(e_, kErrPrec);
    mpfr_set_zero(e_, 1);
}

Approx::Approx(const Approx& o) : prec_(o.prec_) {
    mpfr_init2(v_, prec_);
    mpfr_set(v_, o.v_, MPFR_RNDN);
    mpfr_init2(e_, kErrPrec);
    mpfr_set(e_, o.e_, MPFR_RNDU);
}

Approx::Approx(Approx&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(v_, 2);  // cheap placeholder, swapped away immediately
    mpfr_init2(e_, 2);
    mpfr_swap(v_, o.v_);
    mpfr_swap(e_, o.e_);
}

Approx& Approx::operator=(const Approx& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.prec_);
        mpfr_set(v_, o.v_, MPFR_RNDN);
        mpfr_set(e_, o.e_, MPFR_RNDU);
        prec_ = o.prec_;
    }
    return *this;
}

Approx& Approx::operator=(Approx&& o) noexcept {
    if (this != &o) {
        mpfr_swap(v_, o.v_);
        mpfr_swap(e_, o.e_);
        prec_ = o.prec_;
    }
    return *this;
}

Approx::~Approx() {
    mpfr_clear(v_);
    mpfr_clear(e_);
}

Approx Approx::from_long(long v, long prec) {
    Approx r(prec);
    int t = mpfr_set_si(r.v_, v, MPFR_RNDN);
    add_rounding_err(r.e_, r.v_, prec, t);
    return r;
}

Approx Approx::from_int(const Int& v, long prec) {
    Approx r(prec);
    int t = mpfr_set_z(r.v_, v.get_mpz_t(), MPFR_RNDN);
    add_rounding_err(r.e_, r.v_, prec, t);
    return r;
}

Approx Approx::pi(long prec) {
    Approx r(prec);
    int t = mpfr_const_pi(r.v_, MPFR_RNDN);
    add_rounding_err(r.e_, r.v_, prec, t);
    return r;
}

std::string Approx::str(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg +/- %.3Rg", digits, v_, e_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::optional<int> Approx::sign_with_margin() const {
    if (mpfr_zero_p(v_) && mpfr_zero_p(e_)) return 0;  // exactly zero
    mpfr_t m;
    mpfr_init2(m, kErrPrec);
    mpfr_abs(m, v_, MPFR_RNDD);
    int cmp = mpfr_cmp(m, e_);
    mpfr_clear(m);
    if (cmp <= 0) return std::nullopt;
    return mpfr_sgn(v_) > 0 ? 1 : -1;
}

bool Approx::is_exact_zero() const { return mpfr_zero_p(v_) && mpfr_zero_p(e_); }

Approx Approx::operator-() const {
    Approx r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

Approx Approx::abs() const {
    Approx r(*this);
    mpfr_abs(r.v_, r.v_, MPFR_RNDN);
    return r;
}

Approx operator+(const Approx& a, const Approx& b) {
    Approx r(std::max(a.prec_, b.prec_));
    int t = mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    mpfr_add(r.e_, a.e_, b.e_, MPFR_RNDU);
    add_rounding_err(r.e_, r.v_, r.prec_, t);
    return r;
}

Approx operator-(const Approx& a, const Approx& b) {
    Approx r(std::max(a.prec_, b.prec_));
    int t = mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    mpfr_add(r.e_, a.e_, b.e_, MPFR_RNDU);
    add_rounding_err(r.e_, r.v_, r.prec_, t);
    return r;
}

Approx operator*(const Approx& a, const Approx& b) {
    Approx r(std::max(a.prec_, b.prec_));
    int t = mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    // |a||eb| + |b||ea| + ea eb
    mpfr_t tmp, acc;
    mpfr_init2(tmp, kErrPrec);
    mpfr_init2(acc, kErrPrec);
    mpfr_abs(tmp, a.v_, MPFR_RNDU);
    mpfr_mul(acc, tmp, b.e_, MPFR_RNDU);
    mpfr_abs(tmp, b.v_, MPFR_RNDU);
    mpfr_mul(tmp, tmp, a.e_, MPFR_RNDU);
    mpfr_add(acc, acc, tmp, MPFR_RNDU);
    mpfr_mul(tmp, a.e_, b.e_, MPFR_RNDU);
    mpfr_add(acc, acc, tmp, MPFR_RNDU);
    mpfr_set(r.e_, acc, MPFR_RNDU);
    mpfr_clear(tmp);
    mpfr_clear(acc);
    add_rounding_err(r.e_, r.v_, r.prec_, t);
    return r;
}

Approx operator/(const Approx& a, const Approx& b) {
    // Denominator must be bounded away from zero.
    mpfr_t blo;
    mpfr_init2(blo, kErrPrec);
    mag_lower(blo, b.v_, b.e_);
    if (mpfr_zero_p(blo)) {
        mpfr_clear(blo);
        throw InsufficientPrecision("division: denominator may be zero");
    }
    Approx r(std::max(a.prec_, b.prec_));
    int t = mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    // |a/b - a'/b'| <= (ea*|b| + |a|*eb) / (|b| * blo); use upper |a|,|b|.
    mpfr_t au, bu, num, tmp;
    mpfr_init2(au, kErrPrec);
    mpfr_init2(bu, kErrPrec);
    mpfr_init2(num, kErrPrec);
    mpfr_init2(tmp, kErrPrec);
    mag_upper(au, a.v_, a.e_);
    mag_upper(bu, b.v_, b.e_);
    mpfr_mul(num, a.e_, bu, MPFR_RNDU);
    mpfr_mul(tmp, au, b.e_, MPFR_RNDU);
    mpfr_add(num, num, tmp, MPFR_RNDU);
    mpfr_mul(tmp, bu, blo, MPFR_RNDD);
    mpfr_div(num, num, tmp, MPFR_RNDU);
    mpfr_add(r.e_, r.e_, num, MPFR_RNDU);
    mpfr_clear(au);
    mpfr_clear(bu);
    mpfr_clear(num);
    mpfr_clear(tmp);
    mpfr_clear(blo);
    add_rounding_err(r.e_, r.v_, r.prec_, t);
    return r;
}

Approx Approx::mul_long(long m) const {
    Approx r(prec_);
    int t = mpfr_mul_si(r.v_, v_, m, MPFR_RNDN);
    mpfr_mul_si(r.e_, e_, std::labs(m), MPFR_RNDU);
    add_rounding_err(r.e_, r.v_, prec_, t);
    return r;
}

Approx Approx::div_long(long d) const {
    if (d == 0) throw Error("div_long by zero");
    Approx r(prec_);
    int t = mpfr_div_si(r.v_, v_, d, MPFR_RNDN);
    mpfr_div_si(r.e_, e_, std::labs(d), MPFR_RNDU);
    // the error quotient itself was rounded up, still an upper bound
    add_rounding_err(r.e_, r.v_, prec_, t);
    return r;
}

Approx sqrt(const Approx& a) {
    if (a.is_exact_zero()) return Approx(a.prec());
    auto s = a.sign_with_margin();
    if (!s) throw InsufficientPrecision("sqrt: argument may be negative or zero");
    if (*s < 0) throw Degenerate("sqrt of negative value");
    Approx r(a.prec());
    int t = mpfr_sqrt(r.v_, a.value(), MPFR_RNDN);
    // err from the monotone interval [sqrt(lo), sqrt(hi)]
    mpfr_t lo, hi;
    mpfr_init2(lo, kErrPrec);
    mpfr_init2(hi, kErrPrec);
    mag_lower(lo, a.value(), a.err());
    mag_upper(hi, a.value(), a.err());
    mpfr_sqrt(lo, lo, MPFR_RNDD);
    mpfr_sqrt(hi, hi, MPFR_RNDU);
    mpfr_sub(hi, hi, lo, MPFR_RNDU);  // interval width bounds 2*err
    mpfr_set(lo, hi, MPFR_RNDU);
    mpfr_add(r.e_, r.e_, lo, MPFR_RNDU);
    mpfr_clear(lo);
    mpfr_clear(hi);
    add_rounding_err(r.e_, r.v_, r.prec_, t);
    return r;
}

Approx cos(const Approx& a) {
    Approx r(a.prec());
    int t = mpfr_cos(r.v_, a.value(), MPFR_RNDN);
    mpfr_set(r.e_, a.err(), MPFR_RNDU);  // Lipschitz constant 1
    add_rounding_err(r.e_, r.v_, r.prec_, t);
    return r;
}

Approx sin(const Approx& a) {
    Approx r(a.prec());
    int t = mpfr_sin(r.v_, a.value(), MPFR_RNDN);
    mpfr_set(r.e_, a.err(), MPFR_RNDU);
    add_rounding_err(r.e_, r.v_, r.prec_, t);
    return r;
}

Approx atan2(const Approx& y, const Approx& x) {
    // Error on the circle metric: |dtheta| <= (ex + ey) / r_lo.  A ball
    // straddling the branch cut still gets a valid bound modulo 2pi, which
    // is what all angular consumers fold by.
    mpfr_t xl, yl, rlo, tmp;
    mpfr_init2(xl, kErrPrec);
    mpfr_init2(yl, kErrPrec);
    mpfr_init2(rlo, kErrPrec);
    mpfr_init2(tmp, kErrPrec);
    mag_lower(xl, x.value(), x.err());
    mag_lower(yl, y.value(), y.err());
    mpfr_sqr(xl, xl, MPFR_RNDD);
    mpfr_sqr(yl, yl, MPFR_RNDD);
    mpfr_add(rlo, xl, yl, MPFR_RNDD);
    mpfr_sqrt(rlo, rlo, MPFR_RNDD);
    if (mpfr_zero_p(rlo)) {
        mpfr_clear(xl); mpfr_clear(yl); mpfr_clear(rlo); mpfr_clear(tmp);
        throw InsufficientPrecision("atan2: point may coincide with origin");
    }
    Approx r(std::max(x.prec(), y.prec()));
    int t = mpfr_atan2(r.v_, y.value(), x.value(), MPFR_RNDN);
    mpfr_add(tmp, x.err(), y.err(), MPFR_RNDU);
    mpfr_div(tmp, tmp, rlo, MPFR_RNDU);
    mpfr_set(r.e_, tmp, MPFR_RNDU);
    mpfr_clear(xl); mpfr_clear(yl); mpfr_clear(rlo); mpfr_clear(tmp);
    add_rounding_err(r.e_, r.v_, r.prec_, t);
    return r;
}

Int Approx::snap_to_int(long scale_bits) const {
    mpfr_t scaled, escaled;
    mpfr_init2(scaled, prec_);
    mpfr_mul_2si(scaled, v_, scale_bits, MPFR_RNDN);  // exact
    mpfr_init2(escaled, kErrPrec);
    mpfr_mul_2si(escaled, e_, scale_bits, MPFR_RNDU);
    bool too_wide = mpfr_cmp_d(escaled, 0.5) > 0;
    mpfr_clear(escaled);
    if (too_wide) {
        mpfr_clear(scaled);
        throw InsufficientPrecision("snap: error exceeds half a lattice cell");
    }
    Int out;
    mpfr_get_z(out.get_mpz_t(), scaled, MPFR_RNDN);  // ties round to even
    mpfr_clear(scaled);
    return out;
}

std::optional<int> compare_with_margin(const Approx& a, const Approx& b) {
    return (a - b).sign_with_margin();
}

ApproxPoint ApproxPoint::from_int(const IntPoint& p, long prec) {
    return ApproxPoint(Approx::from_int(p.x, prec), Approx::from_int(p.y, prec));
}

Approx cross(const ApproxPoint& a, const ApproxPoint& b) { return a.x * b.y - a.y * b.x; }
Approx dot(const ApproxPoint& a, const ApproxPoint& b) { return a.x * b.x + a.y * b.y; }

Approx dist2(const ApproxPoint& a, const ApproxPoint& b) {
    Approx dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

Approx dist(const ApproxPoint& a, const ApproxPoint& b) { return sqrt(dist2(a, b)); }

ApproxPoint ArcApprox::point_at_param(const Approx& u) const {
    Approx a = start_angle + u * sweep;
    return {circle.center.x + circle.radius * cos(a),
            circle.center.y + circle.radius * sin(a)};
}

ApproxPoint ArcApprox::tangent_at_param(const Approx& u) const {
    Approx a = start_angle + u * sweep;
    auto s = sweep.sign_with_margin();
    if (!s) throw InsufficientPrecision("arc sweep sign ambiguous");
    Approx tx = -sin(a), ty = cos(a);
    if (*s < 0) return {-tx, -ty};
    return {tx, ty};
}

Approx ArcApprox::param_of(const ApproxPoint& p) const {
    long prec = start_angle.prec();
    Approx ang = atan2(p.y - circle.center.y, p.x - circle.center.x);
    Approx d = ang - start_angle;
    Approx two_pi = Approx::pi(prec).mul_long(2);
    // Fold d + m*2pi, m in {-2..2}, to the candidate nearest the middle of
    // the sweep window; selection is not correctness-critical (callers check
    // span membership with margin), the nearest fold is unambiguous because
    // |sweep| < 2pi.
    Approx half = sweep.div_long(2);
    Approx best = d - half;
    Approx best_d = d;
    for (int m = -2; m <= 2; ++m) {
        Approx cand = d + two_pi.mul_long(m);
        Approx off = cand - half;
        if (mpfr_cmpabs(off.value(), best.value()) < 0) {
            best = off;
            best_d = cand;
        }
    }
    return best_d / sweep;
}

ApproxPoint unit_circle_point(long i, long k, long prec) {
    if (k < 3 || k % 2 == 0) throw BadFrameSize("frame size must be odd and >= 3");
    if (i < 0) throw Error("unit_circle_point: negative index");
    // angle = i*(k-1)/k * pi; reduce i*(k-1) mod 2k exactly first.
    long m = (i % (2 * k)) * ((k - 1) % (2 * k)) % (2 * k);
    if (m == 0)
        return {Approx::from_long(1, prec), Approx::from_long(0, prec)};
    Approx a = Approx::pi(prec).mul_long(m).div_long(k);
    return {cos(a), sin(a)};
}

CircleApprox tangent_circle_through(const ApproxPoint& a, const ApproxPoint& b,
                                    const ApproxLine& l, int side) {
    // Unnormalized normals keep exactly-parallel inputs exactly parallel,
    // so the linear branch is taken on an exact zero, not on ambiguity.
    ApproxPoint ld = l.b - l.a;
    ApproxPoint N(-ld.y, ld.x);
    auto off = [&](const ApproxPoint& p) {  // |N| * signed distance to l
        return N.x * (p.x - l.a.x) + N.y * (p.y - l.a.y);
    };
    auto sa = off(a).sign_with_margin();
    auto sb = off(b).sign_with_margin();
    if (!sa || !sb) throw InsufficientPrecision("tangent_circle_through: point-on-line test");
    if (*sa == 0 || *sb == 0 || *sa != *sb)
        throw Degenerate("tangent_circle_through: points on or astride the line");

    ApproxPoint ab = b - a;
    Approx ab2 = dot(ab, ab);
    {
        auto s = ab2.sign_with_margin();
        if (!s || *s <= 0) throw Degenerate("tangent_circle_through: coincident points");
    }
    ApproxPoint mid((a.x + b.x).div_long(2), (a.y + b.y).div_long(2));
    ApproxPoint n(-ab.y, ab.x);  // normal of segment ab, |n|^2 = ab2
    Approx half2 = ab2.div_long(4);
    Approx N2 = dot(N, N);

    // center = mid + s*n; tangency: (A0 + B0*s)^2 = N2*(half2 + s^2*ab2).
    Approx A0 = off(mid);
    Approx B0 = dot(N, n);
    Approx qa = B0 * B0 - N2 * ab2;
    std::vector<Approx> roots;
    auto qa_sign = qa.sign_with_margin();
    if (!qa_sign) throw InsufficientPrecision("tangent_circle_through: parallel test ambiguous");
    if (*qa_sign == 0) {
        // ab parallel to l: single solution, linear equation; A0 != 0 since
        // a, b are strictly off the line.
        Approx denom = (A0 * B0).mul_long(2);
        roots.push_back((N2 * half2 - A0 * A0) / denom);
    } else {
        Approx qb = (A0 * B0).mul_long(2);
        Approx qc = A0 * A0 - N2 * half2;
        Approx disc = qb * qb - qa.mul_long(4) * qc;
        auto ds = disc.sign_with_margin();
        if (!ds) throw InsufficientPrecision("tangent_circle_through: discriminant ambiguous");
        if (*ds < 0) throw Degenerate("tangent_circle_through: no tangent circle");
        Approx sq = sqrt(disc);
        Approx two_qa = qa.mul_long(2);
        roots.push_back((-qb - sq) / two_qa);
        roots.push_back((-qb + sq) / two_qa);
    }
    for (const Approx& s : roots) {
        ApproxPoint c(mid.x + s * n.x, mid.y + s * n.y);
        Approx radius = sqrt(half2 + s * s * ab2);
        // tangency foot and its side relative to segment ab
        Approx f = off(c) / N2;
        ApproxPoint foot(c.x - f * N.x, c.y - f * N.y);
        Approx orient = cross(ab, foot - a);
        auto os = orient.sign_with_margin();
        if (!os) throw InsufficientPrecision("tangent_circle_through: side test ambiguous");
        if (*os == side) return CircleApprox{c, radius};
    }
    throw Degenerate("tangent_circle_through: no solution on requested side");
}

std::vector<LineArcHit> line_arc_meet(const ApproxPoint& a, const ApproxPoint& b,
                                      const ArcApprox& arc) {
    ApproxPoint d = b - a;
    ApproxPoint f = a - arc.circle.center;
    Approx qa = dot(d, d);
    Approx qb = dot(f, d).mul_long(2);
    Approx qc = dot(f, f) - arc.circle.radius * arc.circle.radius;
    Approx disc = qb * qb - qa.mul_long(4) * qc;
    auto ds = disc.sign_with_margin();
    std::vector<Approx> ts;
    Approx two_qa = qa.mul_long(2);
    if (ds && *ds < 0) return {};
    if (!ds || *ds == 0) {
        // tangency at current precision: one root
        ts.push_back(-qb / two_qa);
    } else {
        Approx sq = sqrt(disc);
        ts.push_back((-qb - sq) / two_qa);
        ts.push_back((-qb + sq) / two_qa);
    }
    std::vector<LineArcHit> hits;
    for (const Approx& t : ts) {
        ApproxPoint p(a.x + t * d.x, a.y + t * d.y);
        Approx u = arc.param_of(p);
        auto lo = u.sign_with_margin();
        auto hi = (Approx::from_long(1, u.prec()) - u).sign_with_margin();
        if (!lo || !hi)
            throw InsufficientPrecision("line_arc_meet: span membership ambiguous");
        if (*lo >= 0 && *hi >= 0) hits.push_back(LineArcHit{t, p, u});
    }
    return hits;
}

std::vector<ApproxPoint> arc_spaced_points(const ArcApprox& arc,
                                           const ApproxPoint& from,
                                           const ApproxPoint& to, long d) {
    if (d < 1) throw Error("arc_spaced_points: d must be >= 1");
    Approx ua = arc.param_of(from);
    Approx ub = arc.param_of(to);
    std::vector<ApproxPoint> pts;
    pts.reserve(static_cast<size_t>(d));
    for (long j = 1; j <= d; ++j) {
        Approx u = ua + (ub - ua).mul_long(j).div_long(d + 1);
        pts.push_back(arc.point_at_param(u));
    }
    return pts;
}

} // namespace rayforge
