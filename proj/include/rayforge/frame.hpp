#pragma once

// The reference frame: unit-circle points p_i, rectangles R_i, circular arcs
// alpha_i, and the ray classes Gamma_i, plus sampled validation of the
// frame's intersection properties.

#include <map>
#include <string>
#include <vector>

#include "rayforge/approx.hpp"

namespace rayforge {

struct Frame {
    int k = 0;
    long prec = 0;
    std::vector<ApproxPoint> p;        // p_0..p_k (p_k = p_0)
    std::map<int, ApproxPoint> q;      // 1..k-1
    std::map<int, ApproxPoint> m;      // 1..k-2, rectangle centers
    std::map<int, ApproxPoint> t;      // 1..k-2
    std::map<int, ApproxPoint> r;      // 1..k-2
    std::map<int, ArcApprox> arcs;     // alpha_1..alpha_{k-2}

    int arc_count() const { return k - 2; }
};

// Builds the whole frame at precision `prec`.  The arc alpha_i is realized
// as the circular arc whose supporting circle is tangent to the diagonal
// line p_i q_i at q_i and to the diagonal line t_i r_i at r_i, i.e. the
// inscribed circle of the wide sector between the diagonals; the arc is the
// short sweep from q_i to r_i and lies inside R_i.
Frame build_frame(int k, long prec);

struct ApproxRay {
    ApproxPoint origin;
    ApproxPoint toward;  // a second point on the ray (direction = toward - origin)
};

// Membership of `ray` in Gamma_i: for i >= 1 the origin lies on alpha_{i+1}
// and the ray intersects alpha_i twice or is tangent to it; Gamma_0 contains
// rays with origin on alpha_1 passing through p_0.  nullopt when any
// sub-decision is ambiguous at the working precision.
std::optional<bool> gamma_membership(const Frame& f, int class_index, const ApproxRay& ray);

struct FrameReport {
    long checks = 0;
    long ambiguous = 0;
    std::vector<std::string> failures;

    bool pass() const { return failures.empty() && ambiguous == 0; }
};

// Sampled validation: every sampled Gamma_i x Gamma_j pair with |i-j| > 1
// intersects; every sampled ray tangent to alpha_{i+1} (origin on
// alpha_{i+2}, as produced by the construction) intersects sampled Gamma_i
// rays except equal-origin ones; every sampled secant/tangent line of
// alpha_i meets alpha_{i+1}.  Deterministic for a fixed (frame, samples,
// seed).
FrameReport validate_frame(const Frame& f, int samples, unsigned long seed = 20240911);

} // namespace rayforge
