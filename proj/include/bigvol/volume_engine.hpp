#pragma once

#include <functional>
#include <vector>

#include "bigvol/toric_bundle.hpp"

namespace bigvol {

// Coefficients of the section density q(x,y) = beta(x,y).beta(x,y) in the
// monomial basis 1, x, y, x^2, xy, y^2. On the abelian surface a nef class
// with positive self-intersection carries h^0 ~ m^2 q/2, so volumes on X
// reduce to 4!/2 * integral of q over the twist region.
struct QuadDensity {
    Rat c00, c10, c01, c20, c11, c02;

    static QuadDensity of(const BundleSpec& spec, const BundleDivisor& div);

    Rat eval(const Rat& x, const Rat& y) const;
    QuadNum eval(const QPoint& p) const;
};

struct VolumeResult {
    QuadNum lower, upper;
    bool exact = true;
    int segments = 0;  // sandwich refinement used, 0 for exact regions

    QuadNum value() const { return exact ? lower : (lower + upper) / QuadNum(rat(2)); }
    QuadNum width() const { return upper - lower; }
};

struct VolumeOptions {
    BoxOptions box{};
    // sandwich only: refine (doubling segments) until width <= rel_tol * max(1, |mid|)
    Rat rel_tol = rat(1, 100000);
    int max_segments = 2048;
};

// Exact integral of a quadratic density over a convex polygon: fan
// triangulation from the first (lexicographically smallest) vertex, 3-point
// mid-edge quadrature per triangle (exact for degree <= 2).
QuadNum integrate_quadratic(const QuadDensity& q, const Polygon& poly);

// 12 * integral of q over a region: exact for polygon regions, a certified
// enclosure for sandwich regions (inner integral plus an area-slack bound).
VolumeResult volume_of_region(const QuadDensity& q, const Region& r);

// vol(pi*M + cH) = 12 * integral of beta^2 over box. Exact value in Q(sqrt 6)
// for exact-polygon regions; a certified [lower, upper] enclosure otherwise.
// Returns exact 0 when the box is empty or lower-dimensional.
VolumeResult volume(const BundleSpec& spec, const BundleDivisor& div, const VolumeOptions& opts = {});

// Riemann-Roch density oracle on E x E: beta^2/2 for nef classes of positive
// self-intersection, 0 otherwise (boundary classes grow at most linearly).
Rat h0_surface(const NSClass& cl);

// h^0(X, m * div) as the fibered lattice sum over the simplex of twists.
Rat h0_bundle(const BundleSpec& spec, const BundleDivisor& div, long m, int parallelism = 1);

struct DerivProbe {
    Rat t;
    QuadNum vol_lower, vol_upper;
    bool exact;
};

struct DerivOptions {
    Rat h = rat(1, 64);
    VolumeOptions vol{};
};

struct PosIntResult {
    QuadNum value;
    bool polynomial_path = false;  // exact degree-4 fit confirmed at a 6th node
    std::vector<DerivProbe> probes;
};

// (1/4) d/dt V(t) at t = 0+ for a one-parameter family of volumes V.
// Probes t in {h, h/2, h/4, h/8, h/16}; when the exact volumes fit a degree-4
// polynomial (verified at h/32 and against V(0)) the derivative is exact,
// otherwise one-sided Richardson extrapolation over {h, ..., h/8} is used.
// Throws StepUnderflow when V degenerates to zero at t <= h/8.
PosIntResult one_sided_volume_derivative(const std::function<VolumeResult(const Rat&)>& vol_at,
                                         const VolumeResult& v0, const Rat& h);

// Positive intersection number <L^3>.D = (1/4) d/dt vol(L + tD) at t = 0+.
// Throws NotBig when L is not big, StepUnderflow when the box degenerates
// at a probe step.
PosIntResult pos_intersection(const BundleSpec& spec, const BundleDivisor& L, const BundleDivisor& D,
                              const DerivOptions& opts = {});

// First Riemann-Roch coefficient r1(L) = <L^3>.K_X.
PosIntResult r1(const BundleSpec& spec, const BundleDivisor& L, const DerivOptions& opts = {});

}  // namespace bigvol
