#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bigvol/errors.hpp"
#include "bigvol/geometry.hpp"
#include "bigvol/ns_lattice.hpp"

namespace bigvol {

// The projective bundle X = P(O + (L1-L0) + (L2-L0)) over S = E x E, viewed
// as a toric bundle for the standard fan of P^2. H denotes the tautological
// class O_X(1); divisors are written pi*M + c*H.
struct BundleSpec {
    NSClass L0, L1, L2;

    NSClass twist1() const { return L1 - L0; }
    NSClass twist2() const { return L2 - L0; }
};

struct BundleDivisor {
    NSClass base;  // M
    Rat h_coeff;   // c

    friend BundleDivisor operator+(const BundleDivisor& l, const BundleDivisor& r) {
        return {l.base + r.base, l.h_coeff + r.h_coeff};
    }
    friend BundleDivisor operator*(const Rat& s, const BundleDivisor& d) {
        return {s * d.base, s * d.h_coeff};
    }
    friend bool operator==(const BundleDivisor& l, const BundleDivisor& r) = default;
};

// Fiberwise twist of the base class: beta(x, y) = M + x(L1-L0) + y(L2-L0).
// The divisor pi*M + c*H has sections graded by lattice points of the simplex
// {x, y >= 0, x + y <= c}, the point (x, y) contributing sections of beta(x,y).
template <class F>
NSClassT<F> beta_at(const BundleSpec& spec, const BundleDivisor& div, const F& x, const F& y) {
    NSClass t1 = spec.twist1(), t2 = spec.twist2();
    NSClassT<F> b{F(div.base.x), F(div.base.y), F(div.base.z)};
    b.x += x * F(t1.x) + y * F(t2.x);
    b.y += x * F(t1.y) + y * F(t2.y);
    b.z += x * F(t1.z) + y * F(t2.z);
    return b;
}

inline NSClass beta(const BundleSpec& spec, const BundleDivisor& div, const Rat& x, const Rat& y) {
    return beta_at<Rat>(spec, div, x, y);
}
inline QClass beta(const BundleSpec& spec, const BundleDivisor& div, const QuadNum& x, const QuadNum& y) {
    return beta_at<QuadNum>(spec, div, x, y);
}

enum class RegionKind { ExactPolygon, Sandwich };

// The compact convex set of twist parameters with beta(x,y) pseudoeffective
// (= nef here), intersected with the simplex {x,y >= 0, x+y <= c}.
//
// ExactPolygon: `vertices` is the region, exactly, with vertices in Q(sqrt 6).
// Sandwich: `vertices` is a certified inner polygon and `outer` a certified
// outer polygon, inner <= region <= outer; refined by `segments`.
struct Region {
    RegionKind kind = RegionKind::ExactPolygon;
    Polygon vertices;
    Polygon outer;
    int segments = 0;  // sandwich refinement actually used
    std::vector<std::string> description;  // human-readable active constraints
};

struct BoxOptions {
    int sandwich_segments = 64;
};

// Computes the twist region for pi*M + c*H. Throws EmptyRegion when no point
// of the simplex is nef (in particular when c < 0, the empty simplex).
Region box(const BundleSpec& spec, const BundleDivisor& div, const BoxOptions& opts = {});

// K_X = pi*(K_S + (L1-L0) + (L2-L0)) - 3H with K_S trivial.
BundleDivisor canonical_class(const BundleSpec& spec);

struct BignessResult {
    bool big = false;
    std::optional<std::array<Rat, 2>> witness;  // rational (x, y) with beta ample, x+y < c
};

// Bigness criterion: the box contains a rational point (x, y) with x + y < c
// and beta(x, y) ample. Decided through the exact volume; the witness is
// produced by a rational search inside the region.
BignessResult is_big(const BundleSpec& spec, const BundleDivisor& div);

}  // namespace bigvol
