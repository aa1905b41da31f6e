#pragma once

#include <utility>
#include <vector>

#include "bigvol/errors.hpp"
#include "bigvol/quadnum.hpp"

namespace bigvol {

// Twist thresholds for the multiplier ideal of M_p = p*L - G with
// G = g0*L0 + g1*H on the Nakayama bundle. In chart coordinates the ideal is
// monomial, generated by the exponents strictly beyond the line
// m1/alpha + m2/beta = 1.
struct Thresholds {
    long p = 0;
    long g0 = 0, g1 = 0;
    QuadNum alpha, beta, d;
};

// Exact thresholds; throws DegenerateThreshold when d <= 0 or beta <= 0
// (p too small for the construction).
Thresholds thresholds(long p, long g0, long g1);

// Minimal monomial generators (an antichain under componentwise <=, sorted by
// m1 ascending) of the ideal < z1^m1 z2^m2 : m1/alpha + m2/beta > 1 >.
struct MonomialIdeal2 {
    std::vector<std::pair<Int, Int>> gens;
};

// Streams one generator per occupied m2-level; O(min(alpha, beta)) work.
// The strict inequality is resolved exactly (boundary lattice points excluded).
MonomialIdeal2 staircase(const QuadNum& alpha, const QuadNum& beta);

// Lower-left convex hull of the generator staircase, from P0 = (0, floor(beta)+1)
// to Pr = (floor(alpha)+1, 0).
struct NewtonPolygon {
    std::vector<std::pair<Int, Int>> vertices;
};

NewtonPolygon newton_polygon(const MonomialIdeal2& ideal);

// Per-side Rees valuation data: primitive inward normal (a, b), the value
// ord = a x + b y of the side functional on the polygon, log discrepancy
// A = a + b, slope ratio tau = b/a, and w = A/ord.
struct ReesDatum {
    int side = 0;  // 1-based
    Int a, b;
    Int ord;
    Int A;
    Rat tau;
    Rat w;
};

std::vector<ReesDatum> rees_data(const NewtonPolygon& np);

Rat w_max(const NewtonPolygon& np);

// Analytic upper bound for max(w(E_1), w(E_r)) -- and hence for w_max, since
// the side-to-side difference identity pushes the maximum to the endpoints:
//   w(E_1) <= 1/beta + (floor(beta)+1-beta)/(floor(beta)+1)
//                + (beta/(floor(beta)+1)) * (1/alpha)
// plus the mirrored bound with alpha and beta exchanged.
QuadNum endpoint_bound(const QuadNum& alpha, const QuadNum& beta);

}  // namespace bigvol
