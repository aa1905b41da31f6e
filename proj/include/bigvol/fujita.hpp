#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bigvol/multiplier_rees.hpp"
#include "bigvol/volume_engine.hpp"

namespace bigvol {

// Twist region of the Fujita approximant A_p = mu_p*(L) - (1/p)E_p: the box of
// L cut by the truncation half-plane
//
//     x/alpha_p + (c - x - y)/beta_p >= 1/p
//
// in chart-exponent coordinates (m1, m2)/m = (x, c - x - y), where c is the
// H-coefficient of the divisor. Sections surviving the cut are exactly those
// vanishing to order (m/p) ord_E along every Rees divisor of the ideal.
struct ApproximantRegion {
    Region region;
    HalfPlane truncation;  // the cutting half-plane (QuadNum coefficients)
};

// The truncation half-plane for a divisor with H-coefficient c:
// (beta - alpha) x - alpha y + (alpha c - alpha beta / p) >= 0.
HalfPlane truncation_halfplane(const Thresholds& thr, const Rat& h_coeff);

// The p -> infinity limit of the truncation boundary (used by the
// orientation-pinning identity): beta/p -> 1 - 2 sqrt6/5, alpha/p -> 1.
HalfPlane truncation_halfplane_limit(const Rat& h_coeff);

// Region of A_p for the divisor `div` (normally the Nakayama L). Passing
// nullopt for thr drops the constraint (the formal p = infinity input).
ApproximantRegion approximant_region(const BundleSpec& spec, const BundleDivisor& div,
                                     const std::optional<Thresholds>& thr,
                                     const BoxOptions& opts = {});

// vol(A_p + t*D) in the truncated-box picture: the box of div + tD cut at the
// fixed threshold 1/p.
VolumeResult truncated_volume(const BundleSpec& spec, const BundleDivisor& div,
                              const std::optional<Thresholds>& thr, const VolumeOptions& opts = {});

// Per-p certificate row. r1(A_p) = A_p^3.mu*K_X + A_p^3.K_{Y_p/X} lies in
// [r1_partial, r1_partial + kyx_bound] since 0 <= A_p^3.K_{Y_p/X}
// <= w_max * e_mass.
struct FujitaReport {
    long p = 0;
    Thresholds thr;
    QuadNum vol_Ap;
    QuadNum vol_gap;   // vol(L) - vol(A_p) >= 0
    QuadNum deriv_L;   // A_p^3 . mu*L
    QuadNum e_mass;    // A_p^3 . E_p = p (deriv_L - vol_Ap)
    Rat w_max;
    QuadNum kyx_bound;  // w_max * e_mass
    QuadNum r1_partial;  // A_p^3 . mu*K_X
    QuadNum r1_lo, r1_hi;
    bool exact = true;  // all probes went through the exact polynomial path
};

FujitaReport r1_certificate(const BundleSpec& spec, const BundleDivisor& div, const Thresholds& thr,
                            const QuadNum& vol_L);

struct SweepOptions {
    long g0 = 1, g1 = 1;
    int parallelism = 0;  // 0: hardware concurrency
    Rat h = rat(1, 64);
};

struct SweepSummary {
    QuadNum vol_L;
    QuadNum r1_L;          // derivative route on the untruncated bundle
    bool r1_L_exact = true;
    double gap_slope = 0;  // log-log least squares, decimal renderings
    double kyx_slope = 0;
    double sup_p_wmax = 0;
    std::vector<std::string> warnings;
};

struct SweepResult {
    std::vector<FujitaReport> rows;  // ordered by p
    SweepSummary summary;
};

// Default sweep used by the CLI: {1e3, 3e3, 1e4, 3e4, 1e5, 3e5, 1e6}.
std::vector<long> default_sweep_plist();

// Runs the certificate for each p (deduplicated, ascending); rows are
// independent and run in parallel.
SweepResult sweep(const BundleSpec& spec, const BundleDivisor& div, std::vector<long> p_list,
                  const SweepOptions& opts = {});

}  // namespace bigvol
