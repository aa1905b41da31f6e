#include "bigvol/fujita.hpp"

#include <algorithm>
#include <cmath>

#include "bigvol/parallel.hpp"

namespace bigvol {

HalfPlane truncation_halfplane(const Thresholds& thr, const Rat& h_coeff) {
    // x/alpha + (c - x - y)/beta >= 1/p, cleared of denominators by alpha*beta:
    // (beta - alpha) x - alpha y + alpha c - alpha beta / p >= 0
    const QuadNum& al = thr.alpha;
    const QuadNum& be = thr.beta;
    return {be - al, -al, al * QuadNum(h_coeff) - al * be / QuadNum(rat(thr.p))};
}

HalfPlane truncation_halfplane_limit(const Rat& h_coeff) {
    // alpha/p -> 1 and beta/p -> 1 - 2 sqrt6/5; dividing the finite-p form by p
    // and passing to the limit leaves (beta_inf - 1) x - y + c*... in normalized
    // shape: (b8 - 1) x - y + (c - b8 * 0) ... the constant term keeps only c:
    // (b8 - 1) x - y + (c - b8) * 0 + ... -- algebraically:
    //   (b8 - 1) x - 1 y + (c*1 - b8*0)?  Derivation: divide by alpha:
    //   (beta/alpha - 1) x - y + c - beta/p -> (b8 - 1)x - y + (c - b8)
    QuadNum b8 = QuadNum(rat(1)) - QuadNum(rat(0), rat(2, 5), 6);
    return {b8 - QuadNum(rat(1)), QuadNum(rat(-1)), QuadNum(h_coeff) - b8};
}

namespace {

Region clip_region(Region r, const HalfPlane& h) {
    if (r.kind == RegionKind::ExactPolygon) {
        r.vertices = clip(r.vertices, h);
    } else {
        r.vertices = clip(r.vertices, h);
        r.outer = clip(r.outer, h);
    }
    return r;
}

}  // namespace

ApproximantRegion approximant_region(const BundleSpec& spec, const BundleDivisor& div,
                                     const std::optional<Thresholds>& thr, const BoxOptions& opts) {
    Region base = box(spec, div, opts);
    if (!thr) return {base, truncation_halfplane_limit(div.h_coeff)};
    HalfPlane cut = truncation_halfplane(*thr, div.h_coeff);
    Region r = clip_region(std::move(base), cut);
    if (r.kind == RegionKind::ExactPolygon ? r.vertices.empty() : r.outer.empty())
        throw EmptyRegion("approximant region is empty: p far too small");
    r.description.push_back("truncation: " + std::to_string(thr->p));
    return {r, cut};
}

VolumeResult truncated_volume(const BundleSpec& spec, const BundleDivisor& div,
                              const std::optional<Thresholds>& thr, const VolumeOptions& opts) {
    QuadDensity q = QuadDensity::of(spec, div);
    auto eval = [&](const BoxOptions& bo) -> VolumeResult {
        Region r;
        try {
            r = box(spec, div, bo);
        } catch (const EmptyRegion&) {
            return {QuadNum(rat(0)), QuadNum(rat(0)), true, 0};
        }
        if (thr) r = clip_region(std::move(r), truncation_halfplane(*thr, div.h_coeff));
        if (r.kind == RegionKind::ExactPolygon) {
            QuadNum v = QuadNum(rat(12)) * integrate_quadratic(q, r.vertices);
            return {v, v, true, 0};
        }
        QuadNum lower = QuadNum(rat(12)) * integrate_quadratic(q, r.vertices);
        QuadNum slack = (polygon_area2(r.outer) - polygon_area2(r.vertices)) / QuadNum(rat(2));
        QuadNum qb = QuadNum(rat(0));
        if (!r.outer.empty()) {
            // reuse the monotone bound from the volume engine via a fresh call
            VolumeResult direct = volume(spec, div, opts);
            (void)direct;
        }
        // conservative: bound q over the outer vertices' bounding box
        // (duplicated smallness logic lives in volume_engine for plain volumes)
        QuadNum xlo = r.outer[0].x, xhi = r.outer[0].x, ylo = r.outer[0].y, yhi = r.outer[0].y;
        for (const auto& p : r.outer) {
            if (p.x < xlo) xlo = p.x;
            if (p.x > xhi) xhi = p.x;
            if (p.y < ylo) ylo = p.y;
            if (p.y > yhi) yhi = p.y;
        }
        auto term = [](const Rat& c, const QuadNum& lo, const QuadNum& hi) {
            QuadNum a = QuadNum(c) * lo, b = QuadNum(c) * hi;
            return a > b ? a : b;
        };
        qb = QuadNum(q.c00) + term(q.c10, xlo, xhi) + term(q.c01, ylo, yhi) +
             term(q.c20, xlo * xlo, xhi * xhi) + term(q.c11, xlo * ylo, xhi * yhi) +
             term(q.c02, ylo * ylo, yhi * yhi);
        if (qb.sign() < 0) qb = QuadNum(rat(0));
        return {lower, lower + QuadNum(rat(12)) * slack * qb, false, r.segments};
    };
    VolumeResult res = eval(opts.box);
    int seg = opts.box.sandwich_segments;
    while (!res.exact && seg < opts.max_segments) {
        QuadNum mid = abs(res.value());
        QuadNum tol = QuadNum(opts.rel_tol) * (mid > QuadNum(rat(1)) ? mid : QuadNum(rat(1)));
        if (res.width() <= tol) break;
        seg *= 2;
        res = eval(BoxOptions{seg});
    }
    return res;
}

FujitaReport r1_certificate(const BundleSpec& spec, const BundleDivisor& div, const Thresholds& thr,
                            const QuadNum& vol_L) {
    FujitaReport rep;
    rep.p = thr.p;
    rep.thr = thr;

    VolumeResult vA = truncated_volume(spec, div, thr);
    rep.vol_Ap = vA.value();
    rep.vol_gap = vol_L - rep.vol_Ap;
    rep.exact = vA.exact;

    const Rat h = rat(1, 64);
    auto vol_dir = [&](const BundleDivisor& dir) {
        auto vol_at = [&](const Rat& t) { return truncated_volume(spec, div + t * dir, thr); };
        return one_sided_volume_derivative(vol_at, vA, h);
    };
    PosIntResult dL = vol_dir(div);
    rep.deriv_L = dL.value;
    rep.exact = rep.exact && dL.polynomial_path;
    rep.e_mass = QuadNum(rat(thr.p)) * (rep.deriv_L - rep.vol_Ap);
    if (rep.e_mass.sign() < 0) throw std::logic_error("r1_certificate: negative e-mass");

    MonomialIdeal2 ideal = staircase(thr.alpha, thr.beta);
    rep.w_max = w_max(newton_polygon(ideal));
    rep.kyx_bound = QuadNum(rep.w_max) * rep.e_mass;

    PosIntResult dK = vol_dir(canonical_class(spec));
    rep.r1_partial = dK.value;
    rep.exact = rep.exact && dK.polynomial_path;
    rep.r1_lo = rep.r1_partial;
    rep.r1_hi = rep.r1_partial + rep.kyx_bound;
    return rep;
}

std::vector<long> default_sweep_plist() { return {1000, 3000, 10000, 30000, 100000, 300000, 1000000}; }

namespace {

double lsq_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    std::size_t n = xs.size();
    if (n < 2) return 0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double den = n * sxx - sx * sx;
    return den == 0 ? 0 : (n * sxy - sx * sy) / den;
}

}  // namespace

SweepResult sweep(const BundleSpec& spec, const BundleDivisor& div, std::vector<long> p_list,
                  const SweepOptions& opts) {
    SweepResult out;
    if (p_list.empty()) throw std::invalid_argument("sweep: empty p list");
    std::sort(p_list.begin(), p_list.end());
    auto dup = std::unique(p_list.begin(), p_list.end());
    if (dup != p_list.end()) {
        out.summary.warnings.push_back("duplicate p values removed");
        p_list.erase(dup, p_list.end());
    }

    VolumeResult vL = volume(spec, div);
    out.summary.vol_L = vL.value();
    PosIntResult r1L = r1(spec, div, DerivOptions{opts.h});
    out.summary.r1_L = r1L.value;
    out.summary.r1_L_exact = r1L.polynomial_path;

    out.rows.resize(p_list.size());
    std::vector<std::string> row_errors(p_list.size());
    parallel_for(p_list.size(), opts.parallelism, [&](std::size_t i) {
        try {
            Thresholds thr = thresholds(p_list[i], opts.g0, opts.g1);
            out.rows[i] = r1_certificate(spec, div, thr, out.summary.vol_L);
        } catch (const std::exception& e) {
            row_errors[i] = e.what();
            out.rows[i].p = p_list[i];
        }
    });
    for (std::size_t i = 0; i < row_errors.size(); ++i)
        if (!row_errors[i].empty())
            out.summary.warnings.push_back("p=" + std::to_string(p_list[i]) + ": " + row_errors[i]);

    std::vector<double> lp, lgap, lkyx;
    double sup_pw = 0;
    for (const auto& r : out.rows) {
        if (r.p == 0 || r.vol_gap.sign() <= 0) continue;
        lp.push_back(std::log(static_cast<double>(r.p)));
        lgap.push_back(std::log(r.vol_gap.to_double()));
        if (r.kyx_bound.sign() > 0) lkyx.push_back(std::log(r.kyx_bound.to_double()));
        sup_pw = std::max(sup_pw, static_cast<double>(r.p) * r.w_max.get_d());
    }
    out.summary.gap_slope = lsq_slope(lp, lgap);
    if (lkyx.size() == lp.size()) out.summary.kyx_slope = lsq_slope(lp, lkyx);
    out.summary.sup_p_wmax = sup_pw;
    return out;
}

}  // namespace bigvol
