#include "bigvol/volume_engine.hpp"

#include <mutex>

#include "bigvol/parallel.hpp"

namespace bigvol {

QuadDensity QuadDensity::of(const BundleSpec& spec, const BundleDivisor& div) {
    NSClass t1 = spec.twist1(), t2 = spec.twist2();
    return {intersect(div.base, div.base),
            Rat(2) * intersect(div.base, t1),
            Rat(2) * intersect(div.base, t2),
            intersect(t1, t1),
            Rat(2) * intersect(t1, t2),
            intersect(t2, t2)};
}

Rat QuadDensity::eval(const Rat& x, const Rat& y) const {
    return c00 + c10 * x + c01 * y + c20 * x * x + c11 * x * y + c02 * y * y;
}

QuadNum QuadDensity::eval(const QPoint& p) const {
    return QuadNum(c00) + QuadNum(c10) * p.x + QuadNum(c01) * p.y + QuadNum(c20) * p.x * p.x +
           QuadNum(c11) * p.x * p.y + QuadNum(c02) * p.y * p.y;
}

QuadNum integrate_quadratic(const QuadDensity& q, const Polygon& poly) {
    QuadNum total = 0;
    if (poly.size() < 3) return total;
    const QuadNum half(rat(1, 2)), third(rat(1, 3));
    for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
        const QPoint& a = poly[0];
        const QPoint& b = poly[i];
        const QPoint& c = poly[i + 1];
        QuadNum area = cross(a, b, c) * half;  // positive: CCW input
        QPoint m1{(a.x + b.x) * half, (a.y + b.y) * half};
        QPoint m2{(b.x + c.x) * half, (b.y + c.y) * half};
        QPoint m3{(a.x + c.x) * half, (a.y + c.y) * half};
        total += area * third * (q.eval(m1) + q.eval(m2) + q.eval(m3));
    }
    return total;
}

namespace {

// Upper bound for q over the axis-aligned bounding box of a polygon in the
// nonnegative quadrant; used for the sandwich upper volume bound.
QuadNum density_upper_bound(const QuadDensity& q, const Polygon& poly) {
    if (poly.empty()) return QuadNum(rat(0));
    QuadNum xlo = poly[0].x, xhi = poly[0].x, ylo = poly[0].y, yhi = poly[0].y;
    for (const auto& p : poly) {
        if (p.x < xlo) xlo = p.x;
        if (p.x > xhi) xhi = p.x;
        if (p.y < ylo) ylo = p.y;
        if (p.y > yhi) yhi = p.y;
    }
    auto term = [](const Rat& coeff, const QuadNum& lo, const QuadNum& hi) {
        QuadNum c(coeff);
        QuadNum a = c * lo, b = c * hi;
        return a > b ? a : b;
    };
    QuadNum out(q.c00);
    out += term(q.c10, xlo, xhi);
    out += term(q.c01, ylo, yhi);
    out += term(q.c20, xlo * xlo, xhi * xhi);
    out += term(q.c11, xlo * ylo, xhi * yhi);
    out += term(q.c02, ylo * ylo, yhi * yhi);
    return out;
}

}  // namespace

VolumeResult volume_of_region(const QuadDensity& q, const Region& r) {
    const QuadNum twelve(rat(12));
    if (r.kind == RegionKind::ExactPolygon) {
        QuadNum v = twelve * integrate_quadratic(q, r.vertices);
        return {v, v, true, 0};
    }
    if (r.outer.empty()) return {QuadNum(rat(0)), QuadNum(rat(0)), true, r.segments};
    QuadNum lower = twelve * integrate_quadratic(q, r.vertices);
    QuadNum slack = (polygon_area2(r.outer) - polygon_area2(r.vertices)) / QuadNum(rat(2));
    QuadNum qmax = density_upper_bound(q, r.outer);
    if (qmax.sign() < 0) qmax = QuadNum(rat(0));
    QuadNum upper = lower + twelve * slack * qmax;
    return {lower, upper, false, r.segments};
}

VolumeResult volume(const BundleSpec& spec, const BundleDivisor& div, const VolumeOptions& opts) {
    QuadDensity q = QuadDensity::of(spec, div);
    Region r;
    try {
        r = box(spec, div, opts.box);
    } catch (const EmptyRegion&) {
        return {QuadNum(rat(0)), QuadNum(rat(0)), true, 0};
    }
    VolumeResult res = volume_of_region(q, r);
    int seg = r.kind == RegionKind::Sandwich ? r.segments : 0;
    while (!res.exact && seg < opts.max_segments) {
        QuadNum mid = abs(res.value());
        QuadNum tol = QuadNum(opts.rel_tol) * (mid > QuadNum(rat(1)) ? mid : QuadNum(rat(1)));
        if (res.width() <= tol) break;
        seg *= 2;
        r = box(spec, div, BoxOptions{seg});
        res = volume_of_region(q, r);
    }
    return res;
}

Rat h0_surface(const NSClass& cl) {
    if (!is_nef(cl)) return rat(0);
    Rat s = intersect(cl, cl);
    if (sgn(s) <= 0) return rat(0);
    return s / 2;
}

Rat h0_bundle(const BundleSpec& spec, const BundleDivisor& div, long m, int parallelism) {
    if (m <= 0) throw std::invalid_argument("h0_bundle: m must be positive");
    Rat cm = div.h_coeff * Rat(m);
    if (sgn(cm) < 0) return rat(0);
    Int top_i = floor_rat(cm);
    if (!top_i.fits_slong_p()) throw std::invalid_argument("h0_bundle: simplex too large");
    long top = top_i.get_si();
    NSClass t1 = spec.twist1(), t2 = spec.twist2();
    NSClass M = Rat(m) * div.base;
    std::vector<Rat> row_sums(static_cast<std::size_t>(top) + 1, rat(0));
    parallel_for(static_cast<std::size_t>(top) + 1, parallelism, [&](std::size_t i) {
        NSClass cl = M + Rat(static_cast<long>(i)) * t1;
        Rat acc = rat(0);
        for (long j = 0; j + static_cast<long>(i) <= top; ++j) {
            acc += h0_surface(cl);
            cl = cl + t2;
        }
        row_sums[i] = acc;
    });
    Rat total = rat(0);
    for (const auto& s : row_sums) total += s;
    return total;
}

namespace {

// Exact solve of the 5x5 Vandermonde system for a degree-4 fit through
// (t_i, v_i); Gaussian elimination in Q(sqrt 6).
std::vector<QuadNum> fit_poly4(const std::vector<Rat>& ts, const std::vector<QuadNum>& vs) {
    const std::size_t n = 5;
    std::vector<std::vector<QuadNum>> m(n, std::vector<QuadNum>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        QuadNum p(rat(1));
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = p;
            p *= QuadNum(ts[i]);
        }
        m[i][n] = vs[i];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].sign() == 0) ++piv;
        if (piv == n) throw std::logic_error("fit_poly4: singular Vandermonde (duplicate nodes?)");
        std::swap(m[col], m[piv]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].sign() == 0) continue;
            QuadNum f = m[r][col] / m[col][col];
            for (std::size_t j = col; j <= n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    std::vector<QuadNum> coef(n);
    for (std::size_t i = 0; i < n; ++i) coef[i] = m[i][n] / m[i][i];
    return coef;
}

QuadNum eval_poly(const std::vector<QuadNum>& coef, const Rat& t) {
    QuadNum acc(rat(0));
    for (std::size_t i = coef.size(); i-- > 0;) acc = acc * QuadNum(t) + coef[i];
    return acc;
}

}  // namespace

PosIntResult one_sided_volume_derivative(const std::function<VolumeResult(const Rat&)>& vol_at,
                                         const VolumeResult& v0, const Rat& h) {
    Rat step = h;
    for (int attempt = 0; attempt < 12; ++attempt, step /= 16) {
        std::vector<Rat> nodes;
        Rat t = step;
        for (int i = 0; i < 6; ++i) {  // h .. h/32
            nodes.push_back(t);
            t /= 2;
        }
        PosIntResult out;
        std::vector<VolumeResult> vols(nodes.size());
        bool degenerate_tail = false;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            vols[i] = vol_at(nodes[i]);
            if (vols[i].upper.sign() <= 0) {
                if (i <= 3) throw StepUnderflow();
                degenerate_tail = true;  // shrink h and retry
                break;
            }
            out.probes.push_back({nodes[i], vols[i].lower, vols[i].upper, vols[i].exact});
        }
        if (degenerate_tail) continue;
        bool all_exact = v0.exact;
        for (const auto& v : vols) all_exact = all_exact && v.exact;

        if (all_exact) {
            std::vector<Rat> ts(nodes.begin(), nodes.begin() + 5);
            std::vector<QuadNum> vs;
            for (int i = 0; i < 5; ++i) vs.push_back(vols[i].lower);
            auto coef = fit_poly4(ts, vs);
            if (eval_poly(coef, nodes[5]) == vols[5].lower && coef[0] == v0.lower) {
                out.value = coef[1] / QuadNum(rat(4));
                out.polynomial_path = true;
                return out;
            }
        }
        // one-sided Richardson extrapolation of (vol(t) - vol(0))/t on {h,...,h/8}
        std::vector<QuadNum> d;
        for (int i = 0; i < 4; ++i) d.push_back((vols[i].value() - v0.value()) / QuadNum(nodes[i]));
        for (int j = 1; j < 4; ++j) {
            QuadNum w(rat((1L << j) - 1));
            for (int i = 3; i >= j; --i) d[i] = d[i] + (d[i] - d[i - 1]) / w;
        }
        out.value = d[3] / QuadNum(rat(4));
        out.polynomial_path = false;
        return out;
    }
    throw StepUnderflow("volume derivative: family degenerates under repeated step shrinking");
}

PosIntResult pos_intersection(const BundleSpec& spec, const BundleDivisor& L, const BundleDivisor& D,
                              const DerivOptions& opts) {
    VolumeResult v0 = volume(spec, L, opts.vol);
    if (v0.lower.sign() <= 0) throw NotBig("pos_intersection: L is not big");
    auto vol_at = [&](const Rat& t) { return volume(spec, L + t * D, opts.vol); };
    return one_sided_volume_derivative(vol_at, v0, opts.h);
}

PosIntResult r1(const BundleSpec& spec, const BundleDivisor& L, const DerivOptions& opts) {
    return pos_intersection(spec, L, canonical_class(spec), opts);
}

}  // namespace bigvol
