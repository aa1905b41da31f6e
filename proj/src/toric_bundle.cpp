#include "bigvol/toric_bundle.hpp"

#include <cmath>
#include <sstream>

namespace bigvol {
namespace {

// Rational affine form c0 + cx*x + cy*y on the twist plane.
struct LinForm {
    Rat c0, cx, cy;
    Rat eval(const Rat& x, const Rat& y) const { return c0 + cx * x + cy * y; }
    QuadNum eval(const QPoint& p) const { return QuadNum(c0) + QuadNum(cx) * p.x + QuadNum(cy) * p.y; }
    HalfPlane half_plane() const { return {QuadNum(cx), QuadNum(cy), QuadNum(c0)}; }
};

// Rational conic A x^2 + B xy + C y^2 + D x + E y + F.
struct Conic {
    Rat A, B, C, D, E, F;

    Rat eval(const Rat& x, const Rat& y) const {
        return A * x * x + B * x * y + C * y * y + D * x + E * y + F;
    }
    QuadNum eval(const QPoint& p) const {
        return QuadNum(A) * p.x * p.x + QuadNum(B) * p.x * p.y + QuadNum(C) * p.y * p.y + QuadNum(D) * p.x +
               QuadNum(E) * p.y + QuadNum(F);
    }
    bool quadratic_part_zero() const { return sgn(A) == 0 && sgn(B) == 0 && sgn(C) == 0; }
    // 4 * det of the symmetric matrix [[A,B/2,D/2],[B/2,C,E/2],[D/2,E/2,F]].
    Rat det3x4() const {
        return Rat(4) * A * C * F - A * E * E - B * B * F + B * D * E - C * D * D;
    }
    Conic transposed() const { return {C, B, A, E, D, F}; }
};

// sqrt of a nonnegative rational inside Q(sqrt 6), if representable there.
std::optional<QuadNum> sqrt_in_field(const Rat& v) {
    int s = sgn(v);
    if (s < 0) return std::nullopt;
    if (s == 0) return QuadNum(rat(0));
    Int nd = v.get_num() * v.get_den();
    Int root;
    if (is_perfect_square(nd, &root)) return QuadNum(rat(root, v.get_den()));
    if (nd % 6 == 0 && is_perfect_square(nd / 6, &root))
        return QuadNum(rat(0), rat(root, v.get_den()), 6);
    return std::nullopt;
}

struct LinePair {
    HalfPlane l1, l2;
    int k_sign;  // sign of the scale k in Q = k * l1 * l2
};

// Factorization of a degenerate conic over Q(sqrt 6).
struct DegenerateSplit {
    enum Kind { NoConstraint, EmptyPlane, PointOnly, LineOnly, TwoLines } kind;
    LinePair lines{};     // TwoLines
    HalfPlane line{};     // LineOnly: the zero line (as a form)
    Rat px, py;           // PointOnly
};

std::optional<DegenerateSplit> split_degenerate(const Conic& q);

// A != 0 branch: solve Q as a quadratic in x; det3 == 0 makes the inner
// discriminant (disc2) y^2 + (2BD-4AE) y + (D^2-4AF) a perfect square.
std::optional<DegenerateSplit> split_lead_x(const Conic& q) {
    const Rat disc2 = q.B * q.B - Rat(4) * q.A * q.C;
    int ds = sgn(disc2);
    if (ds > 0) {
        auto p = sqrt_in_field(disc2);
        if (!p) return std::nullopt;  // splits only over a foreign quadratic field
        QuadNum qq = (QuadNum(q.B) * QuadNum(q.D) - QuadNum(rat(2)) * QuadNum(q.A) * QuadNum(q.E)) / *p;
        if (!(qq * qq == QuadNum(q.D * q.D - Rat(4) * q.A * q.F))) return std::nullopt;
        DegenerateSplit out{DegenerateSplit::TwoLines};
        QuadNum twoA = QuadNum(Rat(2) * q.A);
        out.lines = {{twoA, QuadNum(q.B) - *p, QuadNum(q.D) - qq},
                     {twoA, QuadNum(q.B) + *p, QuadNum(q.D) + qq},
                     sgn(q.A)};
        return out;
    }
    if (ds == 0) {
        // rank-1 quadratic part: parallel lines, a double line, or no real zero
        if (sgn(Rat(2) * q.B * q.D - Rat(4) * q.A * q.E) != 0) return std::nullopt;  // parabola: not degenerate
        Rat s = q.D * q.D - Rat(4) * q.A * q.F;
        if (sgn(s) < 0) {
            return DegenerateSplit{sgn(q.A) > 0 ? DegenerateSplit::NoConstraint : DegenerateSplit::EmptyPlane};
        }
        auto root = sqrt_in_field(s);
        if (!root) return std::nullopt;
        QuadNum twoA = QuadNum(Rat(2) * q.A);
        if (root->sign() == 0) {
            // double line: Q = (2Ax+By+D)^2 / (4A)
            DegenerateSplit out{sgn(q.A) > 0 ? DegenerateSplit::NoConstraint : DegenerateSplit::LineOnly};
            out.line = {twoA, QuadNum(q.B), QuadNum(q.D)};
            return out;
        }
        DegenerateSplit out{DegenerateSplit::TwoLines};
        out.lines = {{twoA, QuadNum(q.B), QuadNum(q.D) - *root},
                     {twoA, QuadNum(q.B), QuadNum(q.D) + *root},
                     sgn(q.A)};
        return out;
    }
    // definite quadratic part: zero set is a single point (det3 == 0)
    if (sgn(q.A) > 0) return DegenerateSplit{DegenerateSplit::NoConstraint};
    // center solves 2Ax + By + D = 0, Bx + 2Cy + E = 0; disc2 < 0 makes it unique
    Rat det = Rat(4) * q.A * q.C - q.B * q.B;
    DegenerateSplit out{DegenerateSplit::PointOnly};
    out.px = (q.B * q.E - Rat(2) * q.C * q.D) / det;
    out.py = (q.B * q.D - Rat(2) * q.A * q.E) / det;
    return out;
}

std::optional<DegenerateSplit> split_degenerate(const Conic& q) {
    if (sgn(q.A) != 0) return split_lead_x(q);
    if (sgn(q.C) != 0) {
        auto t = split_lead_x(q.transposed());
        if (!t) return std::nullopt;
        if (t->kind == DegenerateSplit::TwoLines) {
            std::swap(t->lines.l1.a, t->lines.l1.b);
            std::swap(t->lines.l2.a, t->lines.l2.b);
        } else if (t->kind == DegenerateSplit::LineOnly) {
            std::swap(t->line.a, t->line.b);
        } else if (t->kind == DegenerateSplit::PointOnly) {
            std::swap(t->px, t->py);
        }
        return t;
    }
    // A == C == 0, B != 0: Q = Bxy + Dx + Ey + F = B(x + E/B)(y + D/B) when F = DE/B
    if (!(q.F * q.B == q.D * q.E)) return std::nullopt;
    DegenerateSplit out{DegenerateSplit::TwoLines};
    out.lines = {{QuadNum(rat(1)), QuadNum(rat(0)), QuadNum(q.E / q.B)},
                 {QuadNum(rat(0)), QuadNum(rat(1)), QuadNum(q.D / q.B)},
                 sgn(q.B)};
    return out;
}

std::string render_halfplane(const HalfPlane& h) {
    std::ostringstream os;
    os << "(" << to_string(h.a) << ")x + (" << to_string(h.b) << ")y + (" << to_string(h.c) << ") >= 0";
    return os.str();
}

struct BoxBuilder {
    const BundleSpec& spec;
    const BundleDivisor& div;
    LinForm la, lb, lc;  // diagonal coordinates of beta(x,y)
    Conic q;             // c^2 - a^2 - 3 b~^2 = 6 beta^2
    std::vector<LinForm> linear;  // simplex + c_beta constraints (for ray casting)

    BoxBuilder(const BundleSpec& s, const BundleDivisor& d) : spec(s), div(d) {
        NSClass t1 = s.twist1(), t2 = s.twist2();
        auto dM = to_diag(d.base), d1 = to_diag(t1), d2 = to_diag(t2);
        la = {dM.a, d1.a, d2.a};
        lb = {dM.b_coeff, d1.b_coeff, d2.b_coeff};
        lc = {dM.c, d1.c, d2.c};
        Rat i00 = intersect(d.base, d.base), i01 = intersect(d.base, t1), i02 = intersect(d.base, t2);
        Rat i11 = intersect(t1, t1), i12 = intersect(t1, t2), i22 = intersect(t2, t2);
        q = {Rat(6) * i11, Rat(12) * i12, Rat(6) * i22, Rat(12) * i01, Rat(12) * i02, Rat(6) * i00};
        linear = {{rat(0), rat(1), rat(0)},          // x >= 0
                  {rat(0), rat(0), rat(1)},          // y >= 0
                  {d.h_coeff, rat(-1), rat(-1)},     // c - x - y >= 0
                  lc};                               // c_beta >= 0
    }

    bool member(const QPoint& p) const {
        for (const auto& f : linear)
            if (f.eval(p).sign() < 0) return false;
        return q.eval(p).sign() >= 0;
    }

    Polygon base_polygon() const {
        const Rat& c = div.h_coeff;
        Polygon simplex;
        if (sgn(c) == 0) {
            simplex = {{QuadNum(rat(0)), QuadNum(rat(0))}};
        } else {
            simplex = {{QuadNum(rat(0)), QuadNum(rat(0))},
                       {QuadNum(c), QuadNum(rat(0))},
                       {QuadNum(rat(0)), QuadNum(c)}};
        }
        return clip(simplex, lc.half_plane());
    }

    Region sandwich(Polygon base_poly, int segments, std::vector<std::string> desc) const;
    Region build(const BoxOptions& opts) const;
};

Rat rationalize(double v, long den = 1 << 16) {
    if (!std::isfinite(v)) return rat(0);
    double scaled = v * static_cast<double>(den);
    if (std::abs(scaled) > 9e15) return rat(0);
    return rat(static_cast<long>(std::llround(scaled)), den);
}

Region BoxBuilder::sandwich(Polygon outer, int segments, std::vector<std::string> desc) const {
    int k = segments < 8 ? 8 : segments;
    std::vector<LinForm> constraints = linear;
    // Supporting half-planes of the nef cone: c >= u*a + sqrt(3) v * b for any
    // (u, v) with u^2 + 3 v^2 = 1. Rational points on that ellipse come from
    // the parametrization u = (1-3s^2)/(1+3s^2), v = 2s/(1+3s^2).
    const double pi = 3.14159265358979323846;
    for (int j = 0; j < k; ++j) {
        double phi = 2.0 * pi * j / k;
        Rat u, v;
        if (std::abs(phi - pi) < 1e-12) {
            u = rat(-1);
            v = rat(0);
        } else {
            Rat s = rationalize(std::tan(phi / 2) / std::sqrt(3.0));
            Rat den = Rat(1) + Rat(3) * s * s;
            u = (Rat(1) - Rat(3) * s * s) / den;
            v = Rat(2) * s / den;
        }
        LinForm h{lc.c0 - u * la.c0 - Rat(3) * v * lb.c0, lc.cx - u * la.cx - Rat(3) * v * lb.cx,
                  lc.cy - u * la.cy - Rat(3) * v * lb.cy};
        bool all_inside = true;
        for (const auto& p : outer)
            if (h.eval(p).sign() < 0) {
                all_inside = false;
                break;
            }
        if (!all_inside) outer = clip(outer, h.half_plane());
        constraints.push_back(h);
        if (outer.empty()) throw EmptyRegion();
    }
    Region r;
    r.kind = RegionKind::Sandwich;
    r.outer = outer;
    r.segments = k;
    r.description = std::move(desc);
    r.description.push_back("boundary: conic arc of 6*beta^2 = 0 (sandwich approximation)");
    if (polygon_area2(outer).sign() == 0) {
        r.vertices.clear();
        return r;
    }

    // interior point: centroid of the outer polygon, nudged toward vertices if needed
    QuadNum n = QuadNum(rat(static_cast<long>(outer.size())));
    QPoint z{QuadNum(rat(0)), QuadNum(rat(0))};
    for (const auto& p : outer) {
        z.x += p.x;
        z.y += p.y;
    }
    z.x /= n;
    z.y /= n;
    std::vector<QPoint> inner_pts;
    QPoint center = z;
    bool have_center = member(center);
    if (!have_center) {
        for (const auto& vtx : outer) {
            QPoint m{(z.x + vtx.x) / QuadNum(rat(2)), (z.y + vtx.y) / QuadNum(rat(2))};
            if (member(m)) {
                center = m;
                have_center = true;
                break;
            }
        }
    }
    for (const auto& vtx : outer)
        if (member(vtx)) inner_pts.push_back(vtx);
    if (have_center) {
        inner_pts.push_back(center);
        for (int j = 0; j < k; ++j) {
            double phi = 2.0 * pi * j / k;
            Rat dx = rationalize(std::cos(phi)), dy = rationalize(std::sin(phi));
            if (sgn(dx) == 0 && sgn(dy) == 0) continue;
            // exit parameter through the linear constraints
            QuadNum smax;
            bool bounded = false;
            for (const auto& f : constraints) {
                QuadNum den = QuadNum(f.cx) * QuadNum(dx) + QuadNum(f.cy) * QuadNum(dy);
                if (den.sign() >= 0) continue;
                QuadNum s = -(f.eval(center)) / den;
                if (!bounded || s < smax) {
                    smax = s;
                    bounded = true;
                }
            }
            if (!bounded || smax.sign() <= 0) continue;
            auto at = [&](const QuadNum& s) {
                return QPoint{center.x + s * QuadNum(dx), center.y + s * QuadNum(dy)};
            };
            if (member(at(smax))) {
                inner_pts.push_back(at(smax));
                continue;
            }
            // bisect on dyadic fractions of smax; keep the inside endpoint
            Rat lo = rat(0), hi = rat(1);
            for (int step = 0; step < 24; ++step) {
                Rat mid = (lo + hi) / 2;
                if (member(at(smax * QuadNum(mid))))
                    lo = mid;
                else
                    hi = mid;
            }
            if (sgn(lo) > 0) inner_pts.push_back(at(smax * QuadNum(lo)));
        }
    }
    r.vertices = convex_hull(std::move(inner_pts));
    return r;
}

Region BoxBuilder::build(const BoxOptions& opts) const {
    std::vector<std::string> desc = {"x >= 0", "y >= 0", "x + y <= " + to_string(div.h_coeff),
                                     "c-coordinate: " + render_halfplane(lc.half_plane())};
    Polygon base_poly = base_polygon();
    if (base_poly.empty()) throw EmptyRegion();

    auto finish_exact = [&](Polygon poly, std::vector<std::string> d) {
        if (poly.empty()) throw EmptyRegion();
        Region r;
        r.kind = RegionKind::ExactPolygon;
        r.vertices = canonical_polygon(std::move(poly));
        r.description = std::move(d);
        return r;
    };

    if (q.quadratic_part_zero()) {
        if (sgn(q.D) == 0 && sgn(q.E) == 0) {
            if (sgn(q.F) >= 0) return finish_exact(base_poly, desc);
            throw EmptyRegion();
        }
        HalfPlane h{QuadNum(q.D), QuadNum(q.E), QuadNum(q.F)};
        desc.push_back("nef boundary: " + render_halfplane(h));
        return finish_exact(clip(base_poly, h), desc);
    }

    if (sgn(q.det3x4()) == 0) {
        if (auto split = split_degenerate(q)) {
            switch (split->kind) {
                case DegenerateSplit::NoConstraint:
                    return finish_exact(base_poly, desc);
                case DegenerateSplit::EmptyPlane:
                    throw EmptyRegion();
                case DegenerateSplit::PointOnly: {
                    QPoint pt{QuadNum(split->px), QuadNum(split->py)};
                    if (polygon_contains(base_poly, pt)) return finish_exact({pt}, desc);
                    throw EmptyRegion();
                }
                case DegenerateSplit::LineOnly: {
                    // region is base ∩ {line = 0}: clip by both closed sides
                    Polygon seg = clip(base_poly, split->line);
                    HalfPlane neg{-split->line.a, -split->line.b, -split->line.c};
                    seg = clip(seg, neg);
                    desc.push_back("nef locus degenerates to the line " + render_halfplane(split->line));
                    return finish_exact(seg, desc);
                }
                case DegenerateSplit::TwoLines: {
                    const LinePair& lp = split->lines;
                    auto clip2 = [&](bool flip1, bool flip2) {
                        HalfPlane h1 = flip1 ? HalfPlane{-lp.l1.a, -lp.l1.b, -lp.l1.c} : lp.l1;
                        HalfPlane h2 = flip2 ? HalfPlane{-lp.l2.a, -lp.l2.b, -lp.l2.c} : lp.l2;
                        return clip(clip(base_poly, h1), h2);
                    };
                    Polygon ra, rb;
                    if (lp.k_sign > 0) {
                        ra = clip2(false, false);
                        rb = clip2(true, true);
                    } else {
                        ra = clip2(false, true);
                        rb = clip2(true, false);
                    }
                    desc.push_back("nef boundary factors into lines: " + render_halfplane(lp.l1) + " and " +
                                   render_halfplane(lp.l2));
                    if (rb.empty()) return finish_exact(ra, desc);
                    if (ra.empty()) return finish_exact(rb, desc);
                    std::vector<QPoint> all(ra.begin(), ra.end());
                    all.insert(all.end(), rb.begin(), rb.end());
                    Polygon hull = convex_hull(std::move(all));
                    bool ok = true;
                    for (const auto& v : hull)
                        if (!member(v)) {
                            ok = false;
                            break;
                        }
                    if (ok) return finish_exact(hull, desc);
                    break;  // fall through to sandwich
                }
            }
        }
    }
    return sandwich(std::move(base_poly), opts.sandwich_segments, std::move(desc));
}

}  // namespace

Region box(const BundleSpec& spec, const BundleDivisor& div, const BoxOptions& opts) {
    if (sgn(div.h_coeff) < 0) throw EmptyRegion("negative H-coefficient: empty simplex");
    return BoxBuilder(spec, div).build(opts);
}

BundleDivisor canonical_class(const BundleSpec& spec) {
    return {spec.L1 + spec.L2 - rat(2) * spec.L0, rat(-3)};
}

namespace {

bool ample_witness_ok(const BundleSpec& spec, const BundleDivisor& div, const Rat& x, const Rat& y) {
    if (sgn(x) < 0 || sgn(y) < 0) return false;
    if (!(x + y < div.h_coeff)) return false;
    return is_ample(beta(spec, div, x, y));
}

std::optional<std::array<Rat, 2>> find_witness(const BundleSpec& spec, const BundleDivisor& div,
                                               const Polygon& poly) {
    if (ample_witness_ok(spec, div, rat(0), rat(0))) return std::array<Rat, 2>{rat(0), rat(0)};
    if (poly.size() < 3) return std::nullopt;
    QuadNum n = QuadNum(rat(static_cast<long>(poly.size())));
    QPoint c{QuadNum(rat(0)), QuadNum(rat(0))};
    for (const auto& p : poly) {
        c.x += p.x;
        c.y += p.y;
    }
    c.x /= n;
    c.y /= n;
    Int scale = 4;
    for (int k = 2; k <= 48; ++k, scale *= 2) {
        Rat sx = rat((c.x * QuadNum(Rat(scale))).floor(), scale);
        Rat sy = rat((c.y * QuadNum(Rat(scale))).floor(), scale);
        Rat eps = rat(1, scale);
        for (const auto& [dx, dy] : std::initializer_list<std::pair<int, int>>{
                 {0, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}}) {
            Rat x = sx + Rat(dx) * eps, y = sy + Rat(dy) * eps;
            if (ample_witness_ok(spec, div, x, y)) return std::array<Rat, 2>{x, y};
        }
    }
    return std::nullopt;
}

}  // namespace

BignessResult is_big(const BundleSpec& spec, const BundleDivisor& div) {
    Region r;
    try {
        r = box(spec, div);
    } catch (const EmptyRegion&) {
        return {};
    }
    auto density_identically_zero = [&]() {
        // 6*beta^2 as a polynomial: all six coefficients vanish
        NSClass t1 = spec.twist1(), t2 = spec.twist2();
        return sgn(intersect(div.base, div.base)) == 0 && sgn(intersect(div.base, t1)) == 0 &&
               sgn(intersect(div.base, t2)) == 0 && sgn(intersect(t1, t1)) == 0 &&
               sgn(intersect(t1, t2)) == 0 && sgn(intersect(t2, t2)) == 0;
    };

    if (r.kind == RegionKind::ExactPolygon) {
        if (polygon_area2(r.vertices).sign() == 0 || density_identically_zero()) return {};
        BignessResult out;
        out.big = true;
        out.witness = find_witness(spec, div, r.vertices);
        return out;
    }
    // sandwich: inner area > 0 certifies a positive volume; refine if unclear
    for (int seg = r.segments; seg <= 4096; seg *= 2) {
        if (!r.vertices.empty() && polygon_area2(r.vertices).sign() > 0) {
            BignessResult out;
            out.big = true;
            out.witness = find_witness(spec, div, r.vertices);
            return out;
        }
        if (polygon_area2(r.outer).sign() == 0) return {};
        r = box(spec, div, BoxOptions{seg * 2});
    }
    throw DomainError("is_big: could not certify bigness at maximal sandwich refinement");
}

}  // namespace bigvol
