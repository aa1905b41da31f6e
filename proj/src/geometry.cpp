#include "bigvol/geometry.hpp"

#include <algorithm>

namespace bigvol {

QuadNum cross(const QPoint& o, const QPoint& p, const QPoint& q) {
    return (p.x - o.x) * (q.y - o.y) - (q.x - o.x) * (p.y - o.y);
}

QuadNum polygon_area2(const Polygon& poly) {
    QuadNum acc = 0;
    std::size_t n = poly.size();
    if (n < 3) return acc;
    for (std::size_t i = 0; i < n; ++i) {
        const QPoint& p = poly[i];
        const QPoint& q = poly[(i + 1) % n];
        acc += p.x * q.y - q.x * p.y;
    }
    return acc;
}

static bool lex_less(const QPoint& l, const QPoint& r) {
    int c = sign(l.x - r.x);
    if (c != 0) return c < 0;
    return sign(l.y - r.y) < 0;
}

Polygon canonical_polygon(Polygon poly) {
    // drop consecutive duplicates
    Polygon dedup;
    for (const auto& p : poly) {
        if (dedup.empty() || !(dedup.back() == p)) dedup.push_back(p);
    }
    while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
    // drop collinear middle vertices
    if (dedup.size() > 2) {
        Polygon out;
        std::size_t n = dedup.size();
        for (std::size_t i = 0; i < n; ++i) {
            const QPoint& a = dedup[(i + n - 1) % n];
            const QPoint& b = dedup[i];
            const QPoint& c = dedup[(i + 1) % n];
            if (sign(cross(a, b, c)) != 0) out.push_back(b);
        }
        // fully collinear input collapses to its extreme points
        if (out.size() < 2) {
            auto [lo, hi] = std::minmax_element(dedup.begin(), dedup.end(), lex_less);
            out.clear();
            out.push_back(*lo);
            if (!(*hi == *lo)) out.push_back(*hi);
        }
        dedup = std::move(out);
    }
    if (dedup.empty()) return dedup;
    auto it = std::min_element(dedup.begin(), dedup.end(), lex_less);
    std::rotate(dedup.begin(), it, dedup.end());
    return dedup;
}

Polygon clip(const Polygon& poly, const HalfPlane& h) {
    if (poly.empty()) return {};
    Polygon out;
    std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const QPoint& p = poly[i];
        const QPoint& q = poly[(i + 1) % n];
        QuadNum fp = h.eval(p);
        QuadNum fq = h.eval(q);
        int sp = fp.sign(), sq = fq.sign();
        if (sp >= 0) out.push_back(p);
        if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) {
            QuadNum s = fp / (fp - fq);
            out.push_back({p.x + s * (q.x - p.x), p.y + s * (q.y - p.y)});
        }
    }
    return canonical_polygon(std::move(out));
}

bool polygon_contains(const Polygon& poly, const QPoint& p) {
    std::size_t n = poly.size();
    if (n == 0) return false;
    if (n == 1) return poly[0] == p;
    if (n == 2) {
        if (sign(cross(poly[0], poly[1], p)) != 0) return false;
        // on segment: bounding-interval test
        QuadNum lox = poly[0].x, hix = poly[1].x;
        if (lox > hix) std::swap(lox, hix);
        QuadNum loy = poly[0].y, hiy = poly[1].y;
        if (loy > hiy) std::swap(loy, hiy);
        return p.x >= lox && p.x <= hix && p.y >= loy && p.y <= hiy;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (sign(cross(poly[i], poly[(i + 1) % n], p)) < 0) return false;
    }
    return true;
}

Polygon convex_hull(std::vector<QPoint> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end(), [](const QPoint& a, const QPoint& b) { return a == b; }),
              pts.end());
    std::size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<QPoint> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower
        while (k >= 2 && sign(cross(hull[k - 2], hull[k - 1], pts[i])) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper
        while (k >= t && sign(cross(hull[k - 2], hull[k - 1], pts[i])) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return canonical_polygon(std::move(hull));
}

}  // namespace bigvol
