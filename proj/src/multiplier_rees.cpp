#include "bigvol/multiplier_rees.hpp"

#include <stdexcept>

namespace bigvol {

Thresholds thresholds(long p, long g0, long g1) {
    if (p <= 0 || g0 <= 0 || g1 <= 0) throw std::invalid_argument("thresholds: p, g0, g1 must be positive");
    if (p - g1 <= 0) throw DegenerateThreshold("thresholds: p <= g1");
    // B = (1 - 2 sqrt6/5) p + (2 sqrt6/5) g0 - g1
    QuadNum k(rat(0), rat(2, 5), 6);
    QuadNum B = (QuadNum(rat(1)) - k) * QuadNum(rat(p)) + k * QuadNum(rat(g0)) - QuadNum(rat(g1));
    if (B.sign() <= 0) throw DegenerateThreshold("thresholds: beta numerator not positive");
    QuadNum d = QuadNum(rat(1)) - QuadNum(rat(1, p - g1)) - B.inverse();
    if (d.sign() <= 0) throw DegenerateThreshold("thresholds: d_p <= 0");
    QuadNum beta = B / d;
    if (beta.sign() <= 0) throw DegenerateThreshold("thresholds: beta <= 0");
    return {p, g0, g1, QuadNum(rat(p - g1)) / d, beta, d};
}

MonomialIdeal2 staircase(const QuadNum& alpha, const QuadNum& beta) {
    if (alpha.sign() <= 0 || beta.sign() <= 0)
        throw std::invalid_argument("staircase: alpha, beta must be positive");
    Int fb = beta.floor();
    if (!fb.fits_slong_p()) throw std::invalid_argument("staircase: beta too large");
    long top = fb.get_si() + 1;
    QuadNum ratio = alpha / beta;
    MonomialIdeal2 out;
    out.gens.reserve(static_cast<std::size_t>(top) + 1);
    Int last_m1(-1);
    // Walk m2-levels downward; the minimal m1 at level m2 is the least integer
    // with m1/alpha + m2/beta > 1, i.e. floor(alpha - m2*alpha/beta) + 1.
    // A level contributes a minimal generator exactly when m1 strictly grows.
    for (long lev = top; lev >= 0; --lev) {
        Int m1 = (QuadNum(alpha) - QuadNum(rat(lev)) * ratio).floor() + 1;
        if (sgn(m1) < 0) m1 = 0;
        if (m1 > last_m1) {
            out.gens.emplace_back(m1, Int(lev));
            last_m1 = m1;
        }
    }
    return out;
}

NewtonPolygon newton_polygon(const MonomialIdeal2& ideal) {
    if (ideal.gens.empty()) throw std::invalid_argument("newton_polygon: empty ideal");
    // generators arrive sorted by m1 ascending (m2 descending); lower hull by
    // monotone chain, collinear interior points dropped
    NewtonPolygon np;
    for (const auto& p : ideal.gens) {
        while (np.vertices.size() >= 2) {
            const auto& o = np.vertices[np.vertices.size() - 2];
            const auto& a = np.vertices[np.vertices.size() - 1];
            Int cr = (a.first - o.first) * (p.second - o.second) - (a.second - o.second) * (p.first - o.first);
            if (sgn(cr) <= 0)
                np.vertices.pop_back();
            else
                break;
        }
        np.vertices.push_back(p);
    }
    return np;
}

std::vector<ReesDatum> rees_data(const NewtonPolygon& np) {
    if (np.vertices.size() < 2) throw std::invalid_argument("rees_data: polygon needs at least one side");
    std::vector<ReesDatum> out;
    for (std::size_t i = 1; i < np.vertices.size(); ++i) {
        const auto& [x0, y0] = np.vertices[i - 1];
        const auto& [x1, y1] = np.vertices[i];
        Int a = y0 - y1, b = x1 - x0;
        if (sgn(a) <= 0 || sgn(b) <= 0) throw std::logic_error("rees_data: side normal not positive");
        Int g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        a /= g;
        b /= g;
        Int ord = a * x1 + b * y1;
        if (ord != a * x0 + b * y0) throw std::logic_error("rees_data: side functional not constant");
        ReesDatum d;
        d.side = static_cast<int>(i);
        d.a = a;
        d.b = b;
        d.ord = ord;
        d.A = a + b;
        d.tau = rat(b, a);
        d.w = rat(d.A, ord);
        out.push_back(std::move(d));
    }
    return out;
}

Rat w_max(const NewtonPolygon& np) {
    Rat best = rat(0);
    for (const auto& d : rees_data(np))
        if (d.w > best) best = d.w;
    return best;
}

QuadNum endpoint_bound(const QuadNum& alpha, const QuadNum& beta) {
    auto one_side = [](const QuadNum& al, const QuadNum& be) {
        QuadNum fb1 = QuadNum(Rat(be.floor() + 1));
        return be.inverse() + (fb1 - be) / fb1 + (be / fb1) * al.inverse();
    };
    QuadNum b1 = one_side(alpha, beta);
    QuadNum br = one_side(beta, alpha);
    return b1 > br ? b1 : br;
}

}  // namespace bigvol
