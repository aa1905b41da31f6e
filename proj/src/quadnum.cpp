#include "bigvol/quadnum.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bigvol {

QuadNum::QuadNum(Rat a, Rat b, int rad) : a_(std::move(a)), b_(std::move(b)), rad_(rad) {
    if (rad_ <= 0) throw std::invalid_argument("QuadNum: radicand must be positive");
}

void QuadNum::check_compatible(const QuadNum& o) const {
    if (!is_rational() && !o.is_rational() && rad_ != o.rad_)
        throw std::invalid_argument("QuadNum: mixed radicands in one expression");
}

QuadNum& QuadNum::operator+=(const QuadNum& o) {
    check_compatible(o);
    if (is_rational()) rad_ = o.rad_;
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& o) {
    check_compatible(o);
    if (is_rational()) rad_ = o.rad_;
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadNum& QuadNum::operator*=(const QuadNum& o) {
    check_compatible(o);
    if (is_rational()) rad_ = o.rad_;
    Rat na = a_ * o.a_ + Rat(rad_) * b_ * o.b_;
    Rat nb = a_ * o.b_ + b_ * o.a_;
    a_ = na;
    b_ = nb;
    return *this;
}

QuadNum QuadNum::inverse() const {
    // 1/(a + b sqrt r) = (a - b sqrt r)/(a^2 - r b^2); the norm vanishes only
    // at zero since r is not a rational square.
    Rat norm = a_ * a_ - Rat(rad_) * b_ * b_;
    if (sgn(norm) == 0) throw std::invalid_argument("QuadNum: division by zero");
    return QuadNum(a_ / norm, -b_ / norm, rad_);
}

QuadNum& QuadNum::operator/=(const QuadNum& o) { return *this *= o.inverse(); }

int QuadNum::sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with rad*b^2.
    Rat lhs = a_ * a_, rhs = Rat(rad_) * b_ * b_;
    int c = cmp(lhs, rhs);
    if (c == 0)
        throw std::logic_error("QuadNum: a^2 == rad*b^2 with a,b nonzero (radicand not square-free?)");
    return c > 0 ? sa : sb;
}

Int QuadNum::floor() const {
    if (is_rational()) return floor_rat(a_);
    // Put over one positive denominator: value = (A + B*sqrt(rad)) / D.
    Int da = a_.get_den(), db = b_.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
    Int D = da / g * db;
    Int A = a_.get_num() * (D / da);
    Int B = b_.get_num() * (D / db);
    Int s = isqrt(Int(rad_) * B * B);  // floor(|B| sqrt(rad))
    Int low = sgn(B) > 0 ? Int(A + s) : Int(A - s - 1);
    Int n = floor_div(low, D);
    // Correct by exact sign tests; the bracket is off by at most one.
    while ((*this - QuadNum(Rat(n + 1))).sign() >= 0) n += 1;
    while ((*this - QuadNum(Rat(n))).sign() < 0) n -= 1;
    return n;
}

std::string QuadNum::to_decimal(int digits) const {
    if (digits < 0) digits = 0;
    bool neg = sign() < 0;
    QuadNum v = neg ? -(*this) : *this;
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Int scaled = (v * QuadNum(Rat(scale))).floor();
    Int ip = floor_div(scaled, scale);
    Int frac = scaled - ip * scale;
    std::string out = neg ? "-" : "";
    out += ip.get_str();
    if (digits > 0) {
        std::string f = frac.get_str();
        out += "." + std::string(digits - f.size(), '0') + f;
    }
    return out;
}

double QuadNum::to_double() const {
    double r = std::sqrt(static_cast<double>(rad_));
    return a_.get_d() + b_.get_d() * r;
}

static const char* kRadGlyph = "√";  // the radical sign

std::string to_string(const QuadNum& q) {
    const Rat& a = q.rational_part();
    const Rat& b = q.radical_coeff();
    if (sgn(b) == 0) return to_string(a);
    std::ostringstream os;
    std::string rad_part = "(" + to_string(abs(Rat(b))) + ")" + kRadGlyph + std::to_string(q.radicand());
    if (sgn(a) == 0) {
        os << (sgn(b) < 0 ? "-" : "") << rad_part;
    } else {
        os << to_string(a) << (sgn(b) < 0 ? " - " : " + ") << rad_part;
    }
    return os.str();
}

std::optional<QuadNum> parse_quad(const std::string& s, int rad) {
    auto strip = [](std::string t) {
        auto l = t.find_first_not_of(" \t");
        if (l == std::string::npos) return std::string();
        auto r = t.find_last_not_of(" \t");
        return t.substr(l, r - l + 1);
    };
    std::string t = strip(s);
    if (t.empty()) return std::nullopt;

    const std::string glyph = std::string(kRadGlyph) + std::to_string(rad);
    auto parse_radical_term = [&](std::string term, Rat* coeff) -> bool {
        // "(n/m)√rad" with an optional leading '-'
        bool neg = false;
        term = strip(term);
        if (!term.empty() && term[0] == '-') {
            neg = true;
            term = strip(term.substr(1));
        }
        if (term.size() < glyph.size() + 2) return false;
        if (term.substr(term.size() - glyph.size()) != glyph) return false;
        std::string paren = strip(term.substr(0, term.size() - glyph.size()));
        if (paren.size() < 2 || paren.front() != '(' || paren.back() != ')') return false;
        auto q = parse_rat(paren.substr(1, paren.size() - 2));
        if (!q) return false;
        *coeff = neg ? Rat(-*q) : *q;
        return true;
    };

    // Split "A + R" / "A - R" at the last top-level " + " or " - ".
    for (std::size_t i = t.size(); i-- > 3;) {
        if (t[i - 1] == ' ' && (t[i] == '+' || t[i] == '-') && i + 1 < t.size() && t[i + 1] == ' ') {
            auto left = parse_rat(t.substr(0, i - 1));
            Rat coeff;
            if (left && parse_radical_term(t.substr(i + 1), &coeff)) {
                if (t[i] == '-') coeff = -coeff;
                return QuadNum(*left, coeff, rad);
            }
        }
    }
    if (auto q = parse_rat(t)) return QuadNum(*q);
    Rat coeff;
    if (parse_radical_term(t, &coeff)) return QuadNum(rat(0), coeff, rad);
    return std::nullopt;
}

}  // namespace bigvol
