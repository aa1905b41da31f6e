#pragma once

#include <compare>
#include <optional>
#include <string>

#include "bigvol/rational.hpp"

namespace bigvol {

// Exact element of the real quadratic field Q(sqrt(rad)):
//
//     value = a + b * sqrt(rad)
//
// rad is a fixed positive square-free integer chosen per context (6 almost
// everywhere; 3 appears only when rendering diagonal coordinates). A value
// with b == 0 is radicand-agnostic and combines freely with either context;
// mixing two values with different radicands and both b != 0 throws.
//
// All comparisons are exact. No floating point anywhere in here; decimal
// output goes through an exact floor-based digit extraction.
class QuadNum {
  public:
    QuadNum() : a_(0), b_(0), rad_(6) {}
    QuadNum(const Rat& a) : a_(a), b_(0), rad_(6) {}  // NOLINT implicit by design
    QuadNum(long a) : a_(rat(a)), b_(0), rad_(6) {}   // NOLINT
    QuadNum(Rat a, Rat b, int rad = 6);

    static QuadNum sqrt_of(int rad) { return QuadNum(rat(0), rat(1), rad); }

    const Rat& rational_part() const { return a_; }
    const Rat& radical_coeff() const { return b_; }
    int radicand() const { return rad_; }
    bool is_rational() const { return sgn(b_) == 0; }

    // Exact sign in {-1, 0, +1}: case analysis on the two parts plus one
    // integer comparison of squared magnitudes.
    int sign() const;

    // Greatest integer n <= value. Brackets sqrt(rad)*b with an integer
    // square root, then corrects the candidate with exact sign tests.
    Int floor() const;

    QuadNum operator-() const { return QuadNum(-a_, -b_, rad_); }
    QuadNum& operator+=(const QuadNum& o);
    QuadNum& operator-=(const QuadNum& o);
    QuadNum& operator*=(const QuadNum& o);
    QuadNum& operator/=(const QuadNum& o);

    friend QuadNum operator+(QuadNum l, const QuadNum& r) { return l += r; }
    friend QuadNum operator-(QuadNum l, const QuadNum& r) { return l -= r; }
    friend QuadNum operator*(QuadNum l, const QuadNum& r) { return l *= r; }
    friend QuadNum operator/(QuadNum l, const QuadNum& r) { return l /= r; }

    friend bool operator==(const QuadNum& l, const QuadNum& r) {
        return l.a_ == r.a_ && l.b_ == r.b_ && (l.is_rational() || r.is_rational() || l.rad_ == r.rad_);
    }
    friend std::strong_ordering operator<=>(const QuadNum& l, const QuadNum& r) {
        int s = (l - r).sign();
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    QuadNum inverse() const;

    // Truncated-toward-minus-infinity decimal rendering with `digits` places,
    // computed via exact floors (deterministic, no rounding modes).
    std::string to_decimal(int digits) const;
    double to_double() const;

  private:
    void check_compatible(const QuadNum& o) const;

    Rat a_, b_;
    int rad_;
};

inline int sign(const QuadNum& q) { return q.sign(); }
inline Int floor_quad(const QuadNum& q) { return q.floor(); }
inline QuadNum abs(const QuadNum& q) { return q.sign() < 0 ? -q : q; }

// Exact rendering "a/b + (c/d)√6" (the radical term is dropped when c == 0,
// the rational term when a == 0 and c != 0).
std::string to_string(const QuadNum& q);

// Parses the exact rendering back; also accepts plain rationals.
std::optional<QuadNum> parse_quad(const std::string& s, int rad = 6);

}  // namespace bigvol
