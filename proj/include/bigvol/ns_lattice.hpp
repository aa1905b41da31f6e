#pragma once

#include "bigvol/quadnum.hpp"
#include "bigvol/rational.hpp"

namespace bigvol {

// Neron-Severi classes on S = E x E (no complex multiplication), written in
// the basis f1 = [{P} x E], f2 = [E x {P}], delta = [diagonal]. The rank-3
// intersection form is determined by f1.f2 = f1.delta = f2.delta = 1 and
// f1^2 = f2^2 = delta^2 = 0.
//
// Templated over the coefficient field: Rat for ordinary classes, QuadNum when
// a class is evaluated at an irrational point of the twist plane.
template <class F>
struct NSClassT {
    F x{}, y{}, z{};

    friend NSClassT operator+(const NSClassT& l, const NSClassT& r) {
        return {l.x + r.x, l.y + r.y, l.z + r.z};
    }
    friend NSClassT operator-(const NSClassT& l, const NSClassT& r) {
        return {l.x - r.x, l.y - r.y, l.z - r.z};
    }
    friend NSClassT operator*(const F& s, const NSClassT& c) { return {s * c.x, s * c.y, s * c.z}; }
    friend NSClassT operator-(const NSClassT& c) { return {-c.x, -c.y, -c.z}; }
    friend bool operator==(const NSClassT& l, const NSClassT& r) = default;
};

using NSClass = NSClassT<Rat>;
using QClass = NSClassT<QuadNum>;

// Diagonalizing coordinates (a, b, c) with b = b_coeff * sqrt(3):
//   a = x + y - 2z,  b = sqrt(3)(y - x),  c = 2(x + y + z).
// In these coordinates the nef cone is the round cone c^2 >= a^2 + b^2, c >= 0;
// b enters every test through b^2 = 3 b_coeff^2, so the cone tests stay rational.
template <class F>
struct DiagCoordsT {
    F a{}, b_coeff{}, c{};
};
using DiagCoords = DiagCoordsT<Rat>;

template <class F>
F intersect(const NSClassT<F>& l, const NSClassT<F>& r) {
    return (l.x * r.y + r.x * l.y) + (l.x * r.z + r.x * l.z) + (l.y * r.z + r.y * l.z);
}

template <class F>
DiagCoordsT<F> to_diag(const NSClassT<F>& c) {
    F two = F(2);
    return {c.x + c.y - two * c.z, c.y - c.x, two * (c.x + c.y + c.z)};
}

// q(alpha) = c^2 - a^2 - b^2 in diagonal coordinates; equals 12(xy+yz+zx),
// i.e. six times the self-intersection.
template <class F>
F cone_form(const NSClassT<F>& cl) {
    auto d = to_diag(cl);
    return d.c * d.c - d.a * d.a - F(3) * d.b_coeff * d.b_coeff;
}

template <class F>
bool is_nef(const NSClassT<F>& cl) {
    auto d = to_diag(cl);
    if (sign(d.c) < 0) return false;
    return sign(d.c * d.c - d.a * d.a - F(3) * d.b_coeff * d.b_coeff) >= 0;
}

// On E x E without CM the pseudoeffective cone equals the nef cone.
template <class F>
bool is_psef(const NSClassT<F>& cl) {
    return is_nef(cl);
}

template <class F>
bool is_ample(const NSClassT<F>& cl) {
    auto d = to_diag(cl);
    if (sign(d.c) <= 0) return false;
    return sign(d.c * d.c - d.a * d.a - F(3) * d.b_coeff * d.b_coeff) > 0;
}

}  // namespace bigvol
