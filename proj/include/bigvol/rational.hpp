#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace bigvol {

// Arbitrary-precision integers and rationals. mpq_class keeps values in
// lowest terms with a positive denominator, which is exactly the contract
// the rest of the library relies on.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline int sign(const Rat& q) { return sgn(q); }
inline int sign(const Int& n) { return sgn(n); }

// floor(n/d) for d > 0, as exact integer division rounding toward -inf.
Int floor_div(const Int& n, const Int& d);

Int floor_rat(const Rat& q);

// floor(sqrt(n)) for n >= 0.
Int isqrt(const Int& n);

bool is_perfect_square(const Int& n, Int* root = nullptr);

// "n" or "n/d", lowest terms, '-' on the numerator.
std::string to_string(const Rat& q);

// Parses "n" or "n/d" (optionally signed). Returns nullopt on malformed input
// or a zero denominator.
std::optional<Rat> parse_rat(const std::string& s);

}  // namespace bigvol
