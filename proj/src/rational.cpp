#include "bigvol/rational.hpp"

#include <stdexcept>

namespace bigvol {

Int floor_div(const Int& n, const Int& d) {
    if (sgn(d) <= 0) throw std::invalid_argument("floor_div: denominator must be positive");
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

Int floor_rat(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }

Int isqrt(const Int& n) {
    if (sgn(n) < 0) throw std::invalid_argument("isqrt: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const Int& n, Int* root) {
    if (sgn(n) < 0) return false;
    Int r = isqrt(n);
    if (r * r == n) {
        if (root) *root = r;
        return true;
    }
    return false;
}

std::string to_string(const Rat& q) { return q.get_str(); }

std::optional<Rat> parse_rat(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::string t = s;
    // mpq_class accepts "a/b" but not surrounding whitespace.
    auto l = t.find_first_not_of(" \t");
    auto r = t.find_last_not_of(" \t");
    if (l == std::string::npos) return std::nullopt;
    t = t.substr(l, r - l + 1);
    // validate characters: optional sign, digits, optional /digits
    std::size_t i = 0;
    if (t[i] == '+' || t[i] == '-') ++i;
    if (i >= t.size() || !isdigit(static_cast<unsigned char>(t[i]))) return std::nullopt;
    bool slash = false;
    for (; i < t.size(); ++i) {
        if (t[i] == '/') {
            if (slash || i + 1 >= t.size()) return std::nullopt;
            slash = true;
            continue;
        }
        if (!isdigit(static_cast<unsigned char>(t[i]))) return std::nullopt;
    }
    Rat q;
    if (q.set_str(t, 10) != 0) return std::nullopt;
    if (sgn(q.get_den()) == 0) return std::nullopt;
    q.canonicalize();
    return q;
}

}  // namespace bigvol
