#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace toraut {

// Exact arbitrary-precision arithmetic everywhere: normal-form pivots and
// simplex tableaus overflow 64 bits even on small inputs.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::lcm(a, b);
}

// Floor division; cpp_int's operator/ truncates toward zero.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    const Int r = a - q * b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

// Representative of a mod b in [0, |b|), b != 0.
inline Int mod_floor(const Int& a, const Int& b) {
    const Int m = abs_int(b);
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline Int vec_gcd(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd_int(g, x);
    return g;
}

// Extended Euclid: returns g = gcd(a,b) and x, y with a*x + b*y = g.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    if (b == 0) {
        x = a < 0 ? -1 : 1;
        y = 0;
        return abs_int(a);
    }
    Int x1, y1;
    const Int g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// Inverse of a mod m (m >= 1, gcd(a,m) = 1).
inline Int mod_inverse(const Int& a, const Int& m) {
    Int x, y;
    ext_gcd(mod_floor(a, m), m, x, y);
    return mod_floor(x, m);
}

} // namespace toraut
