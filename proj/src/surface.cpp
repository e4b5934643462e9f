#include "toraut/surface.hpp"

#include <cassert>

#include "toraut/errors.hpp"
#include "toraut/hermite.hpp"

namespace toraut {

namespace {

// Unimodular T with T*v1 = (0,1) and T*v2 = (b,-a), 0 <= a < b.
struct OrderedForm {
    Int a, b;
    IntMatrix t;
};

OrderedForm normal_form_ordered(const IntVec& v1, const IntVec& v2) {
    // Bezout completion sends the primitive v1 = (p,q) to (0,1).
    Int x, y;
    ext_gcd(v1[0], v1[1], x, y);
    IntMatrix t(2, 2);
    t(0, 0) = -v1[1];
    t(0, 1) = v1[0];
    t(1, 0) = x;
    t(1, 1) = y;

    Int s = t(0, 0) * v2[0] + t(0, 1) * v2[1];
    Int u = t(1, 0) * v2[0] + t(1, 1) * v2[1];
    if (s < 0) {
        // Reflection fixing (0,1).
        t.negate_row(0);
        s = -s;
    }
    const Int b = s;

    // Shear k: (0,1) fixed, second coordinate of the image of v2 shifted
    // by k*b; land it at -a with a in [0,b).
    const Int a = mod_floor(-u, b);
    const Int k = (-a - u) / b;
    t.add_row_multiple(1, 0, k);

    assert(t(0, 0) * v1[0] + t(0, 1) * v1[1] == 0 &&
           t(1, 0) * v1[0] + t(1, 1) * v1[1] == 1);
    assert(t(0, 0) * v2[0] + t(0, 1) * v2[1] == b &&
           t(1, 0) * v2[0] + t(1, 1) * v2[1] == -a);
    return {a, b, t};
}

} // namespace

SurfaceNormalForm surface_normal_form(const Cone& c) {
    if (c.n != 2) throw input_error("surface normal form requires lattice rank 2");
    if (c.ray_count() != 2) throw input_error("surface normal form requires exactly two rays");
    if (rank_of(c.ray_rows()) != 2)
        throw input_error("surface normal form requires a full-dimensional cone");

    const OrderedForm f12 = normal_form_ordered(c.rays[0], c.rays[1]);
    SurfaceNormalForm f{f12.a, f12.b, f12.t};
    if (f12.b > 1) {
        // The opposite ray order yields a^{-1} mod b; keep the smaller.
        const OrderedForm f21 = normal_form_ordered(c.rays[1], c.rays[0]);
        assert(f21.b == f12.b && mod_floor(f12.a * f21.a, f12.b) == 1);
        if (f21.a < f12.a) {
            f.a = f21.a;
            f.basis_change = f21.t;
        }
    }
    return f;
}

SurfaceVerdict surface_verdict(const SurfaceNormalForm& f) {
    SurfaceVerdict v;
    v.cl_order = f.b;
    v.class_d1 = f.a;
    v.class_d2 = f.b == 1 ? Int(0) : Int(1);
    const bool connected = f.a == 1 || f.b == 1 || mod_floor(f.a * f.a, f.b) != 1;
    v.status = connected ? Connectedness::Connected : Connectedness::NotConnected;
    v.component_group_order = connected ? 1 : 2;
    return v;
}

bool remark_operator_check(const SurfaceNormalForm& f) {
    if (surface_verdict(f).status != Connectedness::NotConnected)
        throw input_error("remark operator check applies to the non-connected case only");

    // (1 - a^2) is divisible by b here since a^2 = 1 (mod b).
    const Int c = (1 - f.a * f.a) / f.b;
    IntMatrix l(2, 2);
    l(0, 0) = f.a;
    l(0, 1) = f.b;
    l(1, 0) = c;
    l(1, 1) = -f.a;

    if (!is_unimodular(l)) return false;
    const IntVec r1{Int(0), Int(1)}, r2{f.b, Int(-f.a)};
    return l * r1 == r2 && l * r2 == r1;
}

} // namespace toraut
