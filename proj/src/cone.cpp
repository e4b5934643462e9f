#include "toraut/cone.hpp"

#include <cassert>
#include <sstream>

#include "toraut/errors.hpp"
#include "toraut/hermite.hpp"
#include "toraut/simplex.hpp"
#include "toraut/smith.hpp"
#include "toraut/witness.hpp"

namespace toraut {

namespace {

std::string ray_to_string(const IntVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

// { sum x_i v_i = 0, sum x_i = 1, x >= 0 } is feasible iff the rays admit
// a nontrivial nonnegative dependence, i.e. the cone is not pointed.
bool is_pointed(const std::vector<IntVec>& rays, std::size_t n) {
    const std::size_t r = rays.size();
    IntMatrix a(n + 1, r);
    for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t i = 0; i < n; ++i) a(i, j) = rays[j][i];
        a(n, j) = 1;
    }
    IntVec b(n + 1, Int(0));
    b[n] = 1;
    return !nonneg_feasible(a, b);
}

// v_k lies in the cone of the remaining rays?
bool in_cone_of_others(const std::vector<IntVec>& rays, std::size_t k, std::size_t n) {
    IntMatrix a(n, rays.size() - 1);
    std::size_t col = 0;
    for (std::size_t j = 0; j < rays.size(); ++j) {
        if (j == k) continue;
        for (std::size_t i = 0; i < n; ++i) a(i, col) = rays[j][i];
        ++col;
    }
    return nonneg_feasible(a, rays[k]);
}

} // namespace

IntMatrix Cone::ray_matrix() const {
    IntMatrix v(n, rays.size());
    for (std::size_t j = 0; j < rays.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) v(i, j) = rays[j][i];
    return v;
}

IntMatrix Cone::ray_rows() const { return IntMatrix::from_rows(rays, n); }

BuildResult build_cone(std::size_t n, const std::vector<IntVec>& raw_rays, bool reduce) {
    BuildResult res;

    std::vector<IntVec> rays;
    for (const IntVec& raw : raw_rays) {
        if (raw.size() != n)
            throw input_error("ray " + ray_to_string(raw) + " does not have length " +
                              std::to_string(n));
        const Int g = vec_gcd(raw);
        if (g == 0) throw input_error("zero vector is not a ray");
        IntVec v = raw;
        if (g > 1)
            for (Int& x : v) x /= g;
        bool dup = false;
        for (std::size_t k = 0; k < rays.size() && !dup; ++k)
            if (rays[k] == v) {
                res.report.rejected_rays.push_back(
                    {raw, "duplicate of ray " + std::to_string(k + 1) + " after primitivization"});
                dup = true;
            }
        if (!dup) rays.push_back(std::move(v));
    }

    if (!is_pointed(rays, n))
        throw input_error("not strongly convex -- not an affine toric input");
    res.report.pointed = true;

    // Extremality of each generator is decided against the full list;
    // for a pointed cone the non-extreme ones can be dropped together.
    std::vector<bool> extreme(rays.size(), true);
    for (std::size_t k = 0; k < rays.size(); ++k) {
        if (in_cone_of_others(rays, k, n)) {
            if (!reduce)
                throw input_error("ray " + ray_to_string(rays[k]) +
                                  " is not extreme (lies in the cone of the others)");
            extreme[k] = false;
            res.report.rejected_rays.push_back({rays[k], "not extreme, dropped"});
        }
    }
    std::vector<IntVec> kept;
    for (std::size_t k = 0; k < rays.size(); ++k)
        if (extreme[k]) kept.push_back(rays[k]);

    res.cone.n = n;
    res.cone.rays = std::move(kept);
    res.report.rank = rank_of(res.cone.ray_rows());
    res.report.full_dimensional = res.report.rank == n;
    res.report.normalized_rays = res.cone.rays;
    return res;
}

bool is_full_dimensional(const Cone& c) { return rank_of(c.ray_rows()) == c.n; }

DegenerateSplit split_degenerate(const Cone& c) {
    const RowLattice h = hermite_row_basis(c.ray_rows());
    const std::size_t m = h.rank();
    if (m == c.n)
        throw input_error("split_degenerate called on a full-dimensional cone");

    // Saturate the span: diag = left * basis * right, so the first m rows
    // of right^{-1} are a lattice basis of span_Q(rays) ∩ Z^n, and the
    // coordinates of a ray v in that basis are the first m entries of
    // v * right.
    const SmithDecomposition s = smith_normal_form(h.basis);
    assert(s.rank() == m);

    std::vector<IntVec> reduced;
    for (const IntVec& v : c.rays) {
        IntVec y(m);
        for (std::size_t j = 0; j < m; ++j) {
            Int acc = 0;
            for (std::size_t i = 0; i < c.n; ++i) acc += v[i] * s.right(i, j);
            y[j] = acc;
        }
#ifndef NDEBUG
        for (std::size_t j = m; j < c.n; ++j) {
            Int acc = 0;
            for (std::size_t i = 0; i < c.n; ++i) acc += v[i] * s.right(i, j);
            assert(acc == 0);
        }
#endif
        reduced.push_back(std::move(y));
    }

    DegenerateSplit out;
    out.q = c.n - m;
    out.reduced = build_cone(m, reduced, /*reduce=*/false).cone;
    assert(is_full_dimensional(out.reduced));
    return out;
}

} // namespace toraut
