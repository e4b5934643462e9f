#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "toraut/errors.hpp"
#include "toraut/hermite.hpp"
#include "toraut/simplex.hpp"
#include "toraut/smith.hpp"
#include "toraut/witness.hpp"

using namespace toraut;
using test_support::iv;

namespace {

void check_snf_contract(const IntMatrix& a) {
    const SmithDecomposition d = smith_normal_form(a);
    CHECK(d.diag == d.left * a * d.right);
    CHECK(is_unimodular(d.left));
    CHECK(is_unimodular(d.right));
    REQUIRE(d.invariants.size() == d.rank());
    for (std::size_t i = 0; i < d.invariants.size(); ++i) {
        CHECK(d.invariants[i] >= 1);
        CHECK(d.diag(i, i) == d.invariants[i]);
        if (i > 0) CHECK(d.invariants[i] % d.invariants[i - 1] == 0);
    }
    for (std::size_t i = 0; i < d.diag.rows(); ++i)
        for (std::size_t j = 0; j < d.diag.cols(); ++j)
            if (i != j || i >= d.invariants.size()) CHECK(d.diag(i, j) == 0);
}

} // namespace

TEST_CASE("smith normal form: identity") {
    const auto d = smith_normal_form(IntMatrix::identity(2));
    CHECK(d.invariants == std::vector<Int>{1, 1});
    check_snf_contract(IntMatrix::identity(2));
}

TEST_CASE("smith normal form: diag(2,3) has invariants (1,6)") {
    const IntMatrix a = IntMatrix::from_rows({{2, 0}, {0, 3}});
    // Determinantal divisors pin the invariants: gcd of entries is 1,
    // gcd of 2x2 minors is 6.
    CHECK(test_support::smith_invariants_oracle(a) == std::vector<Int>{1, 6});
    const auto d = smith_normal_form(a);
    CHECK(d.invariants == std::vector<Int>{1, 6});
    check_snf_contract(a);
}

TEST_CASE("smith normal form: 4x3 ray-row matrix is unimodularly trivial") {
    const IntMatrix a = IntMatrix::from_rows({{1, 1, 0}, {-1, 0, 1}, {0, -1, 0}, {0, 0, 1}});
    CHECK(test_support::smith_invariants_oracle(a) == std::vector<Int>{1, 1, 1});
    const auto d = smith_normal_form(a);
    CHECK(d.invariants == std::vector<Int>{1, 1, 1});
    CHECK(d.rank() == 3);
    check_snf_contract(a);
}

TEST_CASE("smith normal form: empty and zero shapes") {
    check_snf_contract(IntMatrix(0, 0));
    check_snf_contract(IntMatrix(0, 3));
    check_snf_contract(IntMatrix(3, 0));
    check_snf_contract(IntMatrix(2, 2)); // zero matrix
    CHECK(smith_normal_form(IntMatrix(2, 2)).rank() == 0);
}

TEST_CASE("smith normal form: randomized reconstruction") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int t = 0; t < 200; ++t) {
        const IntMatrix a = test_support::random_matrix(rng, dim(rng), dim(rng), -9, 9);
        check_snf_contract(a);
        CHECK(smith_normal_form(a).rank() == rank_of(a));
    }
}

TEST_CASE("hermite row basis: canonical examples") {
    const auto id = hermite_row_basis(IntMatrix::identity(2));
    CHECK(id.basis == IntMatrix::identity(2));

    const IntMatrix a = IntMatrix::from_rows({{2, 0}, {0, 2}, {1, 1}});
    const auto l = hermite_row_basis(a);
    CHECK(l.basis == IntMatrix::from_rows({{1, 1}, {0, 2}}));

    // Box-enumeration oracle: both generating sets cover the same points.
    const auto from_gens =
        test_support::lattice_points_in_box({iv({2, 0}), iv({0, 2}), iv({1, 1})}, 4, 6);
    const auto from_basis = test_support::lattice_points_in_box({iv({1, 1}), iv({0, 2})}, 4, 6);
    CHECK(from_gens == from_basis);

    const auto empty = hermite_row_basis(IntMatrix(0, 2));
    CHECK(empty.rank() == 0);
    CHECK(empty.ambient == 2);
}

TEST_CASE("hermite row basis: idempotent and canonical") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int t = 0; t < 200; ++t) {
        const IntMatrix a = test_support::random_matrix(rng, dim(rng), dim(rng), -9, 9);
        const RowLattice l = hermite_row_basis(a);
        CHECK(hermite_row_basis(l.basis) == l);
        // HNF shape: positive pivots, entries above reduced into [0, pivot).
        std::size_t prev_pivot_col = 0;
        for (std::size_t i = 0; i < l.basis.rows(); ++i) {
            std::size_t p = 0;
            while (p < l.basis.cols() && l.basis(i, p) == 0) ++p;
            REQUIRE(p < l.basis.cols());
            if (i > 0) CHECK(p > prev_pivot_col);
            prev_pivot_col = p;
            CHECK(l.basis(i, p) > 0);
            for (std::size_t k = 0; k < i; ++k) {
                CHECK(l.basis(k, p) >= 0);
                CHECK(l.basis(k, p) < l.basis(i, p));
            }
        }
    }
}

TEST_CASE("lattice_equal: examples and equivalence properties") {
    CHECK(lattice_equal(IntMatrix::identity(2), IntMatrix::identity(2)));
    CHECK(lattice_equal(IntMatrix::from_rows({{2, 0}, {0, 2}}),
                        IntMatrix::from_rows({{2, 2}, {0, 2}})));
    CHECK_FALSE(lattice_equal(IntMatrix::from_rows({{2, 0}, {0, 2}}), IntMatrix::identity(2)));
    CHECK_THROWS_AS(lattice_equal(IntMatrix(1, 2), IntMatrix(1, 3)), input_error);

    // Membership both ways for the index-2 pair above, via the
    // enumeration oracle.
    const auto a_pts = test_support::lattice_points_in_box({iv({2, 0}), iv({0, 2})}, 4, 4);
    const auto b_pts = test_support::lattice_points_in_box({iv({2, 2}), iv({0, 2})}, 4, 4);
    CHECK(a_pts == b_pts);

    std::mt19937_64 rng(31337);
    for (int t = 0; t < 100; ++t) {
        const IntMatrix a = test_support::random_matrix(rng, 3, 3, -5, 5);
        const IntMatrix b = test_support::random_matrix(rng, 3, 3, -5, 5);
        CHECK(lattice_equal(a, a)); // reflexive
        CHECK(lattice_equal(a, b) == lattice_equal(b, a));
        // Row permutation never changes the lattice.
        IntMatrix p = a;
        p.swap_rows(0, 2);
        CHECK(lattice_equal(a, p));
        // Stacking the two generates a superset; equality iff mutual containment.
        IntMatrix stacked(6, 3);
        for (std::size_t i = 0; i < 3; ++i) {
            stacked.set_row(i, a.row(i));
            stacked.set_row(3 + i, b.row(i));
        }
        if (lattice_equal(a, b)) CHECK(lattice_equal(a, stacked));
    }
}

TEST_CASE("solve_unimodular_witness: identity and the ray swap") {
    const IntMatrix v = IntMatrix::from_rows({{0, 3}, {1, -2}}); // columns (0,1),(3,-2)
    CHECK(solve_unimodular_witness(v, v) == IntMatrix::identity(2));

    IntMatrix vp = v;
    vp.swap_cols(0, 1);
    const auto l = solve_unimodular_witness(v, vp);
    REQUIRE(l.has_value());
    CHECK(*l == IntMatrix::from_rows({{2, 3}, {-1, -2}}));
    CHECK(determinant(*l) == -1);
    CHECK(*l * v == vp);
}

TEST_CASE("solve_unimodular_witness: 2x2 oracle on the quadric-cone swap") {
    // V columns (0,1),(2,-1); swap target. The unique rational solution
    // is computed here independently via the adjugate.
    const IntMatrix v = IntMatrix::from_rows({{0, 2}, {1, -1}});
    IntMatrix vp = v;
    vp.swap_cols(0, 1);

    const Int det = v(0, 0) * v(1, 1) - v(0, 1) * v(1, 0);
    REQUIRE(det != 0);
    // L = Vp * adj(V) / det
    IntMatrix adj(2, 2);
    adj(0, 0) = v(1, 1);
    adj(0, 1) = -v(0, 1);
    adj(1, 0) = -v(1, 0);
    adj(1, 1) = v(0, 0);
    const IntMatrix num = vp * adj;
    bool integral = true;
    IntMatrix expect(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            if (num(i, j) % det != 0) integral = false;
            else expect(i, j) = num(i, j) / det;
        }
    REQUIRE(integral);
    REQUIRE(is_unimodular(expect));

    const auto l = solve_unimodular_witness(v, vp);
    REQUIRE(l.has_value());
    CHECK(*l == expect);
    CHECK(*l == IntMatrix::from_rows({{1, 2}, {0, -1}}));
}

TEST_CASE("solve_unimodular_witness: absent and error cases") {
    // (0,1),(5,-2) swap needs (1-4)/5 integral; it is not.
    const IntMatrix v = IntMatrix::from_rows({{0, 5}, {1, -2}});
    IntMatrix vp = v;
    vp.swap_cols(0, 1);
    CHECK_FALSE(solve_unimodular_witness(v, vp).has_value());

    // Non-unimodular solution: V = I, Vp = 2I solves L = 2I only.
    IntMatrix two = IntMatrix::identity(2);
    two(0, 0) = two(1, 1) = 2;
    CHECK_FALSE(solve_unimodular_witness(IntMatrix::identity(2), two).has_value());

    // Inconsistent overdetermined system.
    const IntMatrix v3 = IntMatrix::from_rows({{1, 0, 1}, {0, 1, 1}});
    const IntMatrix vp3 = IntMatrix::from_rows({{1, 0, 0}, {0, 1, 1}});
    CHECK_FALSE(solve_unimodular_witness(v3, vp3).has_value());

    // Rank-deficient input is a reported error, not a silent absent.
    const IntMatrix flat = IntMatrix::from_rows({{1, 2}, {0, 0}});
    CHECK_THROWS_AS(solve_unimodular_witness(flat, flat), input_error);

    // So is a shape mismatch.
    CHECK_THROWS_AS(solve_unimodular_witness(IntMatrix::identity(2), IntMatrix::identity(3)),
                    input_error);
}

TEST_CASE("solve_unimodular_witness: identity on random full-rank systems") {
    std::mt19937_64 rng(4242);
    for (int t = 0; t < 100; ++t) {
        std::uniform_int_distribution<std::size_t> nd(1, 3);
        const std::size_t n = nd(rng);
        std::uniform_int_distribution<std::size_t> rd(n, n + 2);
        const std::size_t r = rd(rng);
        IntMatrix v = test_support::random_matrix(rng, n, r, -4, 4);
        if (rank_of(v.transpose()) != n) continue;
        const auto l = solve_unimodular_witness(v, v);
        REQUIRE(l.has_value());
        CHECK(*l == IntMatrix::identity(n));
    }
}

TEST_CASE("nonneg_feasible: base cases") {
    CHECK(nonneg_feasible(IntMatrix::from_rows({{1}}), iv({1})));
    CHECK_FALSE(nonneg_feasible(IntMatrix::from_rows({{1}}), iv({-1})));

    // Non-pointed witness: columns (1,0),(0,1),(-1,-1) with the
    // sum-to-one row appended; x = (1/3,1/3,1/3) solves it.
    const IntMatrix a = IntMatrix::from_rows({{1, 0, -1}, {0, 1, -1}, {1, 1, 1}});
    CHECK(nonneg_feasible(a, iv({0, 0, 1})));

    // Degenerate shapes.
    CHECK(nonneg_feasible(IntMatrix(0, 0), IntVec{}));
    CHECK(nonneg_feasible(IntMatrix(2, 0), iv({0, 0})));
    CHECK_FALSE(nonneg_feasible(IntMatrix(2, 0), iv({0, 1})));
    CHECK_THROWS_AS(nonneg_feasible(IntMatrix(2, 1), iv({1})), input_error);
}

TEST_CASE("nonneg_feasible: agrees with the basic-solution oracle") {
    std::mt19937_64 rng(999);
    std::uniform_int_distribution<std::size_t> md(1, 4), nd(1, 4);
    for (int t = 0; t < 400; ++t) {
        const IntMatrix a = test_support::random_matrix(rng, md(rng), nd(rng), -4, 4);
        const IntMatrix bm = test_support::random_matrix(rng, a.rows(), 1, -4, 4);
        IntVec b(a.rows());
        for (std::size_t i = 0; i < a.rows(); ++i) b[i] = bm(i, 0);
        CHECK(nonneg_feasible(a, b) == test_support::nonneg_feasible_oracle(a, b));
    }
}
