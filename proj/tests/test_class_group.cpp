#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "test_support.hpp"
#include "toraut/class_group.hpp"
#include "toraut/errors.hpp"
#include "toraut/hermite.hpp"

using namespace toraut;
using test_support::iv;

namespace {

Cone make(std::size_t n, const std::vector<IntVec>& rays) {
    return build_cone(n, rays, false).cone;
}

} // namespace

TEST_CASE("class_group: affine plane is factorial") {
    const auto [g, cls] = class_group(make(2, {iv({1, 0}), iv({0, 1})}));
    CHECK(g.is_trivial());
    CHECK(g.free_rank() == 0);
    CHECK(g.torsion().empty());
    CHECK(cls[0].is_zero());
    CHECK(cls[1].is_zero());
}

TEST_CASE("class_group: cusp surface gives Z/3 with classes (2,1)") {
    const auto [g, cls] = class_group(make(2, {iv({0, 1}), iv({3, -2})}));
    CHECK(g.free_rank() == 0);
    CHECK(g.torsion() == std::vector<Int>{3});
    CHECK(cls[0].torsion_part == iv({2}));
    CHECK(cls[1].torsion_part == iv({1}));
    CHECK(g.order() == 3);
}

TEST_CASE("class_group: quadric threefold cone gives Z with classes (1,-1,1,-1)") {
    const auto [g, cls] =
        class_group(make(3, {iv({1, -1, 0}), iv({1, 0, -1}), iv({0, 1, 0}), iv({0, 0, 1})}));
    CHECK(g.free_rank() == 1);
    CHECK(g.torsion().empty());
    CHECK(cls[0].free_part == iv({1}));
    CHECK(cls[1].free_part == iv({-1}));
    CHECK(cls[2].free_part == iv({1}));
    CHECK(cls[3].free_part == iv({-1}));
    CHECK(g.order() == 0); // infinite
    CHECK(g.element_order(cls[0]) == 0);
}

TEST_CASE("class_group: (Z/2)^2 with the three nonzero classes") {
    const auto [g, cls] = class_group(make(3, {iv({2, 0, 1}), iv({0, 2, 1}), iv({0, 0, 1})}));
    CHECK(g.free_rank() == 0);
    CHECK(g.torsion() == std::vector<Int>{2, 2});
    std::set<ClassElement> distinct(cls.begin(), cls.end());
    CHECK(distinct.size() == 3);
    for (const ClassElement& e : cls) {
        CHECK_FALSE(e.is_zero());
        CHECK(g.element_order(e) == 2);
    }
}

TEST_CASE("class_of: relations die, arithmetic is additive") {
    const Cone c = make(2, {iv({0, 1}), iv({3, -2})});
    const auto [g, cls] = class_group(c);

    // Every row of V is a relation.
    const IntMatrix v = c.ray_matrix();
    for (std::size_t j = 0; j < v.rows(); ++j) CHECK(g.class_of(v.row(j)).is_zero());

    // 2 + 1 = 0 mod 3.
    CHECK(g.class_of(iv({1, 1})).is_zero());

    CHECK_THROWS_AS(g.class_of(iv({1})), input_error);

    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long long> d(-6, 6);
    for (int t = 0; t < 50; ++t) {
        IntVec a{d(rng), d(rng)}, b{d(rng), d(rng)}, sum{a[0] + b[0], a[1] + b[1]};
        CHECK(g.class_of(sum) == g.add(g.class_of(a), g.class_of(b)));
    }
}

TEST_CASE("class_of on the quadric threefold: (1,1,0,0) is principal") {
    const Cone c = make(3, {iv({1, -1, 0}), iv({1, 0, -1}), iv({0, 1, 0}), iv({0, 0, 1})});
    const auto [g, cls] = class_group(c);
    CHECK(g.class_of(iv({1, 1, 0, 0})).is_zero());
}

TEST_CASE("class_of is zero exactly on the relation lattice") {
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<long long> d(-5, 5);
    for (int t = 0; t < 60; ++t) {
        const Cone c = test_support::random_cone(rng, 2 + t % 2, 5, 4);
        const auto [g, cls] = class_group(c);
        for (int k = 0; k < 10; ++k) {
            IntVec coeffs(c.ray_count());
            for (Int& x : coeffs) x = d(rng);
            CHECK(g.class_of(coeffs).is_zero() ==
                  lattice_contains(g.relation_lattice(), coeffs));
        }
    }
}

TEST_CASE("ray classes generate every element of a small finite group") {
    std::mt19937_64 rng(606);
    for (int t = 0; t < 40; ++t) {
        const Cone c = test_support::random_cone(rng, 2 + t % 2, 5, 4);
        const auto [g, cls] = class_group(c);
        if (g.order() == 0 || g.order() > 64) continue;
        std::set<ClassElement> reached{g.zero()};
        for (;;) {
            const std::size_t before = reached.size();
            std::set<ClassElement> next = reached;
            for (const ClassElement& e : reached)
                for (const ClassElement& gen : cls) next.insert(g.add(e, gen));
            reached = std::move(next);
            if (reached.size() == before) break;
        }
        CHECK(Int(reached.size()) == g.order());
    }
}

TEST_CASE("class group data is a GL_n(Z) invariant") {
    std::mt19937_64 rng(7001);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 2 + t % 2;
        const Cone c = test_support::random_cone(rng, n, 5, 4);
        const IntMatrix u = test_support::random_unimodular(rng, n, 5);
        std::vector<IntVec> moved;
        for (const IntVec& v : c.rays) moved.push_back(u * v);
        const Cone cu = build_cone(n, moved, false).cone;

        const auto [g1, cls1] = class_group(c);
        const auto [g2, cls2] = class_group(cu);
        CHECK(g1.free_rank() == g2.free_rank());
        CHECK(g1.torsion() == g2.torsion());
        std::multiset<Int> orders1, orders2;
        for (const auto& e : cls1) orders1.insert(g1.element_order(e));
        for (const auto& e : cls2) orders2.insert(g2.element_order(e));
        CHECK(orders1 == orders2);
    }
}

TEST_CASE("relabeling rays permutes the class data") {
    std::mt19937_64 rng(7002);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 2 + t % 2;
        const Cone c = test_support::random_cone(rng, n, 5, 4);
        const std::size_t r = c.ray_count();
        std::vector<std::size_t> pi(r);
        for (std::size_t i = 0; i < r; ++i) pi[i] = i;
        std::shuffle(pi.begin(), pi.end(), rng);
        std::vector<IntVec> relabeled(r);
        for (std::size_t i = 0; i < r; ++i) relabeled[i] = c.rays[pi[i]];
        const Cone cp = build_cone(n, relabeled, false).cone;

        const auto [g1, cls1] = class_group(c);
        const auto [g2, cls2] = class_group(cp);
        CHECK(g1.free_rank() == g2.free_rank());
        CHECK(g1.torsion() == g2.torsion());
        // The canonical frame may differ by a group automorphism, so
        // compare the frame-independent shadow: zero-ness, element
        // orders, and the equality pattern, all transported by pi.
        for (std::size_t i = 0; i < r; ++i) {
            CHECK(cls2[i].is_zero() == cls1[pi[i]].is_zero());
            CHECK(g2.element_order(cls2[i]) == g1.element_order(cls1[pi[i]]));
            for (std::size_t j = 0; j < r; ++j)
                CHECK((cls2[i] == cls2[j]) == (cls1[pi[i]] == cls1[pi[j]]));
        }
    }
}

TEST_CASE("degenerate cones still present the cokernel") {
    const auto [g, cls] = class_group(build_cone(2, {iv({1, 0})}, false).cone);
    CHECK(g.free_rank() == 0);
    CHECK(g.torsion().empty());
    CHECK(cls.size() == 1);

    const auto [gt, clst] = class_group(build_cone(2, {}, false).cone);
    CHECK(gt.is_trivial());
    CHECK(clst.empty());
}
