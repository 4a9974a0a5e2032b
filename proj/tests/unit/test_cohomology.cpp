#include "moncoh/cohomology.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace moncoh;

namespace {

// Group cohomology of Z/q with trivial coefficients Z/n (n = 0 for Z), from the
// periodic resolution: A in degree 0, then A[q] and A/qA alternately.
AbGroupInvariants cyclic_group_cohomology(long q, long n, int degree) {
    if (degree == 0) return canonical_invariants({Integer(n)});
    if (n == 0) return degree % 2 ? AbGroupInvariants{} : canonical_invariants({Integer(q)});
    return canonical_invariants({Integer(std::gcd(q, n))});
}

}  // namespace

TEST(LevelOne, CyclicGroupsMatchPeriodicResolution) {
    for (long q : {2, 3, 4})
        for (long n : {0, 2, 4, 6}) {
            auto c = make_cyclic(0, static_cast<int>(q));
            const auto a = HModule::constant(c, n == 0 ? FGAbelianGroup::free(1) : FGAbelianGroup::cyclic(n));
            const auto complex = cochain_complex(c, 1, a, 5);
            for (int d = 0; d <= 4; ++d)
                EXPECT_EQ(cohomology_at(complex, d), cyclic_group_cohomology(q, n, d))
                    << "Z/" << q << " coeff " << n << " degree " << d;
        }
}

TEST(LevelOne, IsomorphicModulesGiveIsomorphicGroups) {
    // Over a group every module is isomorphic to a constant one; the sign twist
    // 1_* = -1 is isomorphic to constant Z.
    auto c = make_cyclic(0, 2);
    std::map<std::pair<Element, Element>, IntMatrix> act;
    act.emplace(std::pair<Element, Element>{0, 1}, IntMatrix(1, 1, {-1}));
    act.emplace(std::pair<Element, Element>{1, 1}, IntMatrix(1, 1, {-1}));
    const auto twisted = HModule::tabular(c, {FGAbelianGroup::free(1), FGAbelianGroup::free(1)}, act);
    const auto constant = HModule::constant(c, FGAbelianGroup::free(1));
    for (int r = 1; r <= 2; ++r)
        for (int n = 0; n <= r + 2; ++n)
            EXPECT_EQ(cohomology_group(c, r, n, twisted), cohomology_group(c, r, n, constant)) << r << " " << n;
}

TEST(Levels, DegreeZeroAndVanishingRange) {
    for (auto [m, q] : {std::pair{0, 2}, std::pair{1, 1}, std::pair{1, 2}})
        for (long n : {0, 4}) {
            auto c = make_cyclic(m, q);
            const auto g = n == 0 ? FGAbelianGroup::free(1) : FGAbelianGroup::cyclic(n);
            const auto a = HModule::constant(c, g);
            for (int r = 1; r <= 3; ++r) {
                EXPECT_EQ(cohomology_group(c, r, 0, a), g.invariants());
                for (int k = 1; k < r; ++k) EXPECT_TRUE(cohomology_group(c, r, k, a).is_trivial());
            }
        }
}

TEST(Levels, DegreeLimits) {
    auto c = make_cyclic(0, 2);
    const auto a = HModule::constant(c, FGAbelianGroup::cyclic(2));
    EXPECT_EQ(max_cohomology_degree(1), std::numeric_limits<int>::max());
    EXPECT_EQ(max_cohomology_degree(3), 5);
    EXPECT_THROW(cohomology_group(c, 2, 5, a), std::out_of_range);
    EXPECT_THROW(cohomology_group(c, 0, 1, a), std::invalid_argument);
    EXPECT_THROW(cohomology_group(make_infinite_cyclic(), 1, 1, a), std::invalid_argument);
}

TEST(Complex, CoboundariesCompose) {
    auto c = make_cyclic(1, 2);
    const auto a = HModule::constant(c, FGAbelianGroup::free(1));
    for (int r = 1; r <= 3; ++r) {
        const auto complex = cochain_complex(c, r, a, r + 3);
        for (int n = 0; n + 1 < r + 3; ++n) EXPECT_TRUE((complex.coboundary(n + 1) * complex.coboundary(n)).is_zero());
    }
}

TEST(Complex, RejectsModuleOverAnotherMonoid) {
    const auto a = HModule::constant(make_cyclic(0, 2), FGAbelianGroup::free(1));
    EXPECT_THROW(cochain_complex(make_cyclic(0, 2), 1, a, 3), std::invalid_argument);
}
