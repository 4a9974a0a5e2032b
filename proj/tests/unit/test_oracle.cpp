#include "moncoh/cohomology.hpp"
#include "moncoh/oracle.hpp"

#include <gtest/gtest.h>

using namespace moncoh;

TEST(Oracle, HandCountedDegreeOne) {
    auto c = make_cyclic(0, 2);
    const auto a = HModule::constant(c, FGAbelianGroup::cyclic(2));
    const auto b = brute_force_cohomology(c, 1, 1, a);
    EXPECT_EQ(b.cochain_count, 2u);
    EXPECT_EQ(b.cocycle_count, 2u);
    EXPECT_EQ(b.coboundary_count, 1u);
    EXPECT_EQ(b.invariants.to_string(), "Z/2");
}

TEST(Oracle, AgreesWithSmithPipeline) {
    for (auto [m, q] : {std::pair{0, 2}, std::pair{1, 1}, std::pair{0, 3}, std::pair{1, 2}})
        for (long n : {2, 3, 4}) {
            auto c = make_cyclic(m, q);
            const auto a = HModule::constant(c, FGAbelianGroup::cyclic(n));
            for (int r = 1; r <= 3; ++r)
                for (int d = 0; d <= r + 2; ++d) {
                    BruteForceResult b;
                    try {
                        b = brute_force_cohomology(c, r, d, a);
                    } catch (const std::length_error&) {
                        continue;
                    }
                    const auto s = cohomology_group(c, r, d, a);
                    EXPECT_EQ(b.invariants, s) << "C(" << m << "," << q << ") Z/" << n << " r=" << r << " n=" << d;
                    EXPECT_EQ(b.cocycle_count / b.coboundary_count, s.order().get_ui());
                }
        }
}

TEST(Oracle, NonCyclicQuotient) {
    // Z/2 + Z/4 coefficients exercise the p^k counting with two factors.
    auto c = make_cyclic(0, 2);
    AbGroupInvariants inv{0, {2, 4}};
    const auto a = HModule::constant(c, FGAbelianGroup::from_invariants(inv));
    for (int d = 0; d <= 4; ++d) EXPECT_EQ(brute_force_cohomology(c, 2, d, a).invariants, cohomology_group(c, 2, d, a));
}

TEST(Oracle, LevelThreeTopOverZ2) {
    auto c = make_cyclic(0, 2);
    const auto a = HModule::constant(c, FGAbelianGroup::cyclic(2));
    EXPECT_EQ(brute_force_cohomology(c, 3, 5, a).invariants.order(), 2);
}

TEST(Oracle, RejectsWhatItCannotEnumerate) {
    auto c = make_cyclic(0, 2);
    EXPECT_THROW(brute_force_cohomology(c, 1, 1, HModule::constant(c, FGAbelianGroup::free(1))), std::invalid_argument);
    EXPECT_THROW(brute_force_cohomology(c, 2, 5, HModule::constant(c, FGAbelianGroup::cyclic(2))), std::out_of_range);
    auto big = make_cyclic(0, 6);
    EXPECT_THROW(brute_force_cohomology(big, 1, 3, HModule::constant(big, FGAbelianGroup::cyclic(7))), std::length_error);
}
