#include "moncoh/cohomology.hpp"
#include "moncoh/cyclic.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace moncoh;

namespace {

// Hom(Z/n, A) for A = Z/t (t = 0 for Z).
AbGroupInvariants hom_cyclic(long n, long t) {
    if (t == 0) return {};
    return canonical_invariants({Integer(std::gcd(n, t))});
}

FGAbelianGroup coeff(long t) { return t == 0 ? FGAbelianGroup::free(1) : FGAbelianGroup::cyclic(t); }

}  // namespace

TEST(SmallResolution, OneGeneratorPerDegree) {
    auto r = small_resolution(1, 2, 6);
    for (int d = 0; d <= 6; ++d) EXPECT_EQ(r->basis(d).size(), 1u);
    const auto v = validate_dga(*r, 6);
    EXPECT_FALSE(v) << v->law << ": " << v->message;
    EXPECT_FALSE(validate_dga(*small_resolution_inf(4), 4));
    EXPECT_TRUE(small_resolution_inf(4)->basis(2).empty());
}

TEST(SmallResolution, Projections) {
    // v_k sits over wp(km), w_k over wp(km + 1).
    const int m = 2, q = 3;
    auto r = small_resolution(m, q, 7);
    for (int k = 0; k <= 3; ++k) {
        EXPECT_EQ(r->projection(SmallResolution::v(k)), cyclic_reduce(m, q, k * (m + q)));
        EXPECT_EQ(r->projection(SmallResolution::w(k)), cyclic_reduce(m, q, k * (m + q) + 1));
    }
}

TEST(Contraction, IdentitiesHold) {
    for (auto [m, q] : {std::pair{0, 2}, std::pair{1, 1}, std::pair{2, 3}, std::pair{0, 4}}) {
        const auto rep = verify_contraction(m, q, 4);
        for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.identity << " at " << c.witness.value_or("");
        EXPECT_TRUE(rep.closed_formula_mismatches.empty());
    }
    const auto inf = verify_contraction_inf(3, 4);
    EXPECT_TRUE(inf.passed());
    EXPECT_TRUE(inf.check("fg = id").passed);
    EXPECT_THROW(inf.check("no such identity"), std::out_of_range);
}

TEST(LeechCyclic, TwoTermMapMatchesBarPipeline) {
    for (auto [m, q] : {std::pair{0, 2}, std::pair{0, 3}, std::pair{1, 2}, std::pair{2, 1}})
        for (long t : {0, 2, 6}) {
            auto c = make_cyclic(m, q);
            const auto a = HModule::constant(c, coeff(t));
            const auto complex = cochain_complex(c, 1, a, 6);
            for (int k = 0; k <= 1; ++k) {
                const auto [odd, even] = leech_groups_cyclic(m, q, k, a);
                EXPECT_EQ(odd, cohomology_at(complex, 2 * k + 1));
                EXPECT_EQ(even, cohomology_at(complex, 2 * k + 2));
            }
        }
}

TEST(SmallComplex, MatchesBarPipeline) {
    for (auto [m, q] : {std::pair{0, 2}, std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 3}, std::pair{0, 3}})
        for (long t : {0, 2, 4, 9}) {
            auto c = make_cyclic(m, q);
            const auto a = HModule::constant(c, coeff(t));
            const auto l2 = level2_groups_cyclic(m, q, a);
            EXPECT_EQ(l2.h2, cohomology_group(c, 2, 2, a));
            EXPECT_EQ(l2.h3, cohomology_group(c, 2, 3, a));
            EXPECT_EQ(l2.h4, cohomology_group(c, 2, 4, a));
            EXPECT_EQ(level3_top(m, q, a), cohomology_group(c, 3, 5, a));
            const auto sc = small_cochain_complex(m, q, 3, a);
            EXPECT_TRUE((sc.coboundaries[1] * sc.coboundaries[0]).is_zero());
            EXPECT_TRUE((sc.coboundaries[2] * sc.coboundaries[1]).is_zero());
        }
}

TEST(ClosedForm, TopGroupsAreHomFromCyclic) {
    for (long q : {1, 2, 3, 4})
        for (long t : {0, 2, 4, 9, 8}) {
            const long n2 = std::gcd(2 * q, q * q);
            EXPECT_EQ(closed_form_top(q, coeff(t), 2), hom_cyclic(n2, t));
            EXPECT_EQ(closed_form_top(q, coeff(t), 3), hom_cyclic(std::gcd(2L, q), t));
            auto c = make_cyclic(1, static_cast<int>(q));
            const auto a = HModule::constant(c, coeff(t));
            EXPECT_EQ(cohomology_group(c, 2, 4, a), hom_cyclic(n2, t)) << "q=" << q << " t=" << t;
        }
}

TEST(InfiniteCyclic, LevelOneIsFree) {
    // N is free on one generator: H^1 = A and nothing above.
    auto n = make_infinite_cyclic();
    const auto a = HModule::constant(n, FGAbelianGroup::cyclic(6));
    EXPECT_EQ(infinite_cyclic_groups(1, 1, a).to_string(), "Z/6");
    EXPECT_TRUE(infinite_cyclic_groups(1, 2, a).is_trivial());
    EXPECT_TRUE(infinite_cyclic_groups(1, 3, a).is_trivial());
}

TEST(InfiniteCyclic, LevelTwoAndThree) {
    auto n = make_infinite_cyclic();
    for (long t : {0, 2, 4, 3}) {
        const auto a = HModule::constant(n, coeff(t));
        for (int k = 1; k <= 2; ++k) EXPECT_EQ(infinite_cyclic_groups(2, 2 * k, a), coeff(t).invariants());
        for (int n = 1; n <= 3; n += 2) EXPECT_TRUE(infinite_cyclic_groups(2, n, a).is_trivial());
        // 2-torsion of A
        const AbGroupInvariants two_torsion = t == 0 ? AbGroupInvariants{} : hom_cyclic(2, t);
        EXPECT_EQ(infinite_cyclic_groups(3, 5, a), two_torsion);
    }
}
