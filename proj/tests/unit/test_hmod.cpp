#include "moncoh/bar.hpp"
#include "moncoh/hmod.hpp"

#include <gtest/gtest.h>

using namespace moncoh;

namespace {

HModule sign_module(long action) {
    auto c = make_cyclic(0, 2);
    std::map<std::pair<Element, Element>, IntMatrix> act;
    act.emplace(std::pair<Element, Element>{0, 1}, IntMatrix(1, 1, {action}));
    act.emplace(std::pair<Element, Element>{1, 1}, IntMatrix(1, 1, {action}));
    return HModule::tabular(c, {FGAbelianGroup::free(1), FGAbelianGroup::free(1)}, act);
}

}  // namespace

TEST(Group, CyclicArithmetic) {
    const auto g = FGAbelianGroup::cyclic(4);
    EXPECT_TRUE(g.is_zero(std::vector<Integer>{8}));
    EXPECT_FALSE(g.is_zero(std::vector<Integer>{2}));
    EXPECT_TRUE(g.equal(std::vector<Integer>{1}, std::vector<Integer>{-3}));
    EXPECT_EQ(*g.diagonal_orders(), std::vector<Integer>{4});
    EXPECT_TRUE(FGAbelianGroup::cyclic(1).invariants().is_trivial());
    EXPECT_FALSE(FGAbelianGroup::free(2).is_finite());
}

TEST(Group, FromInvariantsRoundTrips) {
    AbGroupInvariants inv{1, {2, 6}};
    EXPECT_EQ(FGAbelianGroup::from_invariants(inv).invariants(), inv);
    // Z^2 / (2,2) is Z + Z/2 and has no diagonal presentation.
    const FGAbelianGroup g(2, IntMatrix::from_rows({{2}, {2}}));
    EXPECT_EQ(g.invariants().to_string(), "Z + Z/2");
    EXPECT_FALSE(g.diagonal_orders());
}

TEST(Module, ConstantActsByIdentity) {
    const auto a = HModule::constant(make_cyclic(1, 2), FGAbelianGroup::cyclic(6));
    EXPECT_TRUE(a.is_constant());
    EXPECT_EQ(a.action(1, 2), IntMatrix::identity(1));
    EXPECT_FALSE(validate_module(a));
}

TEST(Module, TabularSignModule) {
    const auto a = sign_module(-1);
    EXPECT_FALSE(validate_module(a));
    EXPECT_EQ(a.action(0, 1), IntMatrix(1, 1, {-1}));
    EXPECT_EQ(a.action(1, 0), IntMatrix::identity(1));
}

TEST(Module, FunctorialityViolation) {
    const auto v = validate_module(sign_module(2));
    ASSERT_TRUE(v);
    EXPECT_EQ(v->law, "functoriality");
}

TEST(Module, WellDefinednessViolation) {
    auto c = make_cyclic(0, 2);
    std::map<std::pair<Element, Element>, IntMatrix> act;
    act.emplace(std::pair<Element, Element>{0, 1}, IntMatrix(1, 1, {1}));
    act.emplace(std::pair<Element, Element>{1, 1}, IntMatrix(1, 1, {1}));
    const auto a = HModule::tabular(c, {FGAbelianGroup::cyclic(2), FGAbelianGroup::cyclic(3)}, act);
    const auto v = validate_module(a);
    ASSERT_TRUE(v);
    EXPECT_EQ(v->law, "well-defined");
}

TEST(Module, ZmModuleRanks) {
    for (auto [m, q] : {std::pair{0, 3}, std::pair{1, 2}, std::pair{2, 2}}) {
        auto c = make_cyclic(m, q);
        const auto a = zm_module(c);
        EXPECT_FALSE(validate_module(a));
        for (Element x : c->elements()) {
            std::size_t pairs = 0;
            for (Element u : c->elements())
                for (Element v : c->elements()) pairs += c->multiply(u, v) == x;
            EXPECT_EQ(a.group(x).generators(), pairs);
            EXPECT_EQ(a.group(x).invariants().free_rank, pairs);
        }
    }
}

TEST(Cochains, DualizeTranslatesAndScales) {
    const auto a = sign_module(-1);
    const FreeBasis src({{"s", 0}});
    const FreeBasis tgt({{"t", 1}});
    FreeElement d;
    d.add(1, 0, 3);  // t -> 3 * 1_* s
    const IntMatrix m = dualize({d}, src, tgt, a);
    EXPECT_EQ(m, IntMatrix(1, 1, {-3}));
}

TEST(Cochains, GroupOfHoms) {
    auto c = make_cyclic(0, 2);
    const auto a = HModule::constant(c, FGAbelianGroup::cyclic(4));
    const FreeBasis b({{"x", 0}, {"y", 1}, {"z", 1}});
    const CochainGroup g(b, a);
    EXPECT_EQ(g.summands(), 3u);
    EXPECT_EQ(g.dimension(), 3u);
    EXPECT_EQ(g.invariants().to_string(), "Z/4 + Z/4 + Z/4");
    EXPECT_TRUE(g.is_zero(std::vector<Integer>{4, -8, 0}));
    EXPECT_EQ(b.index_of("z"), 2u);
    EXPECT_FALSE(b.index_of("w"));
}
