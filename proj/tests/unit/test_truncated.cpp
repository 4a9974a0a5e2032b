#include "moncoh/cohomology.hpp"
#include "moncoh/truncated.hpp"

#include <gtest/gtest.h>

using namespace moncoh;

namespace {

void expect_matches_generic(std::shared_ptr<const Monoid> m, const HModule& a, int r, int n) {
    const auto d = explicit_coboundary(m, r, n);
    const auto complex = cochain_complex(m, r, a, n + 1);
    const IntMatrix p0 = shape_to_generic(d.source, complex.cells[static_cast<std::size_t>(n)], a);
    const IntMatrix p1 = shape_to_generic(d.target, complex.cells[static_cast<std::size_t>(n + 1)], a);
    EXPECT_EQ(realize(d, a), p1 * complex.coboundary(n) * p0.transpose()) << "r=" << r << " n=" << n;
}

}  // namespace

TEST(Shape, StandardComponents) {
    auto c = make_cyclic(1, 2);
    const auto s = standard_shape(c, 3, 5);
    ASSERT_EQ(s.components().size(), 2u);
    EXPECT_EQ(s.components()[0].name, "g");
    EXPECT_EQ(s.components()[1].name, "mu");
    EXPECT_EQ(s.entries().size(), 8u + 4u);
    const auto t = standard_shape(c, 3, 6);
    EXPECT_EQ(t.components().size(), 4u);
    EXPECT_EQ(standard_shape(c, 2, 5).components().size(), 3u);
    EXPECT_EQ(standard_shape(c, 1, 3).entries().size(), 8u);
}

TEST(Explicit, AgreesWithBarEngine) {
    for (auto [m, q] : {std::pair{0, 2}, std::pair{1, 1}, std::pair{1, 2}, std::pair{0, 3}}) {
        auto c = make_cyclic(m, q);
        for (const auto& g : {FGAbelianGroup::free(1), FGAbelianGroup::cyclic(4)}) {
            const auto a = HModule::constant(c, g);
            for (int n = 1; n <= 4; ++n) expect_matches_generic(c, a, 1, n);
            for (int r = 2; r <= 4; ++r)
                for (int n = r; n <= r + 2; ++n) expect_matches_generic(c, a, r, n);
        }
    }
}

TEST(Explicit, AgreesOnTabularModule) {
    auto c = make_cyclic(1, 1);
    std::map<std::pair<Element, Element>, IntMatrix> act;
    act.emplace(std::pair<Element, Element>{0, 1}, IntMatrix(1, 1, {2}));
    act.emplace(std::pair<Element, Element>{1, 1}, IntMatrix(1, 1, {1}));
    const auto a = HModule::tabular(c, {FGAbelianGroup::free(1), FGAbelianGroup::cyclic(6)}, act);
    ASSERT_FALSE(validate_module(a));
    for (int r = 2; r <= 3; ++r)
        for (int n = r; n <= r + 2; ++n) expect_matches_generic(c, a, r, n);
}

TEST(Explicit, TruncatedComplexesCompose) {
    auto c = make_cyclic(2, 3);
    const auto a = HModule::constant(c, FGAbelianGroup::free(1));
    const auto t = truncated_coboundaries(c, a);
    EXPECT_TRUE((t.level2.at(4) * t.level2.at(3)).is_zero());
    EXPECT_TRUE((t.level3.at(4) * t.level3.at(3)).is_zero());
    EXPECT_TRUE((t.level3.at(5) * t.level3.at(4)).is_zero());
}

TEST(Explicit, EvaluateMatchesRealize) {
    auto c = make_cyclic(1, 2);
    const auto a = HModule::constant(c, FGAbelianGroup::free(1));
    const auto d = explicit_coboundary(c, 2, 4);
    std::vector<std::vector<Integer>> values;
    std::vector<Integer> flat;
    long k = 1;
    for (std::size_t i = 0; i < d.source.entries().size(); ++i, k = (k * 7) % 11) {
        values.push_back({Integer(k - 5)});
        flat.push_back(k - 5);
    }
    const auto image = realize(d, a).apply(flat);
    for (std::size_t i = 0; i < d.target.entries().size(); ++i) {
        const auto& e = d.target.entries()[i];
        EXPECT_EQ(evaluate_terms(d.terms(e), d.source, values, d.target.projection(e), a)[0], image[i]);
    }
}
