#include "moncoh/monoid.hpp"

#include <gtest/gtest.h>

using namespace moncoh;

namespace {

// Class representative of n in N / (x ~ y iff x = y, or x, y >= m and q | x - y).
Element quotient_rep(int m, int q, Element n) {
    while (n >= m + q) n -= q;
    return n;
}

}  // namespace

TEST(Cyclic, TableIsTheQuotientOfN) {
    for (int m = 0; m <= 4; ++m)
        for (int q = m == 0 ? 2 : 1; q <= 4; ++q) {
            auto c = make_cyclic(m, q);
            ASSERT_EQ(*c->size(), static_cast<std::size_t>(m + q));
            EXPECT_EQ(c->identity(), 0);
            EXPECT_EQ(c->cyclic_parameters(), std::make_pair(m, q));
            for (Element x = 0; x < m + q; ++x)
                for (Element y = 0; y < m + q; ++y) {
                    EXPECT_EQ(c->multiply(x, y), quotient_rep(m, q, x + y));
                    EXPECT_EQ(x + y - c->multiply(x, y), q * cyclic_carry(m, q, x, y));
                }
            for (Element n = 0; n < 40; ++n) EXPECT_EQ(cyclic_reduce(m, q, n), quotient_rep(m, q, n));
        }
}

TEST(Cyclic, ZeroIndexIsTheCyclicGroup) {
    auto c = make_cyclic(0, 5);
    for (Element x = 0; x < 5; ++x)
        for (Element y = 0; y < 5; ++y) EXPECT_EQ(c->multiply(x, y), (x + y) % 5);
}

TEST(Cyclic, ElementLists) {
    auto c = make_cyclic(1, 2);
    EXPECT_EQ(c->elements(), (std::vector<Element>{0, 1, 2}));
    EXPECT_EQ(c->nonunit_elements(), (std::vector<Element>{1, 2}));
}

TEST(Infinite, AdditionOnN) {
    auto n = make_infinite_cyclic();
    EXPECT_FALSE(n->is_finite());
    EXPECT_EQ(n->multiply(3, 4), 7);
    EXPECT_TRUE(n->contains(1000));
    EXPECT_FALSE(n->contains(-1));
    EXPECT_THROW(n->elements(), std::logic_error);
}

TEST(Table, KleinFourGroup) {
    FiniteCommutativeMonoid k({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}, 0, "V4");
    EXPECT_EQ(k.multiply(1, 2), 3);
    EXPECT_EQ(k.name(), "V4");
    EXPECT_FALSE(k.cyclic_parameters());
}

TEST(Table, ViolationsCarryWitnesses) {
    auto expect_law = [](std::vector<std::vector<Element>> t, Element e, const std::string& law,
                         std::vector<Element> witness) {
        try {
            FiniteCommutativeMonoid m(t, e);
            FAIL() << "accepted a table violating " << law;
        } catch (const MonoidLawError& err) {
            EXPECT_EQ(err.law(), law);
            EXPECT_EQ(err.witness(), witness);
        }
    };
    expect_law({{0, 1}, {1, 2}}, 0, "closure", {1, 1});
    expect_law({{0, 1}, {0, 1}}, 0, "identity", {1});
    expect_law({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, 0, "commutativity", {1, 2});
    // rock-paper-scissors: (1*2)*3 = 3 but 1*(2*3) = 1
    expect_law({{0, 1, 2, 3}, {1, 1, 2, 1}, {2, 2, 2, 3}, {3, 1, 3, 3}}, 0, "associativity", {1, 2, 3});
}

TEST(Table, FindLawViolationOnValidTable) {
    EXPECT_FALSE(find_law_violation(make_cyclic(2, 3)->table(), 0));
}
