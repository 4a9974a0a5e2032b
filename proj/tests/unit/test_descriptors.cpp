#include "moncoh/descriptors.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace moncoh;

namespace {

std::string field_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const DescriptorError& e) {
        return e.field();
    }
    return "<no error>";
}

std::string write_temp(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << body;
    return path.string();
}

}  // namespace

TEST(Descriptors, MonoidShorthand) {
    auto m = parse_monoid("cyclic:2,3");
    auto f = std::dynamic_pointer_cast<const FiniteCommutativeMonoid>(m);
    ASSERT_TRUE(f);
    EXPECT_EQ(f->cyclic_parameters(), std::make_pair(2, 3));
    EXPECT_FALSE(parse_monoid("infinite-cyclic")->is_finite());
    EXPECT_THROW(parse_monoid("cyclic:2"), DescriptorError);
    EXPECT_THROW(parse_monoid("cyclic:0,1"), std::invalid_argument);
}

TEST(Descriptors, MonoidJson) {
    auto m = parse_monoid(R"({"kind":"table","size":3,"identity":0,"table":[[0,1,2],[1,2,2],[2,2,2]]})");
    EXPECT_EQ(m->multiply(1, 1), 2);
    EXPECT_EQ(*parse_monoid(R"({"kind":"cyclic","index":1,"period":2})")->size(), 3u);
    EXPECT_FALSE(parse_monoid(R"({"kind":"infinite-cyclic"})")->is_finite());
}

TEST(Descriptors, MonoidErrorsPointAtFields) {
    EXPECT_EQ(field_of([] { parse_monoid(R"({"kind":"table","size":2,"identity":0,"table":[[0,1],[1]]})"); }),
              "/table/1");
    EXPECT_EQ(field_of([] { parse_monoid(R"({"kind":"table","size":2,"identity":0,"table":[[0,1],[1,"x"]]})"); }),
              "/table/1/1");
    EXPECT_EQ(field_of([] { parse_monoid(R"({"kind":"table","size":2,"table":[[0,1],[1,0]]})"); }), "/identity");
    EXPECT_EQ(field_of([] { parse_monoid(R"({"kind":"table","size":2,"identity":0,"table":[[0,1],[1,5]]})"); }),
              "/table");
    EXPECT_EQ(field_of([] { parse_monoid(R"({"kind":"cyclic","index":1,"period":0})"); }), "/period");
    EXPECT_EQ(field_of([] { parse_monoid(R"({"kind":"magma"})"); }), "/kind");
    EXPECT_EQ(field_of([] { parse_monoid("{not json"); }), "monoid");
}

TEST(Descriptors, GroupGrammar) {
    EXPECT_EQ(parse_group("Z").invariants().to_string(), "Z");
    EXPECT_EQ(parse_group("Z/4").invariants().to_string(), "Z/4");
    EXPECT_EQ(parse_group("Z^3").invariants().to_string(), "Z^3");
    EXPECT_EQ(parse_group("Z/2+Z/3").invariants().to_string(), "Z/6");
    EXPECT_EQ(parse_group("Z/2+Z/4+Z").invariants().to_string(), "Z + Z/2 + Z/4");
    EXPECT_TRUE(parse_group("Z/1").invariants().is_trivial());
    EXPECT_THROW(parse_group("Q"), DescriptorError);
    EXPECT_THROW(parse_group("Z/0"), DescriptorError);
    EXPECT_THROW(parse_group(""), DescriptorError);
}

TEST(Descriptors, CoefficientJson) {
    auto m = parse_monoid("cyclic:0,2");
    const auto c = parse_coefficients(R"({"kind":"constant","group":{"free_rank":1,"torsion":[2]}})", m);
    EXPECT_TRUE(c.is_constant());
    EXPECT_EQ(c.group(1).invariants().to_string(), "Z + Z/2");
    const auto t = parse_coefficients(
        R"({"kind":"tabular","groups":{"0":{"free_rank":1,"torsion":[]},"1":{"free_rank":1,"torsion":[]}},
            "actions":{"0,1":[[-1]],"1,1":[[-1]]}})",
        m);
    EXPECT_EQ(t.action(0, 1), IntMatrix(1, 1, {-1}));
    EXPECT_EQ(field_of([&] {
                  parse_coefficients(R"({"kind":"tabular","groups":{"0":{"free_rank":1,"torsion":[]},
                      "1":{"free_rank":1,"torsion":[]}},"actions":{"0,1":[[2]],"1,1":[[2]]}})",
                                     m);
              }),
              "/actions");
    EXPECT_EQ(field_of([&] { parse_coefficients(R"({"kind":"constant","group":{"free_rank":0,"torsion":[1]}})", m); }),
              "/group/torsion/0");
    EXPECT_EQ(field_of([&] { parse_coefficients(R"({"kind":"tabular","groups":{"0":{"free_rank":1,"torsion":[]}}})", m); }),
              "/groups/1");
}

TEST(Descriptors, FilesAndCocycles) {
    const auto path = write_temp("moncoh_cocycle.json", R"({"g":{"1,1,1":[0]},"mu":{"1,1":[1]}})");
    const auto c = parse_cocycle("@" + path);
    EXPECT_EQ(c.g.at({1, 1, 1}), std::vector<Integer>{0});
    EXPECT_EQ(c.mu.at({1, 1}), std::vector<Integer>{1});
    EXPECT_EQ(field_of([] { parse_cocycle(R"({"g":{"1,1":[0]}})"); }), "/g/1,1");
    EXPECT_EQ(field_of([] { parse_cocycle(R"({"nu":{}})"); }), "/nu");
    EXPECT_THROW(parse_cocycle("@/nonexistent/file.json"), DescriptorError);
    const auto mp = write_temp("moncoh_monoid.json", R"({"kind":"cyclic","index":0,"period":3})");
    EXPECT_EQ(*parse_monoid("@" + mp)->size(), 3u);
}
