#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = moncoh::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, CohomologyJson) {
    const auto r = run({"cohomology", "--monoid", "cyclic:0,2", "--level", "2", "--degree", "4", "--coeff", "Z/4", "--json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"free_rank\":0,\"torsion\":[4]}\n");
}

TEST(Cli, VanishingBelowTheLevel) {
    const auto r = run({"cohomology", "--monoid", "cyclic:0,2", "--level", "2", "--degree", "1", "--coeff", "Z", "--json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"free_rank\":0,\"torsion\":[]}\n");
}

TEST(Cli, ContractionPasses) {
    const auto r = run({"verify", "contraction", "--index", "1", "--period", "1", "--max-degree", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_NE(r.out.find("PASS d Phi + Phi d = gf - id"), std::string::npos);
}

TEST(Cli, JsonIsByteIdentical) {
    const std::vector<std::string> args{"cyclic", "groups", "--index", "2", "--period", "3", "--coeff", "Z/9", "--json"};
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out,
              "{\"H2(2)\":{\"free_rank\":0,\"torsion\":[3]},\"H3(2)\":{\"free_rank\":0,\"torsion\":[3]},"
              "\"H4(2)\":{\"free_rank\":0,\"torsion\":[3]},\"H5(3)\":{\"free_rank\":0,\"torsion\":[]}}\n");
}

TEST(Cli, OracleAgrees) {
    const auto r = run({"oracle", "--monoid", "cyclic:0,2", "--coeff", "Z/2", "--level", "3", "--degree", "5", "--json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"agree\":true"), std::string::npos);
    const auto c = run({"cohomology", "--monoid", "cyclic:0,2", "--coeff", "Z/2", "--level", "3", "--degree", "5", "--json"});
    EXPECT_NE(r.out.find("\"smith\":" + c.out.substr(0, c.out.size() - 1)), std::string::npos);
}

TEST(Cli, GroupoidCommands) {
    const auto path = (std::filesystem::temp_directory_path() / "moncoh_cli_cocycle.json").string();
    std::ofstream(path) << R"({"g":{"1,1,1":[1]},"mu":{}})";
    const auto bad = run({"groupoid", "check", "--monoid", "cyclic:0,2", "--coeff", "Z/2", "--cocycle", path});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.out.find("FAIL hexagon at (1,1,1)"), std::string::npos);
    std::ofstream(path) << R"({"mu":{"1,1":[1]}})";
    EXPECT_EQ(run({"groupoid", "check", "--monoid", "cyclic:0,2", "--coeff", "Z/2", "--cocycle", path}).code, 0);
    const auto cls = run({"groupoid", "classify", "--monoid", "cyclic:0,2", "--coeff", "Z/2", "--json"});
    EXPECT_EQ(cls.out, "{\"candidates\":4,\"cocycles\":2,\"classes\":2}\n");
}

TEST(Cli, OtherCommands) {
    const auto cells = run({"cells", "--monoid", "cyclic:0,2", "--level", "2", "--degree", "5", "--json"});
    EXPECT_EQ(cells.code, 0);
    EXPECT_NE(cells.out.find("\"count\":3"), std::string::npos);
    EXPECT_EQ(run({"grillet", "--monoid", "cyclic:1,2", "--coeff", "Z/2", "--json"}).code, 0);
    EXPECT_EQ(run({"verify", "bar", "--monoid", "cyclic:1,1", "--level", "2", "--max-degree", "4"}).code, 0);
    const auto inf = run({"cohomology", "--monoid", "infinite-cyclic", "--level", "3", "--degree", "5", "--coeff", "Z/4", "--json"});
    EXPECT_EQ(inf.out, "{\"free_rank\":0,\"torsion\":[2]}\n");
}

TEST(Cli, InputErrorsExitTwo) {
    auto r = run({"cohomology", "--monoid", "cyclic:0,x", "--level", "1", "--degree", "1"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("cyclic:0,x"), std::string::npos);
    r = run({"cohomology", "--monoid", R"({"kind":"table","size":2,"identity":0,"table":[[0,1],[1,"a"]]})", "--level",
             "1", "--degree", "1"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("/table/1/1"), std::string::npos);
    EXPECT_EQ(run({"cohomology", "--monoid", "cyclic:0,2", "--level", "2", "--degree", "9"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"cohomology", "--level", "1"}).code, 2);
    EXPECT_EQ(run({"oracle", "--monoid", "cyclic:0,2", "--coeff", "Z", "--level", "1", "--degree", "1"}).code, 2);
}
