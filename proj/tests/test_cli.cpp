#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "confviz/io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::temp_directory_path() / (std::string("confviz_cli_") + info->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    RunResult run(const std::string& args, const std::string& env = "") const {
        const auto out = path("stdout.txt");
        const auto err = path("stderr.txt");
        const std::string cmd =
            env + " " + CONFVIZ_CLI + " " + args + " >" + out + " 2>" + err + " </dev/null";
        const int status = std::system(cmd.c_str());
        return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, read(out), read(err)};
    }

    static std::string read(const std::string& p) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenFamilies) {
    EXPECT_EQ(run("gen kneser 7 3 --out " + path("o4.json")).code, 0);
    EXPECT_EQ(confviz::read_json_file(path("o4.json")).at("order"), 35);
    EXPECT_EQ(run("gen hypercube 5 --out " + path("q5.json")).code, 0);
    EXPECT_EQ(confviz::read_json_file(path("q5.json")).at("order"), 32);
    const auto bad = run("gen kneser 3 2");
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("n >= 2k"), std::string::npos);
    EXPECT_EQ(run("gen").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
}

TEST_F(Cli, ProductAndLineGraph) {
    EXPECT_EQ(run("product cycle:7 hypercube:2 --out " + path("p.json")).code, 0);
    EXPECT_EQ(confviz::read_json_file(path("p.json")).at("order"), 28);
    EXPECT_EQ(run("linegraph prism:7 --out " + path("l.json")).code, 0);
    EXPECT_EQ(run("iso " + path("l.json") + " gen_cuboctahedron:7").code, 0);
    EXPECT_EQ(run("iso petersen prism:5").code, 1);
}

TEST_F(Cli, VConstructAndVerify) {
    ASSERT_EQ(run("gen petersen --out " + path("petersen.json")).code, 0);
    ASSERT_EQ(run("vconstruct " + path("petersen.json") + " --out " + path("c.json")).code, 0);
    EXPECT_EQ(run("verify kronecker " + path("petersen.json")).code, 0);
    const auto type = run("verify type " + path("c.json"));
    EXPECT_EQ(type.code, 0);
    EXPECT_EQ(type.out, "(10_3), lineal, connected, self-polar\n");
    EXPECT_EQ(run("verify selfpolar " + path("c.json")).code, 0);

    ASSERT_EQ(run("gen cycle 4 --out " + path("c4.json")).code, 0);
    const auto c4 = run("verify kronecker " + path("c4.json"));
    EXPECT_EQ(c4.code, 1);
    EXPECT_NE(c4.err.find("not admissible"), std::string::npos);
    EXPECT_EQ(run("vconstruct " + path("c4.json")).code, 1);
    EXPECT_EQ(run("vconstruct " + path("c4.json") + " --collapse").code, 0);
    EXPECT_EQ(run("verify nonsense " + path("c4.json")).code, 2);
}

TEST_F(Cli, PetersenSolveIsPerfect) {
    ASSERT_EQ(run("realize petersen --solve --symmetry shift --out " + path("l.json")).code, 0);
    ASSERT_EQ(run("circles " + path("l.json") + " --out " + path("pc.json")).code, 0);
    const auto check = run("check " + path("pc.json") + " --require isometric --require lineal --require determining "
                                                        "--require perfect");
    EXPECT_EQ(check.code, 0);
    EXPECT_NE(check.out.find("perfect: yes"), std::string::npos);
    EXPECT_NE(check.out.find("isometric: yes"), std::string::npos);
    EXPECT_NE(check.out.find("determining: yes"), std::string::npos);
}

TEST_F(Cli, HypercubeDecomposes) {
    ASSERT_EQ(run("realize hypercube:4 --layout hypercube --out " + path("h.json")).code, 0);
    ASSERT_EQ(run("circles " + path("h.json") + " --out " + path("hc.json")).code, 0);
    const auto d = run("verify decompose " + path("hc.json") + " --expect-components 2");
    EXPECT_EQ(d.code, 0);
    EXPECT_NE(d.out.find("components: 2"), std::string::npos);
    EXPECT_NE(d.out.find("(8_4)"), d.out.rfind("(8_4)"));
    EXPECT_EQ(run("verify decompose " + path("hc.json") + " --expect-components 1").code, 1);
}

TEST_F(Cli, RenderSvg) {
    ASSERT_EQ(run("realize gen_cuboctahedron:5 --layout gen_cuboctahedron --out " + path("g.json")).code, 0);
    ASSERT_EQ(run("circles " + path("g.json") + " --out " + path("gc.json")).code, 0);
    ASSERT_EQ(run("render " + path("gc.json") + " --out " + path("a.svg")).code, 0);
    ASSERT_EQ(run("render " + path("gc.json") + " --out " + path("b.svg")).code, 0);
    const auto svg = read(path("a.svg"));
    EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
    EXPECT_NE(svg.find("viewBox="), std::string::npos);
    EXPECT_EQ(svg, read(path("b.svg")));
    EXPECT_EQ(run("render " + path("g.json") + " --labels").code, 0);
    EXPECT_EQ(run("render " + path("nothere.json")).code, 2);
}

TEST_F(Cli, Spatial) {
    ASSERT_EQ(run("spatial dodecahedron project --out " + path("d.json")).code, 0);
    EXPECT_EQ(run("verify type " + path("d.json")).out.rfind("(20_3)", 0), 0u);
    const auto oct = run("spatial octahedron planes");
    EXPECT_EQ(oct.code, 1);
    EXPECT_NE(oct.err.find("not admissible"), std::string::npos);
    ASSERT_EQ(run("spatial cube project --out " + path("cu.json")).code, 0);
    const auto d = run("verify decompose " + path("cu.json"));
    EXPECT_EQ(d.code, 0);
    EXPECT_NE(d.out.find("components: 2"), std::string::npos);
    EXPECT_NE(d.out.find("(4_3)"), std::string::npos);
    EXPECT_EQ(run("spatial cube planes --out " + path("pp.json")).code, 0);
    EXPECT_EQ(run("spatial cube sphere --out " + path("sp.json")).code, 0);
    EXPECT_EQ(run("spatial cube project --pole 1,1,1").code, 1);
}

TEST_F(Cli, N3RealizeAndInvert) {
    ASSERT_EQ(run("n3realize fano --out " + path("f.json")).code, 0);
    EXPECT_EQ(run("verify type " + path("f.json")).out.rfind("(7_3)", 0), 0u);
    ASSERT_EQ(run("n3realize pappus --out " + path("p.json")).code, 0);
    EXPECT_EQ(run("n3realize hypercube:4").code, 2);

    std::ofstream(path("pl.json")) << R"({"points": [[1, 1], [2, 1], [1, 2], [3, 1], [1, 3]],
                                           "lines": [[0, 1, 3], [0, 2, 4]]})";
    ASSERT_EQ(run("invert " + path("pl.json") + " --center 0,0 --radius 2 --out " + path("inv.json")).code, 0);
    const auto check = run("check " + path("inv.json"));
    EXPECT_NE(check.out.find("proper: no"), std::string::npos);
    EXPECT_EQ(run("check " + path("inv.json") + " --require proper").code, 1);
    EXPECT_EQ(run("invert " + path("pl.json") + " --center 1,1").code, 2);
}

TEST_F(Cli, SeedsAreReproducible) {
    ASSERT_EQ(run("realize hypercube:3 --layout hypercube --seed 11 --out " + path("a.json")).code, 0);
    ASSERT_EQ(run("realize hypercube:3 --layout hypercube --out " + path("b.json"), "CONFVIZ_SEED=11").code, 0);
    ASSERT_EQ(run("realize hypercube:3 --layout hypercube --seed 12 --out " + path("c.json")).code, 0);
    const auto a = confviz::read_json_file(path("a.json"));
    const auto b = confviz::read_json_file(path("b.json"));
    EXPECT_EQ(a.at("pos"), b.at("pos"));
    EXPECT_EQ(a.at("meta").at("seed"), 11);
    EXPECT_NE(a.at("pos"), confviz::read_json_file(path("c.json")).at("pos"));
    ASSERT_EQ(run("realize hypercube:3 --layout hypercube --seed 11 --out " + path("a2.json")).code, 0);
    EXPECT_EQ(read(path("a.json")), read(path("a2.json")));
}

TEST_F(Cli, HelpDocumentsToleranceDefaults) {
    const auto h = run("circles --help");
    EXPECT_EQ(h.code, 0);
    EXPECT_NE(h.out.find("--tol-incidence"), std::string::npos);
    EXPECT_NE(h.out.find("1e-09"), std::string::npos);
}
