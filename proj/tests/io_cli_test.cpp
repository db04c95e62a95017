#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "exalg/flags.hpp"
#include "exalg/io.hpp"

using namespace exalg;

TEST_SUITE_BEGIN("io_cli");

namespace {

std::string tmp_file(const std::string& name, const std::string& content) {
    std::string path = "/tmp/exalg_test_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(EXALG_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[512];
    while (fgets(buf, sizeof buf, pipe)) output += buf;
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

} // namespace

TEST_CASE("element coordinate round trips") {
    RandomSource rng(101);
    for (int t = 0; t < 20; ++t) {
        auto v = rng.coords<Rat>(kBrownDim);
        CHECK(parse_coords<Rat>(coords_str<Rat>(v), kBrownDim, 0) == v);
        auto q = rng.coords<QuadExt>(kAlbertDim);
        CHECK(parse_coords<QuadExt>(coords_str<QuadExt>(q), kAlbertDim, 2) == q);
    }
    CHECK_THROWS_AS(parse_coords<Rat>("1 2 3", 27, 0), ParseError);
}

TEST_CASE("subspace files round trip") {
    RandomSource rng(102);
    std::vector<std::vector<Rat>> rows;
    for (int g = 0; g < 4; ++g) rows.push_back(rng.coords<Rat>(10, true));
    RatSubspace sub = RatSubspace::span(10, rows);
    std::ostringstream out;
    write_subspace<Rat>(out, sub);
    std::istringstream in(out.str());
    CHECK(read_subspace<Rat>(in, 0) == sub);
    std::istringstream bad("3");
    CHECK_THROWS_AS(read_subspace<Rat>(bad, 0), ParseError);
    std::istringstream early("4 2\n1 0 0 0\n");
    CHECK_THROWS_AS(read_subspace<Rat>(early, 0), ParseError);
}

TEST_CASE("cli evaluates albert expressions") {
    std::string one;
    for (int i = 0; i < kAlbertDim; ++i) one += (i < 3 ? "1 " : "0 ");
    auto r = run_cli("eval norm " + tmp_file("one27", one));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n");

    // sharp of e1 + e2 is e0
    std::string e12 = "0 1 1";
    for (int i = 3; i < kAlbertDim; ++i) e12 += " 0";
    r = run_cli("eval sharp " + tmp_file("e12", e12));
    CHECK(r.exit_code == 0);
    std::string e0 = "1 0 0";
    for (int i = 3; i < kAlbertDim; ++i) e0 += " 0";
    CHECK(r.output == e0 + "\n");

    r = run_cli("eval trace " + tmp_file("one27", one));
    CHECK(r.output == "3\n");
}

TEST_CASE("cli evaluates brown expressions") {
    std::string diag11 = "1";
    for (int i = 1; i < kBrownDim - 1; ++i) diag11 += " 0";
    diag11 += " 1";
    std::string f = tmp_file("diag11", diag11);
    auto r = run_cli("eval q " + f + " " + f + " " + f + " " + f);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "12\n");
    r = run_cli("eval nu " + f);
    CHECK(r.output == "1\n");
}

TEST_CASE("cli ideal check and closure") {
    // build the 12-dimensional ideal file
    BrownCtx<Rat> ctx{AlbertCtx<Rat>{}};
    auto ideals = canonical_ideals(ctx);
    std::ostringstream out;
    write_subspace<Rat>(out, ideals.back().space);
    auto r = run_cli("ideal check " + tmp_file("nsing", out.str()));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "inner=true singular=false dim=12\n");

    std::ostringstream s4;
    write_subspace<Rat>(s4, ideals[3].space);
    r = run_cli("ideal check " + tmp_file("sing4", s4.str()));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "inner=true singular=true dim=4\n");

    // a generic 2-dim subspace is rejected with a witness
    RandomSource rng(103);
    FtsAlgebra alg = FtsAlgebra::from_split(ctx);
    RatSubspace rnd = RatSubspace::span(
        kBrownDim, {alg.random_element(rng, true), alg.random_element(rng, true)});
    std::ostringstream r2;
    write_subspace<Rat>(r2, rnd);
    r = run_cli("ideal check " + tmp_file("rnd2", r2.str()));
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("inner=false") != std::string::npos);
    CHECK(r.output.find("witness:") != std::string::npos);

    // closure of the singular corner prints its line
    std::string corner = "1";
    for (int i = 1; i < kBrownDim; ++i) corner += " 0";
    r = run_cli("ideal closure " + tmp_file("corner", corner));
    CHECK(r.exit_code == 0);
    CHECK(r.output.substr(0, 5) == "56 1\n");
}

TEST_CASE("cli classifies spaces and answers incidence") {
    AlbertCtx<Rat> J;
    auto v = e6_canonical(J);
    std::ostringstream v4, v5;
    write_subspace<Rat>(v4, v[3]);
    write_subspace<Rat>(v5, v[4]);
    std::string f4 = tmp_file("v4", v4.str()), f5 = tmp_file("v5", v5.str());
    auto r = run_cli("classify-space --geometry e6 " + f4);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "e6-space index=4 dim=5\n");
    r = run_cli("incidence --geometry e6 " + f4 + " " + f5);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "incident=true types=4,5\n");
    r = run_cli("incidence --geometry e6 --strict-paper-incidence " + f4 + " " + f5);
    CHECK(r.exit_code == 1);
    CHECK(r.output == "incident=false types=4,5\n");
}

TEST_CASE("cli dual command") {
    std::string e0 = "1 0 0";
    for (int i = 3; i < kAlbertDim; ++i) e0 += " 0";
    std::string sub = "27 1\n" + e0 + "\n";
    auto r = run_cli("dual " + tmp_file("line", sub));
    CHECK(r.exit_code == 0);
    CHECK(r.output.substr(0, 6) == "27 10\n");
}

TEST_CASE("cli brown expressions over the descent algebra") {
    // s0 = sqrt(d) diag(1, -1); its square is 2 * identity for d = 2
    std::string s0 = "w";
    for (int i = 1; i < kBrownDim - 1; ++i) s0 += " 0";
    s0 += " -w";
    std::string f = tmp_file("s0q", s0);
    auto r = run_cli("eval brownmul --quad-d 2 " + f + " " + f);
    CHECK(r.exit_code == 0);
    std::string two_one = "2";
    for (int i = 1; i < kBrownDim - 1; ++i) two_one += " 0";
    two_one += " 2";
    CHECK(r.output == two_one + "\n");
    // b(s0, x) for a non-descent file must be rejected as unusable input
    std::string stray = "w";
    for (int i = 1; i < kBrownDim; ++i) stray += " 0";
    r = run_cli("eval b --quad-d 2 " + f + " " + tmp_file("strayq", stray));
    CHECK(r.exit_code == 2);
    // b(s0, 1): psi(s0, 1) = 2 s0, so b = 2 mu = 4 when d = 2
    std::string onef = "1";
    for (int i = 1; i < kBrownDim - 1; ++i) onef += " 0";
    onef += " 1";
    r = run_cli("eval b --quad-d 2 " + f + " " + tmp_file("oneq", onef));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "4\n");
    // descent-coordinate closure of the skew generator grows to everything
    std::string s0_descent = "0 1";
    for (int i = 2; i < kBrownDim; ++i) s0_descent += " 0";
    r = run_cli("ideal closure --quad-d 2 " + tmp_file("s0d", s0_descent));
    CHECK(r.exit_code == 0);
    CHECK(r.output.substr(0, 6) == "56 56\n");
}

TEST_CASE("cli t evaluation") {
    std::string onef = "1";
    for (int i = 1; i < kBrownDim - 1; ++i) onef += " 0";
    onef += " 1";
    std::string f = tmp_file("one56", onef);
    auto r = run_cli("eval t " + f + " " + f + " " + f);
    CHECK(r.exit_code == 0);
    // t(1,1,1) = -6 s0 = (-6, 0, ..., 0, 6)
    std::string expect = "-6";
    for (int i = 1; i < kBrownDim - 1; ++i) expect += " 0";
    expect += " 6";
    CHECK(r.output == expect + "\n");
}

TEST_CASE("cli e7 incidence") {
    AlbertCtx<Rat> J;
    auto w = e7_canonical(J);
    std::ostringstream w6, w7;
    write_subspace<Rat>(w6, w[5]);
    write_subspace<Rat>(w7, w[6]);
    auto r = run_cli("incidence --geometry e7 " + tmp_file("w6", w6.str()) + " " +
                     tmp_file("w7", w7.str()));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "incident=true types=6,7\n");
}

TEST_CASE("cli bracket and cross output") {
    std::string e0 = "1 0 0";
    for (int i = 3; i < kAlbertDim; ++i) e0 += " 0";
    std::string e1 = "0 1 0";
    for (int i = 3; i < kAlbertDim; ++i) e1 += " 0";
    std::string f0 = tmp_file("e0a", e0), f1 = tmp_file("e1a", e1);
    auto r = run_cli("eval cross " + f0 + " " + f1);
    CHECK(r.exit_code == 0);
    std::string e2 = "0 0 1";
    for (int i = 3; i < kAlbertDim; ++i) e2 += " 0";
    CHECK(r.output == e2 + "\n");
    r = run_cli("eval bracket " + f0 + " " + f1);
    CHECK(r.exit_code == 0);
    int lines = 0;
    for (char c : r.output)
        if (c == '\n') ++lines;
    CHECK(lines == kAlbertDim);
}

TEST_CASE("cli ideal classify") {
    BrownCtx<Rat> ctx{AlbertCtx<Rat>{}};
    auto ideals = canonical_ideals(ctx);
    std::ostringstream out;
    write_subspace<Rat>(out, ideals[1].space); // 2-dimensional singular ideal
    auto r = run_cli("ideal classify " + tmp_file("sing2", out.str()));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "e7-space index=2 dim=2\n");
    // the full space is not a flag space
    std::ostringstream full;
    write_subspace<Rat>(full, RatSubspace::full(kBrownDim));
    r = run_cli("ideal classify " + tmp_file("full56", full.str()));
    CHECK(r.exit_code == 1);
    CHECK(r.output == "none\n");
}

TEST_CASE("cli exit codes for bad input") {
    auto r = run_cli("eval norm " + tmp_file("short", "1 2 3"));
    CHECK(r.exit_code == 2);
    r = run_cli("eval bogus " + tmp_file("short", "1 2 3"));
    CHECK(r.exit_code == 2);
    r = run_cli("nonsense");
    CHECK(r.exit_code == 2);
    r = run_cli("verify --suite nosuch");
    CHECK(r.exit_code == 2);
}

TEST_CASE("cli verify suite smoke run") {
    auto r = run_cli("verify --suite cayley --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("not ok") == std::string::npos);
    CHECK(r.output.find("ok 1 ") != std::string::npos);
}

TEST_SUITE_END();
