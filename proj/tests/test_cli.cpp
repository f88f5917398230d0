#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "casson/cli.hpp"

using casson::cli::run;

namespace {

struct RunResult {
    int status;
    std::string out;
    std::string err;
};

RunResult invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = run(std::move(args), out, err);
    return {status, out.str(), err.str()};
}

class TempFile {
public:
    TempFile(const std::string& name, const std::string& content)
        : path_(std::filesystem::temp_directory_path() / ("casson_test_" + name)) {
        std::ofstream f(path_);
        f << content;
    }
    ~TempFile() { std::error_code ec; std::filesystem::remove(path_, ec); }

    std::string str() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

}  // namespace

TEST_CASE("table --n 6 --json reports lambda -6 in row 1", "[cli]") {
    const RunResult r = invoke({"table", "--n", "6", "--json"});
    REQUIRE(r.status == 0);
    CHECK(r.out.find("\"lambda\": -6") != std::string::npos);
    CHECK(r.out.find("\"schema\": 1") != std::string::npos);
    CHECK(r.out.find("\"verdict\": \"Bounds\"") != std::string::npos);
}

TEST_CASE("table text mode is aligned and complete", "[cli]") {
    const RunResult r = invoke({"table", "--range", "0..1"});
    REQUIRE(r.status == 0);
    CHECK(r.out.find("M_n(K1, K2)") != std::string::npos);
    // header + 5 rows per n, two values of n
    int lines = 0;
    for (char c : r.out) lines += (c == '\n');
    CHECK(lines == 11);
}

TEST_CASE("empty ranges produce empty results", "[cli]") {
    const RunResult r = invoke({"table", "--range=5..3", "--json"});
    REQUIRE(r.status == 0);
    CHECK(r.out.find("\"results\": []") != std::string::npos);
}

TEST_CASE("verdict text output", "[cli]") {
    const RunResult r =
        invoke({"verdict", "--k1", "trefoil-r", "--k2", "trefoil-r", "--n", "7"});
    REQUIRE(r.status == 0);
    CHECK(r.out == "DoesNotBound (corG)\n");

    const RunResult unknown =
        invoke({"verdict", "--k1", "fig8", "--k2", "fig8", "--n", "2"});
    CHECK(unknown.out == "Unknown\n");
}

TEST_CASE("verdict surfaces domain errors verbatim with exit 1", "[cli]") {
    const RunResult r =
        invoke({"verdict", "--k1", "trefoil-l", "--k2", "trefoil-l", "--n", "3"});
    CHECK(r.status == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("CombinationNotCovered") != std::string::npos);
}

TEST_CASE("invariant subcommand", "[cli]") {
    const RunResult r = invoke({"invariant", "--knot", "double(trefoil-r, 5, +)"});
    REQUIRE(r.status == 0);
    CHECK(r.out.find("lambda': -5") != std::string::npos);
    CHECK(r.out.find("alexander: -5*t + 11 - 5*t^-1") != std::string::npos);

    const RunResult surgered =
        invoke({"invariant", "--knot", "double(trefoil-r, 5, -)", "--surgery", "-1", "--json"});
    REQUIRE(surgered.status == 0);
    CHECK(surgered.out.find("\"lambda\": -5") != std::string::npos);
    CHECK(surgered.out.find("\"surgery\": \"-1\"") != std::string::npos);
}

TEST_CASE("appendix subcommand", "[cli]") {
    const RunResult r = invoke({"appendix", "--n", "3", "--json"});
    REQUIRE(r.status == 0);
    CHECK(r.out.find("\"indexB\": 8") != std::string::npos);
    CHECK(r.out.find("\"indexA\": 0") != std::string::npos);
    CHECK(r.out.find("\"mu\": 1") != std::string::npos);

    const RunResult text = invoke({"appendix", "--range=-1..1"});
    REQUIRE(text.status == 0);
    CHECK(text.out.find("mu_via_casson") != std::string::npos);
}

TEST_CASE("lk subcommand", "[cli]") {
    const TempFile pd("hopf.pd", "# positive Hopf link\nX[1,3,2,4] X[3,1,4,2]\n");
    const RunResult r = invoke({"lk", "--pd", pd.str(), "--components", "1,2"});
    REQUIRE(r.status == 0);
    CHECK(r.out == "1\n");

    const RunResult bad = invoke({"lk", "--pd", pd.str(), "--components", "1,9"});
    CHECK(bad.status == 1);
    CHECK(bad.err.find("UnknownComponent") != std::string::npos);
}

TEST_CASE("kirby subcommand", "[cli]") {
    const TempFile start("w0.mat", "2\n0 1\n1 0\n");
    const TempFile moves("moves.txt", "blowup +1\nslide 1 3 +1\nslide 1 3 -1\nblowdown 3\n");
    const RunResult r = invoke({"kirby", "--file", moves.str(), "--start", start.str()});
    REQUIRE(r.status == 0);
    CHECK(r.out.find("components: 2") != std::string::npos);
    CHECK(r.out.find("homology sphere: true") != std::string::npos);
    CHECK(r.out.find("0 1\n1 0") != std::string::npos);

    const TempFile bad("badmoves.txt", "blowdown 1\n");
    const RunResult err = invoke({"kirby", "--file", bad.str(), "--start", start.str()});
    CHECK(err.status == 1);
    CHECK(err.err.find("FramingNotUnit") != std::string::npos);
}

TEST_CASE("classify subcommand", "[cli]") {
    const TempFile diag("diag.mat", "2\n1 0\n0 1\n");
    const RunResult r = invoke({"classify", "--matrix", diag.str()});
    REQUIRE(r.status == 0);
    CHECK(r.out.find("class: DefiniteDiagonal(+,2)") != std::string::npos);
    CHECK(r.out.find("index: 2") != std::string::npos);

    const TempFile h("h.mat", "2\n0 1\n1 0\n");
    const RunResult rh = invoke({"classify", "--matrix", h.str(), "--json"});
    REQUIRE(rh.status == 0);
    CHECK(rh.out.find("\"class\": \"EvenIndefinite(1H,0E8)\"") != std::string::npos);
    CHECK(rh.out.find("\"rohlin_mu\": 0") != std::string::npos);

    const TempFile deg("deg.mat", "1\n0\n");
    const RunResult rd = invoke({"classify", "--matrix", deg.str()});
    CHECK(rd.status == 1);
    CHECK(rd.err.find("Degenerate") != std::string::npos);
}

TEST_CASE("identical invocations are byte-identical", "[cli]") {
    const RunResult a = invoke({"table", "--range=-2..2", "--json"});
    const RunResult b = invoke({"table", "--range=-2..2", "--json"});
    CHECK(a.status == 0);
    CHECK(a.out == b.out);

    const RunResult c = invoke({"appendix", "--range=1..2"});
    const RunResult d = invoke({"appendix", "--range=1..2"});
    CHECK(c.out == d.out);
}

TEST_CASE("usage errors exit with status 2", "[cli]") {
    CHECK(invoke({}).status == 2);
    CHECK(invoke({"frobnicate"}).status == 2);
    CHECK(invoke({"table"}).status == 2);                       // neither --n nor --range
    CHECK(invoke({"table", "--n", "1", "--range", "0..1"}).status == 2);
    CHECK(invoke({"table", "--range", "zzz"}).status == 2);
    CHECK(invoke({"verdict", "--k1", "unknot"}).status == 2);   // missing required flags
    CHECK(invoke({"invariant", "--knot", "unknot", "--surgery", "3"}).status == 2);
    CHECK(invoke({"lk", "--pd", "x", "--components", "1;2"}).status == 2);
}

TEST_CASE("help exits cleanly", "[cli]") {
    const RunResult r = invoke({"--help"});
    CHECK(r.status == 0);
    CHECK(r.out.find("invariant") != std::string::npos);
    CHECK(r.out.find("classify") != std::string::npos);
}

TEST_CASE("missing files are domain errors", "[cli]") {
    const RunResult r = invoke({"lk", "--pd", "/nonexistent/x.pd", "--components", "1,2"});
    CHECK(r.status == 1);
    CHECK(r.err.find("FileNotReadable") != std::string::npos);
}
