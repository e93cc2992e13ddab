#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "steklov/json_io.hpp"

using namespace steklov;
using namespace steklov::io;

namespace {

struct Result {
    int code = -1;
    std::string out;
};

Result run(const std::string& args) {
    const std::string cmd = std::string("'") + STEKLOV_CLI_PATH + "' " + args + " 2>/dev/null";
    Result r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Runs, expects exit 0, and checks that the output re-parses to itself.
json run_json(const std::string& args) {
    auto r = run(args);
    INFO(args);
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(json::parse(j.dump()) == j);
    return j;
}

std::string write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("steklov_cli_" + name);
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST_CASE("spectrum") {
    auto j = run_json(R"(spectrum --boundary '{"type_one":["2"],"type_two":[]}' --n 5)");
    auto view = view_from_json(j["view"]);
    CHECK(view.unit == SpectrumUnit::PiScaled);
    CHECK(view.values == std::vector<Rational>{0, 1, 1, 2, 2});
    CHECK(to_json(view) == j["view"]);
    CHECK(to_json(spectrum_from_json(j["spectrum"])) == j["spectrum"]);
    CHECK(to_json(boundary_from_json(j["boundary"])) == j["boundary"]);

    auto f = run_json(R"(spectrum --float --boundary '{"type_one":["2"],"type_two":[]}' --n 3)");
    REQUIRE(f["view"].contains("approx"));
    CHECK(f["view"]["approx"][1].get<double>() == doctest::Approx(3.141592653589793));

    auto path = write_temp("boundary.json", R"({"type_one":[],"type_two":["1"]})");
    auto h = run_json("spectrum --n 4 --boundary " + path);
    CHECK(view_from_json(h["view"]).values == std::vector<Rational>{0, 1, 2, 3});
    auto piped = run_json("spectrum --n 4 < " + path);
    CHECK(piped == h);
}

TEST_CASE("invert") {
    auto spec = run_json(R"(spectrum --boundary '{"type_one":["2"],"type_two":["2","2"]}' --n 40)");
    auto path = write_temp("view.json", spec["view"].dump());
    auto j = run_json("invert --view " + path);
    CHECK(j["r"] == 1);
    CHECK(j["s"] == 2);
    CHECK(j["merged_lengths"] == json::parse(R"(["2","2","4","4"])"));
    REQUIRE(j["members"].size() == 2);
    for (const auto& m : j["members"]) CHECK(to_json(boundary_from_json(m)) == m);

    CHECK(run(R"(invert --view '{"unit":"pi","values":["0","1","1","2","3","3","4"]}')").code == 2);
    CHECK(run(R"(invert --view '{"unit":"pi","values":["1","2"]}')").code == 3);
    CHECK(run(R"(invert --view '{"unit":"abs","values":["0","1","1"]}')").code == 4);

    auto approx = run_json("invert --tolerance 1e-6 --view '[0, 0.9999999, 1.0000001, 2.0000001, 1.9999999, 3]'");
    CHECK(approx["heuristic"] == true);
    CHECK(approx["zeros"] == 1);
}

TEST_CASE("equivalent") {
    auto j = run_json(R"(equivalent --first '{"type_one":["2"],"type_two":["2","2"]}' )"
                      R"(--second '{"type_one":["4"],"type_two":["1","1"]}')");
    CHECK(j["equivalent"] == true);
    CHECK(j["spectra_equal"] == true);
    auto k = run_json(R"(equivalent --first '{"type_one":["2"],"type_two":[]}' --second '{"type_one":["3"],"type_two":[]}')");
    CHECK(k["equivalent"] == false);
}

TEST_CASE("ball quotients and cones") {
    auto z2 = write_temp("z2.json", R"({"dim": 2, "generators": [[-1, 0, 0, -1]]})");
    auto j = run_json("quotient-ball --group " + z2 + " --radius 2 --max-degree 4");
    auto view = view_from_json(j);
    CHECK(view.unit == SpectrumUnit::Absolute);
    CHECK(view.values == std::vector<Rational>{0, 1, 1, 2, 2});
    CHECK(j["group_order"] == 2);

    auto refl = write_temp("refl.json", R"({"dim": 2, "generators": [[1, 0, 0, -1]]})");
    auto iso = run_json("isospectral --first " + z2 + " --second " + refl + " --max-degree 6");
    CHECK(iso["isospectral"] == false);
    CHECK(iso["first_difference"] == 1);
    auto same = run_json("isospectral --first " + z2 + " --second " + z2 + " --max-degree 6");
    CHECK(same["isospectral"] == true);
    CHECK(same["first_difference"].is_null());

    auto cone = run_json("cone --k 7 --modes 12");
    CHECK(cone["verdict"] == "IDENTICAL");
    CHECK(cone["cone"]["modes"].size() == 13);

    CHECK(run("quotient-ball --group " + z2 + " --radius pi").code == 4);
    CHECK(run(R"(quotient-ball --group '{"dim": 2, "generators": [[2, 0, 0, 1]]}')").code == 4);
}

TEST_CASE("sunada") {
    auto group = write_temp("klein.json", to_json(klein_four_group()).dump());
    auto coll = write_temp("coll.json", R"({"H": [[0,1],[0,2],[0,3]], "K": [[0],[0,1,2,3],[0,1,2,3]]})");
    auto mats = write_temp("mats.json", R"({"dim": 3, "images": [[1,0,0,0,1,0,0,0,1], [1,0,0,0,-1,0,0,0,-1],
                                                                   [-1,0,0,0,1,0,0,0,-1], [-1,0,0,0,-1,0,0,0,1]]})");
    auto j = run_json("sunada --group " + group + " --collections " + coll + " --matrix-group " + mats +
                      " --max-degree 12");
    CHECK(j["sunada"]["holds"] == true);
    CHECK(j["permutation_characters"]["equal"] == true);
    CHECK(j["ball_check"]["isospectral"] == true);
    CHECK(j["ball_check"]["max_degree"] == 12);
    CHECK(to_json(view_from_json(j["ball_check"]["union_h"])) == j["ball_check"]["union_h"]);

    auto bad = write_temp("bad.json", R"({"H": [[0,1]], "K": [[0]]})");
    auto b = run_json("sunada --group " + group + " --collections " + bad);
    CHECK(b["sunada"]["holds"] == false);
    CHECK_FALSE(b.contains("ball_check"));

    auto mismatch = write_temp("mismatch.json", R"({"H": [[0,1]], "K": [[0],[0]]})");
    CHECK(run("sunada --group " + group + " --collections " + mismatch).code == 4);
}

TEST_CASE("bounds") {
    auto lens = run_json("lens-sigma2 --q 9 --p 1,3");
    CHECK(lens["sigma2"] == 3);
    auto sharp = run_json("sharpness --m 2 --jmax 6");
    CHECK(sharp["all_hold"] == true);
    CHECK(sharp["rows"].size() == 5);
    auto chi = run_json(R"(euler --cells '{"cells":[{"dim":0,"isotropy":5},{"dim":0,"isotropy":1},)"
                        R"({"dim":1,"isotropy":1},{"dim":1,"isotropy":1},{"dim":2,"isotropy":1}]}')");
    CHECK(chi["chi"] == "1/5");
    auto reg = run_json("regime --chi=-3 --r 1 --s 0 --k 1 --A 1 --B 1");
    CHECK(reg["regime"] == "NegativeExcess");
    CHECK(reg["rhs"] == "3");
    auto zero = run_json("regime --chi 1/7 --r 1 --s 0 --k 2 --A 1 --B 5 --conformal zero");
    CHECK(zero["regime"] == "NonnegativeExcess");
    CHECK(zero["rhs"] == "10");
    CHECK(zero["conformal_invariant"] == "Zero");
    CHECK(run("lens-sigma2 --q 0 --p 1").code == 4);
}

TEST_CASE("usage errors, schemas and version") {
    CHECK(run("").code == 1);
    CHECK(run("frobnicate").code == 1);
    CHECK(run("spectrum --n zero").code == 1);
    CHECK(run("lens-sigma2 --q 5").code == 1);
    CHECK(run("--schema nothing").code == 1);
    CHECK(run("--help").code == 0);
    for (const char* sub : {"spectrum", "invert", "equivalent", "quotient-ball", "cone", "isospectral", "sunada",
                            "lens-sigma2", "sharpness", "euler", "regime", "demo"}) {
        auto j = run_json(std::string("--schema ") + sub);
        CHECK(j["subcommand"] == sub);
        CHECK(j["schema"].is_object());
    }
    CHECK(run_json("--version")["name"] == "steklov");
}

TEST_CASE("demo") {
    auto all = run_json("demo");
    CHECK(all["all_pass"] == true);
    CHECK(all["examples"].size() >= 14);

    auto ell = run_json("demo ell1ell2");
    CHECK(ell["examples"][0]["verdict"] == "EQUAL");
    auto cone = run_json("demo cone --k 7");
    CHECK(cone["examples"][0]["verdict"] == "IDENTICAL");
    CHECK(cone["examples"][0]["k"] == 7);
}
