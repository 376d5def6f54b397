#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cdalg/io.hpp"
#include "cli.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cd::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string("@") + CDALG_FIXTURE_DIR + "/" + name; }

}  // namespace

TEST_CASE("table") {
    auto r = cli({"table", "--level", "1", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "e0,e1\ne1,-e0\n");
    r = cli({"table", "--level", "2"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["table"][1][2] == "e3");
    CHECK(j["table"][2][1] == "-e3");
    CHECK(cli({"table", "--level", "7"}).code == 1);
    CHECK(cli({"table", "--level", "9"}).code == 1);
    CHECK(cli({"--level", "2", "table"}).code == 0);
}

TEST_CASE("eval") {
    auto r = cli({"eval", "--op", "mul", "--x", R"({"level":2,"coeffs":[0,1,0,0]})", "--y",
                  R"({"level":2,"coeffs":[0,0,1,0]})"});
    CHECK(r.code == 0);
    CHECK(cd::io::parse_element(r.out) == cd::Element::basis(2, 3));
    r = cli({"eval", "--op", "norm", "--x", R"({"level":1,"coeffs":[3,4]})"});
    CHECK(json::parse(r.out)["value"] == 5.0);
    r = cli({"eval", "--op", "inv", "--x", R"({"level":1,"coeffs":[0,0]})"});
    CHECK(r.code == 3);
    CHECK(r.err.find("ZeroElement") != std::string::npos);
    r = cli({"eval", "--op", "pow", "--k", "3", "--x", R"({"level":2,"coeffs":[0,1,0,0]})", "--format", "csv"});
    CHECK(r.out == "0,-1,0,0\n");
    r = cli({"eval", "--op", "mul", "--x", R"({"level":2,"coeffs":[0,1,0,0]})", "--y", R"({"level":1,"coeffs":[0,1]})"});
    CHECK(r.code == 1);
    r = cli({"eval", "--op", "cdep", "--x", R"({"level":2,"coeffs":[0,1,0,0]})", "--y", R"({"level":2,"coeffs":[0,0,1,0]})"});
    CHECK(json::parse(r.out)["dependent"] == false);
    r = cli({"eval", "--op", "centralizer", "--x", R"({"level":4,"coeffs":[0,1,0,0,0,0,0,0,0,0,1,0,0,0,0,0]})",
             "--format", "csv", "--tol.rank", "1e-9"});
    CHECK(r.out == "5,4\n");
    CHECK(cli({"eval", "--op", "centralizer", "--x", R"({"level":2,"coeffs":[1,0,0,0]})"}).code == 3);
    CHECK(cli({"eval", "--op", "frobnicate", "--x", R"({"level":0,"coeffs":[1]})"}).code == 1);
    r = cli({"eval", "--op", "poly", "--poly", fixture("poly_unit_sphere.json"), "--x",
             R"({"level":3,"coeffs":[0,0,0,1,0,0,0,0]})"});
    CHECK(r.code == 0);
    CHECK(cd::norm(cd::io::parse_element(r.out)) <= 1e-15);
    r = cli({"eval", "--op", "poly", "--poly", fixture("poly_unit_sphere.json"), "--x", fixture("elem_octonion.json")});
    CHECK(r.code == 3);
}

TEST_CASE("exp, log, root") {
    auto r = cli({"exp", "--level", "3", "--elem", R"({"level":3,"coeffs":[0,1.5708,0,0,0,0,0,0]})"});
    REQUIRE(r.code == 0);
    const cd::Element e = cd::io::parse_element(r.out);
    CHECK(std::abs(e[1] - 1.0) <= 1e-4);
    CHECK(std::abs(e[0]) <= 1e-4);
    CHECK(cli({"exp", "--level", "2", "--elem", fixture("elem_octonion.json")}).code == 1);
    CHECK(cli({"exp", "--elem", fixture("elem_malformed.json")}).code == 1);
    CHECK(cli({"exp", "--elem", fixture("elem_wrong_length.json")}).code == 1);
    CHECK(cli({"exp", "--elem", R"({"level":0,"coeffs":[1000]})"}).code == 3);

    CHECK(cli({"log", "--elem", R"({"level":2,"coeffs":[-1,0,0,0]})"}).code == 3);
    r = cli({"log", "--elem", R"({"level":2,"coeffs":[-1,0,0,0]})", "--dir", "e2"});
    CHECK(r.code == 0);
    CHECK(std::abs(cd::io::parse_element(r.out)[2] - 3.141592653589793) <= 1e-15);

    r = cli({"root", "--elem", R"({"level":2,"coeffs":[-1,0,0,0]})", "--k", "2", "--fallback", "e1"});
    CHECK(cd::norm(cd::io::parse_element(r.out) - cd::Element::basis(2, 1)) <= 1e-15);
    r = cli({"root", "--elem", R"({"level":2,"coeffs":[0,2,0,0]})", "--k", "2", "--literal"});
    CHECK(r.code == 0);
    r = cli({"root", "--poly", fixture("poly_cube_root_e1.json")});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["roots"].size() == 3);
    CHECK(cli({"root", "--poly", fixture("poly_bad_direction.json")}).code == 3);
    CHECK(cli({"root", "--poly", fixture("poly_degree_mismatch.json")}).code == 1);
    CHECK(cli({"root", "--k", "2"}).code == 1);
}

TEST_CASE("zerodiv") {
    auto r = cli({"zerodiv", "--level", "4"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["found"] == true);
    CHECK(j["product_norm"].get<double>() <= 1e-12);
    r = cli({"zerodiv", "--level", "3"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["found"] == false);
}

TEST_CASE("props") {
    auto r = cli({"props", "--level", "3", "--trials", "50", "--seed", "5"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["profile"].size() == 6);
    r = cli({"props", "--level", "2", "--trials", "0"});
    CHECK(r.code == 1);
    r = cli({"props", "--level", "4", "--trials", "20", "--format", "plain"});
    CHECK(r.code == 0);
    CHECK(r.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("winding") {
    auto r = cli({"winding", "--level", "2", "--k", "-2", "--dir", "e1", "--samples", "1024"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["winding"] == -2);
    r = cli({"winding", "--level", "3", "--k", "3", "--dir", R"({"level":3,"coeffs":[0,1,1,0,0,0,0,1]})", "--format", "plain"});
    CHECK(r.out == "3\n");
    CHECK(cli({"winding", "--level", "2", "--k", "0"}).code == 1);
    CHECK(cli({"winding", "--level", "2", "--k", "1", "--dir", "e0"}).code == 3);
    CHECK(cli({"winding", "--level", "2", "--k", "1", "--dir", "e9"}).code == 1);
}

TEST_CASE("rootsearch") {
    auto r = cli({"rootsearch", "--fixture", fixture("gen_inverse_k2.json")});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["residual"].get<double>() <= 1e-8);
    r = cli({"rootsearch", "--poly", fixture("poly_unit_sphere.json")});
    CHECK(r.code == 0);
    CHECK(cli({"rootsearch", "--fixture", fixture("gen_two_terms_l3.json")}).code == 0);
    CHECK(cli({"rootsearch", "--fixture", fixture("gen_constant.json")}).code == 1);
    CHECK(cli({"rootsearch", "--fixture", fixture("gen_empty.json")}).code == 1);
    r = cli({"rootsearch", "--level", "3", "--probe-commutator", "e1"});
    CHECK(r.code == 2);
    CHECK(json::parse(r.out)["best_residual"].get<double>() >= 1.0 - 1e-9);
    CHECK(cli({"rootsearch"}).code == 1);
}

TEST_CASE("determinism and usage") {
    const std::vector<std::string> args{"props", "--level", "5", "--trials", "30", "--seed", "99"};
    CHECK(cli(args).out == cli(args).out);
    const std::vector<std::string> rs{"rootsearch", "--fixture", fixture("gen_two_terms_l3.json"), "--seed", "3"};
    CHECK(cli(rs).out == cli(rs).out);
    CHECK(cli({}).code == 1);
    CHECK(cli({"bogus"}).code == 1);
    CHECK(cli({"--format", "xml", "table"}).code == 1);
    auto h = cli({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("rootsearch") != std::string::npos);
    CHECK(cli({"table", "--tol.rank", "1e-9", "--level", "1"}).code == 0);
}
