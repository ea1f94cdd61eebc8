#include "cli/commands.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation run_cli(std::initializer_list<const char*> args)
{
    std::vector<const char*> argv{"epszeta"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    const int code = epszeta::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text)
{
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("eval text output matches the published tables", "[cli][eval]")
{
    CHECK(run_cli({"eval", "--fn", "epsilon", "--x", "0.5", "--k", "2", "--modulus", "real"}).out == "0.367975\n");
    CHECK(run_cli({"eval", "--fn", "zeta", "--x", "0.5", "--k", "2", "--modulus", "imaginary"}).out ==
          "-0.616203\n");
    CHECK(run_cli({"eval", "--fn", "zeta", "--x", "0.5", "--k", "2", "--modulus", "real"}).out ==
          "0.663361 - 0.419309i\n");
    CHECK(run_cli({"eval", "--fn", "zeta", "--x", "0.5", "--k", "2", "--branch", "upper"}).out ==
          "0.663361 + 0.419309i\n");
    CHECK(run_cli({"eval", "--fn", "epsilon", "--x", "0.5", "--k", "-2"}).out == "0.367975\n");
    CHECK(run_cli({"eval", "--fn", "zeta", "--x", "0.5", "--k", "0.5", "--complex"}).out ==
          "0.054948 + 0.000000i\n");
}

TEST_CASE("eval json and csv carry 17 significant digits", "[cli][eval]")
{
    const auto r = run_cli({"eval", "--fn", "zeta", "--x", "0.5", "--k", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("fn") == "zeta");
    CHECK(j.at("x").get<double>() == 0.5);
    CHECK(j.at("k").get<double>() == 2.0);
    CHECK(j.at("regime") == "large_real");
    const auto z = epszeta::zeta_large_real(0.5, 2.0);
    CHECK(j.at("re").get<double>() == z.real());
    CHECK(j.at("im").get<double>() == z.imag());

    const auto c = run_cli({"eval", "--fn", "epsilon", "--x", "0.5", "--k", "1", "--modulus", "imaginary",
                            "--format", "csv"});
    const auto lines = lines_of(c.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "fn,x,k,regime,re,im");
    CHECK(lines[1].rfind("epsilon,0.5,1,pure_imaginary,", 0) == 0);
    const double re = std::stod(lines[1].substr(lines[1].find("pure_imaginary,") + 15));
    CHECK(re == epszeta::epsilon_imaginary(0.5, 1.0));
}

TEST_CASE("eval exit codes", "[cli][eval][errors]")
{
    CHECK(run_cli({"eval", "--fn", "nope", "--x", "0.5", "--k", "2"}).code == 2);
    CHECK(run_cli({"eval", "--fn", "epsilon", "--x", "0.5"}).code == 2);
    CHECK(run_cli({"eval", "--fn", "epsilon", "--x", "abc", "--k", "0.5"}).code == 2);
    CHECK(run_cli({"eval", "--fn", "epsilon", "--x", "0.5", "--k", "1.0000000000000002"}).code == 3);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("tables reproduce all twelve cells", "[cli][tables]")
{
    const auto r = run_cli({"tables"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0.490203") != std::string::npos);
    CHECK(r.out.find("0.541445") != std::string::npos);
    CHECK(r.out.find("0.663361 - 0.419309i") != std::string::npos);
    CHECK(r.out.find("-0.187029") != std::string::npos);
    CHECK(r.out.find("all 12 cells agree") != std::string::npos);

    const auto tables = epszeta::cli::build_tables();
    REQUIRE(tables.size() == 4);
    for (const auto& t : tables) {
        REQUIRE(t.cells.size() == 3);
        for (const auto& c : t.cells)
            CHECK(c.abs_diff() <= epszeta::cli::table_tolerance);
    }
    // Z(x, 1) follows the E/K -> 0 convention in both columns
    CHECK(epszeta::cli::fixed6(tables[2].cells[1].present.real()) == "0.462117");
    CHECK(epszeta::cli::fixed6(tables[2].cells[1].quadrature.real()) == "0.462117");
}

TEST_CASE("elastica CSV", "[cli][elastica]")
{
    const auto r = run_cli({"elastica", "--kind", "inflexural", "--k", "2", "--omega", "1", "--u-min", "0",
                            "--u-max", "3", "--samples", "7"});
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 8);
    CHECK(lines[0] == "u,x,y");
    CHECK(lines[1] == "0,0,-4");
    CHECK(r.out.find('\r') == std::string::npos);

    CHECK(run_cli({"elastica", "--kind", "inflexural", "--k", "2", "--omega", "1", "--u-min", "0", "--u-max",
                   "0", "--samples", "2"})
              .code == 2);
    CHECK(run_cli({"elastica", "--samples", "1"}).code == 2);
    CHECK(run_cli({"elastica", "--kind", "flexural", "--k", "2"}).code == 3);
    CHECK(run_cli({"elastica", "--kind", "inflexural", "--k", "0.5"}).code == 3);
    CHECK(run_cli({"elastica", "--kind", "spiral"}).code == 2);
}

TEST_CASE("elastica writes to --out", "[cli][elastica]")
{
    const auto path = std::filesystem::temp_directory_path() / "epszeta_test_curve.csv";
    std::filesystem::remove(path);
    const std::string p = path.string();
    const auto r = run_cli({"elastica", "--kind", "flexural", "--k", "0.5", "--samples", "11", "--out", p.c_str()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    const auto lines = lines_of(content.str());
    CHECK(lines.size() == 12);
    CHECK(lines[0] == "u,x,y");
    std::filesystem::remove(path);
}

TEST_CASE("check command", "[cli][check]")
{
    const auto a = run_cli({"check", "--trials", "20", "--tol", "1e-9", "--seed", "7"});
    CHECK(a.code == 0);
    CHECK(a.out.find("PASS") != std::string::npos);
    const auto b = run_cli({"check", "--trials", "20", "--tol", "1e-9", "--seed", "7"});
    CHECK(a.out == b.out);
    const auto c = run_cli({"check", "--trials", "20", "--tol", "1e-9", "--seed", "8"});
    CHECK(c.out != a.out);

    CHECK(run_cli({"check", "--trials", "0", "--tol", "1e-9", "--seed", "7"}).code == 2);
    CHECK(run_cli({"check", "--trials", "5", "--tol", "0", "--seed", "7"}).code == 2);
    // a tolerance below rounding noise must fail with exit 4
    CHECK(run_cli({"check", "--trials", "5", "--tol", "1e-300", "--seed", "7"}).code == 4);
}
