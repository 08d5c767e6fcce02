#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "conductor_lab/io.hpp"
#include "doctest.h"

using namespace conductor_lab;
using io::Json;

TEST_SUITE("io") {
  TEST_CASE("doubles keep 17 significant digits") {
    CHECK(io::format_double(0.1) == "0.10000000000000001");
    CHECK(io::format_double(2.0) == "2");
    CHECK(io::format_double(std::numeric_limits<double>::infinity()) == "null");
    CHECK(io::format_double(std::nan("")) == "null");
    Json j;
    j["x"] = 1.0 / 3.0;
    j["v"] = Json::array({1.5, std::numeric_limits<double>::quiet_NaN()});
    CHECK(io::dump(j) == "{\"x\":0.33333333333333331,\"v\":[1.5,null]}");
    CHECK(std::stod(io::format_double(M_PI)) == M_PI);
  }

  TEST_CASE("float function round trip") {
    const FloatFunction f(Level{3, 1, 0}, {0.0, Complex(1.0 / 3.0, -2.0), Complex(1e-300, 5.0)});
    const auto back = io::function_from_json(Json::parse(io::dump(io::function_to_json(f))));
    const auto& g = std::get<FloatFunction>(back);
    CHECK(g.level() == f.level());
    CHECK(max_abs_diff(f, g) == 0.0);
  }

  TEST_CASE("exact function round trip") {
    const ExactFunction f = make_theta(5, -1) * ExactScalar::log_p(5, Rational(-2, 7));
    const auto back = io::function_from_json(io::function_to_json(f));
    CHECK(same_function(std::get<ExactFunction>(back), f));
  }

  TEST_CASE("image fields") {
    const ExactHImage h = apply_H(make_theta(3, 0));
    const Json j = io::image_to_json(h);
    CHECK(j["kappa"] == "0,0,-1,0");
    CHECK(j["kappa_symbolic"] == "0+0*sqrt(p)+(-1+0*sqrt(p))*log(p)");
    CHECK(j["cut_exponent"] == 0);
    CHECK(j["values"][0] == "0,0,-1,0");
  }

  TEST_CASE("malformed function documents") {
    auto bad = [](const char* text) { return io::function_from_json(Json::parse(text)); };
    CHECK_THROWS_AS(bad(R"({"p":3,"a":0,"b":1,"mode":"float","values":[[0,0],[1,0]]})"), io::FormatError);
    CHECK_THROWS_AS(bad(R"({"p":4,"a":0,"b":1,"mode":"float","values":[]})"), io::FormatError);
    CHECK_THROWS_AS(bad(R"({"p":3,"a":0,"b":1,"mode":"fuzzy","values":[]})"), io::FormatError);
    CHECK_THROWS_AS(bad(R"({"p":3,"a":0,"mode":"float","values":[]})"), io::FormatError);
    CHECK_THROWS_AS(bad(R"({"p":3,"a":0,"b":1,"mode":"exact","values":["0,0,0,0","1,0,0","0,0,0,0"]})"),
                    io::FormatError);
    CHECK_THROWS_AS(bad(R"({"p":3,"a":0,"b":1,"mode":"float","values":[[0,0],"x",[0,0]]})"), io::FormatError);
    CHECK_THROWS_AS(bad(R"({"p":2,"a":30,"b":30,"mode":"float","values":[]})"), io::FormatError);
    CHECK_THROWS_AS(io::read_function_file("/nonexistent/file.json"), io::FormatError);
  }

  TEST_CASE("profiles") {
    const FiniteProfile g = io::finite_profile_from_json(Json::parse(R"({"p":5,"g":{"-1":[1,0],"2":0.5}})"));
    CHECK(g.g.size() == 2);
    CHECK(g.at_exponent(2) == Complex(0.5));
    CHECK_THROWS_AS(io::finite_profile_from_json(Json::parse(R"({"p":5,"g":{"x":1}})")), io::FormatError);
    const ArchimedeanProfile a =
        io::archimedean_profile_from_json(Json::parse(R"({"v0":-1,"h":0.5,"samples":[0,1,2,1,0]})"));
    CHECK(a.samples.size() == 5);
    CHECK_THROWS_AS(io::archimedean_profile_from_json(Json::parse(R"({"v0":-1,"h":0,"samples":[0,1,2,1]})")),
                    io::FormatError);
  }

  TEST_CASE("reports") {
    VerificationReport r{"demo", 7, {{"a.b", "x, y", 1e-13, 1e-12, false, true}, {"c", "z", 0.0, 0.0, true, true}}, 1.5};
    const std::string json = io::dump(io::report_to_json(r, false));
    CHECK(json.find("wall_seconds") == std::string::npos);
    CHECK(json.find("\"overall_pass\":true") != std::string::npos);
    CHECK(io::dump(io::report_to_json(r, true)).find("\"wall_seconds\":1.5") != std::string::npos);
    const std::string csv = io::report_to_csv(r, false);
    CHECK(csv.find("a.b,\"x, y\",1e-13,9.9999999999999998e-13,false,true") != std::string::npos);
    CHECK(io::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  }
}
