#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "qqo/catalog.hpp"
#include "qqo/error.hpp"
#include "qqo/io.hpp"
#include "support.hpp"

using namespace qqo;

namespace {

std::string parse_error_message(const std::string& text) {
  try {
    parse_operator_config(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    return e.what();
  }
  FAIL("expected ParseError");
  return {};
}

bool same(const DeltaCoefficients& x, const DeltaCoefficients& y) {
  bool eq = x.b == y.b && x.B1 == y.B1 && x.B2 == y.B2;
  for (int i = 0; i < 3; ++i) eq = eq && x.slices[i] == y.slices[i];
  return eq;
}

}  // namespace

TEST_CASE("empty object is the zero operator") {
  CHECK(same(parse_operator_config("{}"), DeltaCoefficients{}));
}

TEST_CASE("T is indexed [m][l][i]") {
  const DeltaCoefficients d = parse_operator_config(
      R"({"T": [[[0,0,0],[1,0,0],[0,0,0]],
               [[0,0,0],[0,0,0],[0,0,0]],
               [[0,0,0],[0,0,0],[0,0,-2.5]]]})");
  CHECK(d.T(0, 1, 0) == 1.0);
  CHECK(d.T(2, 2, 2) == -2.5);
  const DeltaCoefficients b = parse_operator_config(R"({"B1": [[1,2,3],[4,5,6],[7,8,9]]})");
  CHECK(b.B1(0, 2) == 3.0);
  CHECK(b.B1(2, 0) == 7.0);
}

TEST_CASE("round trip is exact") {
  for (int n = 0; n < 50; ++n) {
    const DeltaCoefficients d = test::random_delta(n % 2 == 0);
    CHECK(same(parse_operator_config(operator_config_json(d).dump()), d));
  }
  for (const auto& e : catalog_entries()) CHECK(same(parse_operator_config(operator_config_json(e.delta).dump(2)), e.delta));
}

TEST_CASE("diagnostics") {
  CHECK(parse_error_message("{\n  \"b\": [1, 2,\n}").find("line 3") != std::string::npos);
  CHECK(parse_error_message("[1,2,3]").find("object") != std::string::npos);
  CHECK(parse_error_message(R"({"b": [1, 2]})").find("field b") != std::string::npos);
  CHECK(parse_error_message(R"({"b": [1, "x", 3]})").find("b[1]") != std::string::npos);
  CHECK(parse_error_message(R"({"B2": [[1,2,3],[4,5],[7,8,9]]})").find("B2[1]") !=
        std::string::npos);
  CHECK(parse_error_message(R"({"T": [[[0,0,0],[0,0,0],[0,0,0]],[[0,0,0],[0,0,0],[0,0,0]]]})")
            .find("field T") != std::string::npos);
  CHECK(parse_error_message(
            R"({"T": [[[0,0,0],[0,0,0],[0,0,0]],[[0,0,0],[0,0,0,0],[0,0,0]],[[0,0,0],[0,0,0],[0,0,0]]]})")
            .find("T[1][1]") != std::string::npos);
  CHECK(parse_error_message(R"({"b": [1e400, 0, 0]})").find("not finite") != std::string::npos);
  CHECK(parse_error_message(R"({"b": [NaN, 0, 0]})").find("line 1") != std::string::npos);
  CHECK(parse_error_message(R"({"c": [0, 0, 0]})").find("unknown field") != std::string::npos);
}

TEST_CASE("load from file") {
  const auto path = std::filesystem::temp_directory_path() / "qqo_test_io_delta0.json";
  {
    std::ofstream out(path);
    out << operator_config_json(delta0()).dump(2);
  }
  CHECK(same(load_operator_config(path.string()), delta0()));
  std::filesystem::remove(path);
  try {
    load_operator_config(path.string());
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}

TEST_CASE("quadratic map JSON") {
  const QuadraticMapCoeffs v = induced_qmap(delta0());
  const QuadraticMapCoeffs back = parse_qmap_json(qmap_json(v).dump());
  CHECK(back.a == v.a);
  CHECK(back.Gamma == v.Gamma);
  CHECK(parse_qmap_json(R"({"Gamma": [0,0,2]})").Gamma == Vector3(0, 0, 2));
  CHECK_THROWS_AS(parse_qmap_json(R"({"h": [0,0,2]})"), Error);
}

TEST_CASE("report JSON") {
  CertificateReport r;
  r.verdict = false;
  r.residuals = {{"i.1", 0.5}, {"i.2", INFINITY}};
  r.worst_condition = "i.2";
  const Json j = certificate_json(r);
  CHECK(j["residuals"]["i.1"] == 0.5);
  CHECK(std::isfinite(j["residuals"]["i.2"].get<double>()));
  CHECK(std::isfinite(j["worst_residual"].get<double>()));
  CHECK(j["worst_condition"] == "i.2");

  PositivityVerdict p;
  CHECK_FALSE(positivity_json(p).contains("witness"));
  p.verdict = false;
  p.witness = NegativityWitness{Vector3(0, 1, 0), -2.0};
  CHECK(positivity_json(p)["witness"]["min_eigenvalue"] == -2.0);

  SphereOracleResult s;
  s.max_deviation = INFINITY;
  CHECK(std::isfinite(sphere_oracle_json(s)["max_deviation"].get<double>()));
}
