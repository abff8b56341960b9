#include "qqo/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "qqo/error.hpp"

namespace qqo {

namespace {

using RawJson = nlohmann::json;

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ParseError, "field " + field + ": " + what);
}

double read_number(const RawJson& node, const std::string& field) {
  if (!node.is_number()) field_error(field, "expected a number");
  const double x = node.get<double>();
  if (!std::isfinite(x)) field_error(field, "number is not finite");
  return x;
}

void expect_array(const RawJson& node, std::size_t size, const std::string& field) {
  if (!node.is_array() || node.size() != size) {
    field_error(field, "expected an array of length " + std::to_string(size));
  }
}

Vector3 read_vector(const RawJson& node, const std::string& field) {
  expect_array(node, 3, field);
  Vector3 v;
  for (int k = 0; k < 3; ++k) v(k) = read_number(node[k], field + "[" + std::to_string(k) + "]");
  return v;
}

Matrix3 read_matrix(const RawJson& node, const std::string& field) {
  expect_array(node, 3, field);
  Matrix3 m;
  for (int r = 0; r < 3; ++r) {
    m.row(r) = read_vector(node[r], field + "[" + std::to_string(r) + "]").transpose();
  }
  return m;
}

RawJson parse_object(const std::string& text, const char* what) {
  RawJson root;
  try {
    root = RawJson::parse(text);
  } catch (const RawJson::parse_error& e) {
    // e.what() carries "at line L, column C".
    throw Error(ErrorCode::ParseError, e.what());
  } catch (const RawJson::out_of_range& e) {
    throw Error(ErrorCode::ParseError, std::string("number is not finite: ") + e.what());
  }
  if (!root.is_object()) throw Error(ErrorCode::ParseError, std::string(what) + " must be a JSON object");
  return root;
}

Json vector_json(const Vector3& v) { return Json::array({v(0), v(1), v(2)}); }

Json matrix_json(const Matrix3& m) {
  Json rows = Json::array();
  for (int r = 0; r < 3; ++r) rows.push_back(vector_json(m.row(r).transpose()));
  return rows;
}

}  // namespace

DeltaCoefficients parse_operator_config(const std::string& text) {
  const RawJson root = parse_object(text, "operator config");
  DeltaCoefficients d;
  for (const auto& [key, value] : root.items()) {
    if (key == "b") {
      d.b = read_vector(value, "b");
    } else if (key == "B1") {
      d.B1 = read_matrix(value, "B1");
    } else if (key == "B2") {
      d.B2 = read_matrix(value, "B2");
    } else if (key == "T") {
      expect_array(value, 3, "T");
      for (int m = 0; m < 3; ++m) {
        const std::string fm = "T[" + std::to_string(m) + "]";
        expect_array(value[m], 3, fm);
        for (int l = 0; l < 3; ++l) {
          const Vector3 col = read_vector(value[m][l], fm + "[" + std::to_string(l) + "]");
          for (int i = 0; i < 3; ++i) d.T(m, l, i) = col(i);
        }
      }
    } else {
      field_error(key, "unknown field (expected b, B1, B2 or T)");
    }
  }
  return d;
}

DeltaCoefficients load_operator_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_operator_config(buf.str());
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

Json operator_config_json(const DeltaCoefficients& d) {
  Json t = Json::array();
  for (int m = 0; m < 3; ++m) {
    Json row = Json::array();
    for (int l = 0; l < 3; ++l) {
      row.push_back(Json::array({d.T(m, l, 0), d.T(m, l, 1), d.T(m, l, 2)}));
    }
    t.push_back(row);
  }
  Json out;
  out["b"] = vector_json(d.b);
  out["B1"] = matrix_json(d.B1);
  out["B2"] = matrix_json(d.B2);
  out["T"] = t;
  return out;
}

QuadraticMapCoeffs parse_qmap_json(const std::string& text) {
  const RawJson root = parse_object(text, "quadratic map");
  QuadraticMapCoeffs v;
  for (const auto& [key, value] : root.items()) {
    Vector3* slot = nullptr;
    if (key == "a") slot = &v.a;
    else if (key == "b") slot = &v.b;
    else if (key == "c") slot = &v.c;
    else if (key == "A") slot = &v.A;
    else if (key == "B") slot = &v.B;
    else if (key == "Gamma") slot = &v.Gamma;
    else if (key == "d") slot = &v.d;
    else if (key == "e") slot = &v.e;
    else if (key == "g") slot = &v.g;
    else field_error(key, "unknown field");
    *slot = read_vector(value, key);
  }
  return v;
}

Json qmap_json(const QuadraticMapCoeffs& v) {
  Json out;
  out["a"] = vector_json(v.a);
  out["b"] = vector_json(v.b);
  out["c"] = vector_json(v.c);
  out["A"] = vector_json(v.A);
  out["B"] = vector_json(v.B);
  out["Gamma"] = vector_json(v.Gamma);
  out["d"] = vector_json(v.d);
  out["e"] = vector_json(v.e);
  out["g"] = vector_json(v.g);
  return out;
}

Json certificate_json(const CertificateReport& r) {
  Json residuals = Json::object();
  for (const auto& [id, value] : r.residuals) {
    // Non-finite residuals are reported as the largest finite double.
    residuals[id] = std::isfinite(value) ? value : std::numeric_limits<double>::max();
  }
  Json out;
  out["verdict"] = r.verdict;
  out["worst_condition"] = r.worst_condition;
  const double worst = r.worst_residual();
  out["worst_residual"] = std::isfinite(worst) ? worst : std::numeric_limits<double>::max();
  out["residuals"] = residuals;
  return out;
}

Json sphere_oracle_json(const SphereOracleResult& r) {
  Json out;
  out["max_deviation"] =
      std::isfinite(r.max_deviation) ? r.max_deviation : std::numeric_limits<double>::max();
  out["samples"] = r.samples;
  out["seed"] = r.seed;
  out["worst_point"] = vector_json(r.worst_point);
  return out;
}

Json positivity_json(const PositivityVerdict& p) {
  Json out;
  out["verdict"] = p.verdict;
  out["min_eigenvalue"] = p.min_eigenvalue_seen;
  out["evaluations"] = p.evaluations;
  if (p.witness) {
    Json w;
    w["w"] = vector_json(p.witness->w);
    w["min_eigenvalue"] = p.witness->min_eigenvalue;
    out["witness"] = w;
  }
  return out;
}

}  // namespace qqo
