#include "qqo/catalog.hpp"

#include <cmath>

#include "qqo/error.hpp"

namespace qqo {

DeltaCoefficients delta0() {
  DeltaCoefficients d;
  // Δ0(σ1) = σ1⊗σ2 + σ2⊗σ1
  d.T(0, 1, 0) = 1.0;
  d.T(1, 0, 0) = 1.0;
  // Δ0(σ2) = σ1⊗σ1 − σ2⊗σ2 − σ3⊗σ3
  d.T(0, 0, 1) = 1.0;
  d.T(1, 1, 1) = -1.0;
  d.T(2, 2, 1) = -1.0;
  // Δ0(σ3) = σ1⊗σ3 + σ3⊗σ1
  d.T(0, 2, 2) = 1.0;
  d.T(2, 0, 2) = 1.0;
  return d;
}

DeltaCoefficients delta1(const Vector3& t) {
  if (!t.allFinite() || std::abs(t.norm() - 1.0) > kTolState) {
    throw Error(ErrorCode::InvalidT, "t must be a unit vector");
  }
  DeltaCoefficients d;
  for (int m = 0; m < 3; ++m) {
    for (int k = 0; k < 3; ++k) d.T(m, m, k) = t(k);
  }
  return d;
}

DeltaCoefficients linear_family(const Matrix3& b_matrix) {
  return DeltaCoefficients::linear(b_matrix);
}

std::vector<CatalogEntry> catalog_entries() {
  return {
      {"delta0", delta0(),
       "chaotic q-pure operator with Haar trace; V0(f) = (2f1f2, f1^2-f2^2-f3^2, 2f1f3)"},
      {"delta1", delta1(Vector3::UnitZ()),
       "trivial q-pure operator with Haar trace, t = (0,0,1); V1(f) = t|f|^2"},
      {"linear", linear_family(0.5 * Matrix3::Identity()),
       "linear family with B = I/2; q-pure and positive"},
  };
}

std::optional<CatalogEntry> find_catalog_entry(const std::string& name) {
  for (auto& entry : catalog_entries()) {
    if (entry.name == name) return entry;
  }
  return std::nullopt;
}

}  // namespace qqo
