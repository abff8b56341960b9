#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qqo/channel.hpp"

namespace qqo {

struct CatalogEntry {
  std::string name;
  DeltaCoefficients delta;
  std::string notes;
};

/// Δ0(x) = w0 1⊗1 + w1(σ1⊗σ2 + σ2⊗σ1) + w2(σ1⊗σ1 − σ2⊗σ2 − σ3⊗σ3)
///         + w3(σ1⊗σ3 + σ3⊗σ1).
/// Its quadratic map is V0(f) = (2f1f2, f1² − f2² − f3², 2f1f3).
DeltaCoefficients delta0();

/// Δ1(x) = w0 1⊗1 + ⟨t, w⟩(σ1⊗σ1 + σ2⊗σ2 + σ3⊗σ3), ‖t‖ = 1, giving
/// V1(f) = t‖f‖². Error InvalidT when ‖t‖ ≠ 1.
DeltaCoefficients delta1(const Vector3& t);

/// Δ(x) = w0 1⊗1 + Bw·σ⊗1 + 1⊗Bw·σ.
DeltaCoefficients linear_family(const Matrix3& b_matrix);

/// delta0, delta1 (t = e3) and linear (B = I/2).
std::vector<CatalogEntry> catalog_entries();
std::optional<CatalogEntry> find_catalog_entry(const std::string& name);

}  // namespace qqo
