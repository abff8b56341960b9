#pragma once

namespace qqo {

// Algebraic residuals on unit-scale data.
inline constexpr double kTolAlg = 1e-9;
// Bloch-norm boundaries (pure state, ball membership).
inline constexpr double kTolState = 1e-9;
// Certificate residuals.
inline constexpr double kTolCert = 1e-9;
// Eigenvalue accuracy and negativity threshold.
inline constexpr double kTolEig = 1e-9;

// Monte-Carlo sphere oracle thresholds.
inline constexpr double kOraclePass = 1e-9;
inline constexpr double kOracleViolation = 1e-3;

}  // namespace qqo
