#pragma once

#include <cstdint>

#include "qqo/pauli.hpp"

namespace qqo {

/// Counter-based generator: every draw is a pure function of
/// (seed, stream, index), so samples can be produced in any order or in
/// parallel and still match a sequential run.
class CounterSampler {
public:
  explicit CounterSampler(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {}

  /// Uniform in the open interval (0, 1); `slot` selects one of several
  /// independent draws for the same sample index.
  double uniform(std::uint64_t index, std::uint32_t slot) const;
  /// Standard normal via Box–Muller; slots come in pairs.
  double normal(std::uint64_t index, std::uint32_t slot) const;

  /// Uniform on the unit sphere (normalized Gaussian triple).
  Vector3 sphere_point(std::uint64_t index) const;
  /// Uniform in the unit ball (sphere direction, radius U^{1/3}).
  Vector3 ball_point(std::uint64_t index) const;

private:
  std::uint64_t seed_;
  std::uint64_t stream_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace qqo
