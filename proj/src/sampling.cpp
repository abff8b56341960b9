#include "qqo/sampling.hpp"

#include <cmath>
#include <numbers>

namespace qqo {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double CounterSampler::uniform(std::uint64_t index, std::uint32_t slot) const {
  std::uint64_t h = splitmix64(seed_);
  h = splitmix64(h ^ stream_);
  h = splitmix64(h ^ index);
  h = splitmix64(h ^ slot);
  // 53 random bits, shifted off zero.
  return (static_cast<double>(h >> 11) + 0.5) * 0x1.0p-53;
}

double CounterSampler::normal(std::uint64_t index, std::uint32_t slot) const {
  const std::uint32_t pair = slot & ~1u;
  const double u1 = uniform(index, pair);
  const double u2 = uniform(index, pair + 1);
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return (slot & 1u) ? r * std::sin(angle) : r * std::cos(angle);
}

Vector3 CounterSampler::sphere_point(std::uint64_t index) const {
  for (std::uint32_t attempt = 0;; ++attempt) {
    const std::uint32_t base = 8 * attempt;
    const Vector3 g(normal(index, base), normal(index, base + 1), normal(index, base + 2));
    const double n = g.norm();
    if (n > 1e-12) return g / n;
  }
}

Vector3 CounterSampler::ball_point(std::uint64_t index) const {
  const double radius = std::cbrt(uniform(index, 0x7fffffffu));
  return radius * sphere_point(index);
}

}  // namespace qqo
