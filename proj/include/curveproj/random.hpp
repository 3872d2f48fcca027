#pragma once

#include <cstdint>
#include <random>

#include "curveproj/surface.hpp"

namespace curveproj {

/// Seeded sample stream over std::mt19937_64. Doubles are formed from the
/// top 53 bits of each draw, so sequences are identical on every platform.
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

/// Draws a point from the Riemannian area measure on the domain ball.
SurfacePoint sample_domain_point(const SurfaceModel& model, SampleStream& stream);

}  // namespace curveproj
