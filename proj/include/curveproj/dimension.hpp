#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "curveproj/fractal.hpp"
#include "curveproj/surface.hpp"

namespace curveproj {

struct BoxCount {
  double epsilon = 0.0;
  std::uint64_t n_boxes = 0;
};

struct DimensionEstimate {
  std::vector<BoxCount> counts;
  /// Least-squares slope of log n_boxes against log(1/epsilon).
  double slope = 0.0;
  double r_squared = 0.0;
  double eps_min = 0.0;
  double eps_max = 0.0;
};

struct MeasureEstimate {
  double epsilon = 0.0;
  double covered_length = 0.0;
};

inline constexpr std::size_t kMinScales = 4;

/// Occupied boxes [k eps, (k+1) eps), anchored at 0.
std::uint64_t count_boxes(std::span<const double> sorted_values, double epsilon);

/// Box-counting dimension over the given scales (positive, strictly
/// descending, at least kMinScales of them).
DimensionEstimate box_count_1d(std::span<const double> values, std::span<const double> epsilons);

/// epsilon times the number of occupied epsilon-boxes.
MeasureEstimate measure_estimate_1d(std::span<const double> values, double epsilon);

/// Default dyadic scale ladder: starts at diam/8 and halves while the box
/// count still grows by at least 5% per octave and stays below a quarter of
/// the sample size (past that point the count tracks the sample spacing, not
/// the set). Always returns at least kMinScales scales; a degenerate sample
/// (one distinct value) gets 1, 1/2, 1/4, 1/8.
std::vector<double> auto_epsilons(std::span<const double> values);

/// Signed (or transformed) projection of every cloud point, in order.
std::vector<double> project_cloud(const PointCloud& cloud, GeodesicAngle theta,
                                  const SurfaceModel& model, bool transformed);

/// CSV with header `epsilon,n_boxes`.
void write_box_counts_csv(std::ostream& out, const DimensionEstimate& estimate);

}  // namespace curveproj
