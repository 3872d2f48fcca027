#include "curveproj/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "curveproj/csv.hpp"
#include "curveproj/projection.hpp"

namespace curveproj {

namespace {

std::vector<double> sorted_copy(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("box counting: empty sample");
  std::vector<double> sorted(values.begin(), values.end());
  for (double v : sorted) {
    if (!std::isfinite(v)) throw std::invalid_argument("box counting: non-finite value");
  }
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

}  // namespace

std::uint64_t count_boxes(std::span<const double> sorted_values, double epsilon) {
  std::uint64_t boxes = 0;
  double previous = 0.0;
  for (double v : sorted_values) {
    const double index = std::floor(v / epsilon);
    if (boxes == 0 || index != previous) {
      ++boxes;
      previous = index;
    }
  }
  return boxes;
}

DimensionEstimate box_count_1d(std::span<const double> values, std::span<const double> epsilons) {
  if (epsilons.size() < kMinScales) {
    throw std::invalid_argument("box_count_1d: at least 4 scales are required");
  }
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    if (!(epsilons[i] > 0.0) || !std::isfinite(epsilons[i])) {
      throw std::invalid_argument("box_count_1d: scales must be positive");
    }
    if (i > 0 && !(epsilons[i] < epsilons[i - 1])) {
      throw std::invalid_argument("box_count_1d: scales must be strictly descending");
    }
  }
  const auto sorted = sorted_copy(values);

  DimensionEstimate est;
  est.eps_max = epsilons.front();
  est.eps_min = epsilons.back();
  est.counts.reserve(epsilons.size());
  double sx = 0.0, sy = 0.0;
  for (double eps : epsilons) {
    const std::uint64_t n = count_boxes(sorted, eps);
    est.counts.push_back({eps, n});
    sx += std::log(1.0 / eps);
    sy += std::log(static_cast<double>(n));
  }
  const double k = static_cast<double>(epsilons.size());
  const double mx = sx / k;
  const double my = sy / k;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& c : est.counts) {
    const double dx = std::log(1.0 / c.epsilon) - mx;
    const double dy = std::log(static_cast<double>(c.n_boxes)) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  est.slope = sxy / sxx;
  est.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return est;
}

MeasureEstimate measure_estimate_1d(std::span<const double> values, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("measure_estimate_1d: epsilon must be > 0");
  const auto sorted = sorted_copy(values);
  return {epsilon, epsilon * static_cast<double>(count_boxes(sorted, epsilon))};
}

std::vector<double> auto_epsilons(std::span<const double> values) {
  const auto sorted = sorted_copy(values);
  const double diam = sorted.back() - sorted.front();
  std::vector<double> eps;
  if (!(diam > 0.0)) {
    for (std::size_t i = 0; i < kMinScales; ++i) eps.push_back(std::ldexp(1.0, -static_cast<int>(i)));
    return eps;
  }

  constexpr double kSaturationGrowth = 1.05;
  constexpr int kMaxOctaves = 60;
  constexpr double kHeadroom = 0.25;
  const double total = static_cast<double>(sorted.size());
  double current = diam / 8.0;
  std::uint64_t previous = count_boxes(sorted, current);
  eps.push_back(current);
  for (int octave = 1; octave < kMaxOctaves; ++octave) {
    const double finer = current / 2.0;
    const std::uint64_t n = count_boxes(sorted, finer);
    const bool saturated = static_cast<double>(n) < kSaturationGrowth * previous ||
                           static_cast<double>(n) >= kHeadroom * total;
    if (saturated && eps.size() >= kMinScales) break;
    eps.push_back(finer);
    current = finer;
    previous = n;
  }
  return eps;
}

std::vector<double> project_cloud(const PointCloud& cloud, GeodesicAngle theta,
                                  const SurfaceModel& model, bool transformed) {
  std::vector<double> out;
  out.reserve(cloud.points.size());
  for (const auto& q : cloud.points) {
    const ProjectionResult res = signed_projection(theta, q, model);
    out.push_back(transformed ? res.transformed : res.signed_coordinate);
  }
  return out;
}

void write_box_counts_csv(std::ostream& out, const DimensionEstimate& estimate) {
  out << "epsilon,n_boxes\n";
  for (const auto& c : estimate.counts) out << format_real(c.epsilon) << ',' << c.n_boxes << '\n';
}

}  // namespace curveproj
