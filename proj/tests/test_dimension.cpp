#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "curveproj/csv.hpp"
#include "curveproj/dimension.hpp"
#include "curveproj/fractal.hpp"

namespace {

using namespace curveproj;

std::vector<double> cantor_line(int depth) {
  std::vector<double> xs;
  for (const auto& p : generate_attractor(IFSSpec::cantor(depth))) xs.push_back(p.x);
  return xs;
}

TEST(CountBoxes, AnchoredAtZero) {
  const std::vector<double> sorted{-0.6, -0.1, 0.05, 0.1, 0.49, 0.51};
  EXPECT_EQ(count_boxes(sorted, 0.5), 4u);
  EXPECT_EQ(count_boxes(sorted, 2.0), 2u);
  EXPECT_EQ(count_boxes(std::vector<double>{0.3}, 0.01), 1u);
}

TEST(BoxCount, UniformGridHasDimensionOne) {
  std::vector<double> xs;
  for (int i = 0; i < 4096; ++i) xs.push_back((i + 0.5) / 4096.0);
  const std::vector<double> eps{1.0 / 8, 1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128};
  const DimensionEstimate est = box_count_1d(xs, eps);
  EXPECT_NEAR(est.slope, 1.0, 1e-12);
  EXPECT_NEAR(est.r_squared, 1.0, 1e-12);
  EXPECT_EQ(est.eps_max, eps.front());
  EXPECT_EQ(est.eps_min, eps.back());
  ASSERT_EQ(est.counts.size(), eps.size());
  EXPECT_EQ(est.counts.back().n_boxes, 128u);
}

TEST(BoxCount, CantorSetAtTriadicScales) {
  // At eps = 3^-k the middle-thirds construction occupies exactly 2^k boxes
  // (up to boundary hits), so the slope is log 2 / log 3.
  const auto xs = cantor_line(10);
  std::vector<double> eps;
  for (int k = 2; k <= 7; ++k) eps.push_back(std::pow(3.0, -k) * 1.0000001);
  const DimensionEstimate est = box_count_1d(xs, eps);
  EXPECT_NEAR(est.slope, std::log(2.0) / std::log(3.0), 0.02);
}

TEST(BoxCount, SinglePointHasDimensionZero) {
  const std::vector<double> xs(50, 0.25);
  const DimensionEstimate est = box_count_1d(xs, auto_epsilons(xs));
  EXPECT_EQ(est.slope, 0.0);
  EXPECT_EQ(est.r_squared, 1.0);
}

TEST(BoxCount, ValidatesScales) {
  const std::vector<double> xs{0.0, 1.0};
  EXPECT_THROW(box_count_1d(xs, std::vector<double>{0.5, 0.25, 0.125}), std::invalid_argument);
  EXPECT_THROW(box_count_1d(xs, std::vector<double>{0.5, 0.25, 0.25, 0.1}), std::invalid_argument);
  EXPECT_THROW(box_count_1d(xs, std::vector<double>{0.5, 0.25, 0.0, -1.0}), std::invalid_argument);
  EXPECT_THROW(box_count_1d(std::vector<double>{}, std::vector<double>{4, 3, 2, 1}),
               std::invalid_argument);
  EXPECT_THROW(box_count_1d(std::vector<double>{std::nan("")}, std::vector<double>{4, 3, 2, 1}),
               std::invalid_argument);
}

TEST(MeasureEstimate, CoveredLength) {
  std::vector<double> xs;
  for (int i = 0; i < 1000; ++i) xs.push_back(2.0 * i / 999.0);
  const MeasureEstimate m = measure_estimate_1d(xs, 0.01);
  EXPECT_NEAR(m.covered_length, 2.0, 0.02);
  EXPECT_EQ(measure_estimate_1d(std::vector<double>{1.0}, 0.125).covered_length, 0.125);
  EXPECT_THROW(measure_estimate_1d(xs, 0.0), std::invalid_argument);
}

TEST(AutoEpsilons, DyadicLadderFromDiameter) {
  const auto xs = cantor_line(12);
  const auto eps = auto_epsilons(xs);
  ASSERT_GE(eps.size(), kMinScales);
  const double diam = *std::max_element(xs.begin(), xs.end()) - *std::min_element(xs.begin(), xs.end());
  EXPECT_DOUBLE_EQ(eps.front(), diam / 8);
  for (std::size_t i = 1; i < eps.size(); ++i) EXPECT_DOUBLE_EQ(eps[i], eps[i - 1] / 2);
  // The finest scale still resolves the set rather than the sample.
  std::vector<double> sorted = xs;
  std::sort(sorted.begin(), sorted.end());
  ASSERT_GT(eps.size(), kMinScales);
  EXPECT_LT(static_cast<double>(count_boxes(sorted, eps.back())), 0.25 * xs.size());
  EXPECT_NEAR(box_count_1d(xs, eps).slope, std::log(2.0) / std::log(3.0), 0.06);
}

TEST(AutoEpsilons, DegenerateSample) {
  const auto eps = auto_epsilons(std::vector<double>{3.0, 3.0});
  EXPECT_EQ(eps, (std::vector<double>{1.0, 0.5, 0.25, 0.125}));
}

TEST(ProjectCloud, SegmentOnLineIsIdentity) {
  const auto model = SurfaceModel::hyperbolic(2.0);
  PointCloud segment;
  for (int i = 0; i <= 1000; ++i) segment.points.emplace_back(1.5 * i / 1000.0, kPi / 2);
  const auto values = project_cloud(segment, GeodesicAngle(kPi / 2), model, false);
  for (std::size_t i = 0; i < values.size(); ++i) EXPECT_NEAR(values[i], segment.points[i].r(), 1e-12);
  EXPECT_NEAR(box_count_1d(values, auto_epsilons(values)).slope, 1.0, 0.05);
  const auto transformed = project_cloud(segment, GeodesicAngle(kPi / 2), model, true);
  EXPECT_NEAR(transformed.back(), std::tanh(1.5), 1e-12);
}

TEST(DimensionCsv, BoxCountTableAndRealColumn) {
  const std::vector<double> xs{0.0, 0.3, 0.9};
  std::stringstream out;
  write_box_counts_csv(out, box_count_1d(xs, std::vector<double>{1.0, 0.5, 0.25, 0.125}));
  EXPECT_EQ(out.str(), "epsilon,n_boxes\n1,1\n0.5,2\n0.25,3\n0.125,3\n");

  std::stringstream in("value\n0.5\n-1e-3\n\n2\n");
  EXPECT_EQ(read_real_column(in), (std::vector<double>{0.5, -1e-3, 2.0}));
  std::stringstream headerless("1\n2\n");
  EXPECT_EQ(read_real_column(headerless).size(), 2u);
  std::stringstream broken("1\nx\n");
  EXPECT_THROW(read_real_column(broken), std::invalid_argument);
}

}  // namespace
