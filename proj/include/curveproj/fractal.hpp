#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "curveproj/surface.hpp"

namespace curveproj {

struct PlanarPoint {
  double x = 0.0;
  double y = 0.0;
};

/// x -> ratio * x + translation.
struct SimilarityMap {
  double ratio = 0.5;
  PlanarPoint translation;

  PlanarPoint operator()(PlanarPoint p) const {
    return {ratio * p.x + translation.x, ratio * p.y + translation.y};
  }
};

/// Iterated function system of contracting similarities on the unit square.
///
/// Construction validates the open set condition at depth 1: every image of
/// the unit square must stay inside it and no two images may overlap with
/// positive area.
class IFSSpec {
 public:
  IFSSpec(std::vector<SimilarityMap> maps, int depth);

  /// Middle-thirds Cantor set on the bottom edge, dimension log 2 / log 3.
  static IFSSpec cantor(int depth);
  /// Four corner squares of side `ratio`, dimension log 4 / log(1/ratio).
  static IFSSpec corner_dust(double ratio, int depth);
  /// Three squares of side 1/5 in a triangle, dimension log 3 / log 5.
  static IFSSpec triangle_dust(int depth);

  const std::vector<SimilarityMap>& maps() const { return maps_; }
  int depth() const { return depth_; }
  double expected_dimension() const { return expected_dimension_; }
  std::size_t point_count() const;

 private:
  std::vector<SimilarityMap> maps_;
  int depth_;
  double expected_dimension_;
};

/// Root s of sum_i ratio_i^s = 1.
double similarity_dimension(std::span<const SimilarityMap> maps);

inline constexpr std::size_t kMaxAttractorPoints = 10'000'000;

/// All depth-fold compositions applied to the unit-square centre, in
/// lexicographic order of the map-index words.
std::vector<PlanarPoint> generate_attractor(const IFSSpec& spec);

struct PointCloud {
  std::vector<SurfacePoint> points;
  std::string label;
  double expected_dimension = 0.0;
};

/// Exponential map at p applied to planar points centred on (1/2, 1/2): a
/// point at polar offset (rho, phi) lands at SurfacePoint(scale * rho, phi).
PointCloud push_to_surface(std::span<const PlanarPoint> planar, const SurfaceModel& model,
                           double scale, std::string label = {},
                           double expected_dimension = 0.0);

/// Largest scale (times `fill`) that keeps every pushed point inside Omega.
double fit_scale(std::span<const PlanarPoint> planar, const SurfaceModel& model,
                 double fill = 0.95);

/// CSV with header `r,phi`, 17 significant digits.
void write_point_cloud_csv(std::ostream& out, const PointCloud& cloud);
PointCloud read_point_cloud_csv(std::istream& in);

}  // namespace curveproj
