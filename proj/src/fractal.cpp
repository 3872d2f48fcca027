#include "curveproj/fractal.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "curveproj/csv.hpp"

namespace curveproj {

namespace {

constexpr double kSquareSlack = 1e-12;

bool overlaps(double lo_a, double len_a, double lo_b, double len_b) {
  return std::min(lo_a + len_a, lo_b + len_b) - std::max(lo_a, lo_b) > kSquareSlack;
}

}  // namespace

double similarity_dimension(std::span<const SimilarityMap> maps) {
  if (maps.empty()) throw std::invalid_argument("similarity_dimension: no maps");
  const double first = maps.front().ratio;
  const bool equal = std::all_of(maps.begin(), maps.end(),
                                 [first](const SimilarityMap& f) { return f.ratio == first; });
  if (equal) {
    return std::log(static_cast<double>(maps.size())) / std::log(1.0 / first);
  }
  // Moran equation; the left side is strictly decreasing in s.
  auto moran = [&](double s) {
    double sum = 0.0;
    for (const auto& f : maps) sum += std::pow(f.ratio, s);
    return sum - 1.0;
  };
  double lo = 0.0;
  double hi = 64.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (moran(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

IFSSpec::IFSSpec(std::vector<SimilarityMap> maps, int depth)
    : maps_(std::move(maps)), depth_(depth) {
  if (maps_.empty()) throw std::invalid_argument("IFSSpec: at least one map required");
  if (depth_ < 1) throw std::invalid_argument("IFSSpec: depth must be >= 1");
  for (const auto& f : maps_) {
    if (!(f.ratio > 0.0 && f.ratio < 1.0)) {
      throw std::invalid_argument("IFSSpec: ratios must lie in (0, 1)");
    }
    const auto& t = f.translation;
    if (t.x < -kSquareSlack || t.y < -kSquareSlack || t.x + f.ratio > 1.0 + kSquareSlack ||
        t.y + f.ratio > 1.0 + kSquareSlack) {
      throw std::invalid_argument("IFSSpec: map image leaves the unit square");
    }
  }
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    for (std::size_t j = i + 1; j < maps_.size(); ++j) {
      const auto& a = maps_[i];
      const auto& b = maps_[j];
      if (overlaps(a.translation.x, a.ratio, b.translation.x, b.ratio) &&
          overlaps(a.translation.y, a.ratio, b.translation.y, b.ratio)) {
        std::ostringstream msg;
        msg << "IFSSpec: images of maps " << i << " and " << j << " overlap";
        throw std::invalid_argument(msg.str());
      }
    }
  }
  expected_dimension_ = similarity_dimension(maps_);
}

IFSSpec IFSSpec::cantor(int depth) {
  constexpr double r = 1.0 / 3.0;
  return IFSSpec({{r, {0.0, 0.0}}, {r, {2.0 / 3.0, 0.0}}}, depth);
}

IFSSpec IFSSpec::corner_dust(double ratio, int depth) {
  const double far = 1.0 - ratio;
  return IFSSpec({{ratio, {0.0, 0.0}}, {ratio, {far, 0.0}}, {ratio, {0.0, far}}, {ratio, {far, far}}},
                 depth);
}

IFSSpec IFSSpec::triangle_dust(int depth) {
  constexpr double r = 0.2;
  return IFSSpec({{r, {0.0, 0.0}}, {r, {0.8, 0.0}}, {r, {0.4, 0.8}}}, depth);
}

std::size_t IFSSpec::point_count() const {
  std::size_t count = 1;
  for (int i = 0; i < depth_; ++i) {
    if (count > kMaxAttractorPoints / maps_.size()) return kMaxAttractorPoints + 1;
    count *= maps_.size();
  }
  return count;
}

std::vector<PlanarPoint> generate_attractor(const IFSSpec& spec) {
  const std::size_t total = spec.point_count();
  if (total > kMaxAttractorPoints) {
    std::ostringstream msg;
    msg << "generate_attractor: " << spec.maps().size() << "^" << spec.depth()
        << " points exceeds the limit of " << kMaxAttractorPoints;
    throw std::length_error(msg.str());
  }

  // Level k holds the words of length k in lexicographic order; prefixing a
  // map index to each block preserves that order.
  std::vector<PlanarPoint> level{{0.5, 0.5}};
  std::vector<PlanarPoint> next;
  for (int k = 0; k < spec.depth(); ++k) {
    next.clear();
    next.reserve(level.size() * spec.maps().size());
    for (const auto& f : spec.maps()) {
      for (const auto& p : level) next.push_back(f(p));
    }
    level.swap(next);
  }
  return level;
}

PointCloud push_to_surface(std::span<const PlanarPoint> planar, const SurfaceModel& model,
                           double scale, std::string label, double expected_dimension) {
  if (!(scale > 0.0)) throw std::invalid_argument("push_to_surface: scale must be positive");
  PointCloud cloud;
  cloud.label = std::move(label);
  cloud.expected_dimension = expected_dimension;
  cloud.points.reserve(planar.size());
  double worst = 0.0;
  for (const auto& p : planar) {
    const double dx = p.x - 0.5;
    const double dy = p.y - 0.5;
    const SurfacePoint q(scale * std::hypot(dx, dy), std::atan2(dy, dx));
    if (!model.contains(q)) worst = std::max(worst, q.r());
    cloud.points.push_back(q);
  }
  if (worst > 0.0) {
    std::ostringstream msg;
    msg << "push_to_surface: radius " << format_real(worst)
        << " exceeds the domain radius " << model.domain_radius();
    throw DomainError(msg.str());
  }
  return cloud;
}

double fit_scale(std::span<const PlanarPoint> planar, const SurfaceModel& model, double fill) {
  double rho = 0.0;
  for (const auto& p : planar) rho = std::max(rho, std::hypot(p.x - 0.5, p.y - 0.5));
  if (rho == 0.0) return 1.0;
  return fill * model.domain_radius() / rho;
}

void write_point_cloud_csv(std::ostream& out, const PointCloud& cloud) {
  out << "r,phi\n";
  for (const auto& q : cloud.points) {
    out << format_real(q.r()) << ',' << format_real(q.phi()) << '\n';
  }
}

PointCloud read_point_cloud_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("point cloud CSV: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "r,phi") throw std::invalid_argument("point cloud CSV: expected header r,phi");
  PointCloud cloud;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 2) throw std::invalid_argument("point cloud CSV: bad row '" + line + "'");
    cloud.points.emplace_back(parse_real(fields[0]), parse_real(fields[1]));
  }
  return cloud;
}

}  // namespace curveproj
