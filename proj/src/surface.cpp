#include "curveproj/surface.hpp"

#include <cmath>
#include <sstream>

namespace curveproj {

namespace {

// Slack for round-off on points that sit exactly on the boundary sphere.
constexpr double kBoundarySlack = 1e-12;

}  // namespace

double reduce_angle(double angle, double period) {
  double reduced = std::fmod(angle, period);
  if (reduced < 0.0) reduced += period;
  if (reduced >= period) reduced = 0.0;
  return reduced + 0.0;
}

const char* to_string(Branch branch) {
  switch (branch) {
    case Branch::hyperbolic:
      return "hyperbolic";
    case Branch::euclidean:
      return "euclidean";
    case Branch::spherical:
      return "spherical";
  }
  return "unknown";
}

SurfacePoint::SurfacePoint(double r, double phi) {
  if (!std::isfinite(r) || !std::isfinite(phi)) {
    throw std::invalid_argument("SurfacePoint: non-finite coordinate");
  }
  if (r < 0.0) {
    throw std::invalid_argument("SurfacePoint: negative radius");
  }
  r_ = r;
  phi_ = (r == 0.0) ? 0.0 : reduce_angle(phi);
}

GeodesicAngle::GeodesicAngle(double theta) : theta_(theta) {
  if (!std::isfinite(theta) || theta < 0.0 || theta >= kPi) {
    std::ostringstream msg;
    msg << "GeodesicAngle: theta=" << theta << " outside [0, pi)";
    throw std::invalid_argument(msg.str());
  }
}

SurfaceModel::SurfaceModel(double curvature, double domain_radius)
    : curvature_(curvature), domain_radius_(domain_radius) {
  if (!std::isfinite(curvature) || !std::isfinite(domain_radius)) {
    throw DomainError("SurfaceModel: non-finite parameter");
  }
  if (domain_radius <= 0.0) {
    throw DomainError("SurfaceModel: domain radius must be positive");
  }
  if (curvature < 0.0) {
    branch_ = Branch::hyperbolic;
    unit_scale_ = std::sqrt(-curvature);
  } else if (curvature > 0.0) {
    branch_ = Branch::spherical;
    unit_scale_ = std::sqrt(curvature);
    const double limit = kPi / (2.0 * unit_scale_);
    if (!(domain_radius < limit)) {
      std::ostringstream msg;
      msg << "SurfaceModel: K=" << curvature << " requires m < pi/(2 sqrt K) = " << limit
          << ", got m=" << domain_radius;
      throw DomainError(msg.str());
    }
  } else {
    branch_ = Branch::euclidean;
    unit_scale_ = 1.0;
  }
}

bool SurfaceModel::contains(const SurfacePoint& q) const {
  return q.r() <= domain_radius_ * (1.0 + kBoundarySlack);
}

void SurfaceModel::require_contains(const SurfacePoint& q, const std::string& what) const {
  if (!contains(q)) {
    std::ostringstream msg;
    msg << what << " at r=" << q.r() << " lies outside the domain ball of radius "
        << domain_radius_;
    throw DomainError(msg.str());
  }
}

}  // namespace curveproj
