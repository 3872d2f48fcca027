#pragma once

#include <numbers>
#include <stdexcept>
#include <string>

namespace curveproj {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Raised when a point lies outside the compact domain ball of a model, or
/// when a model itself is not admissible.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Reduces an angle into [0, period).
double reduce_angle(double angle, double period = kTwoPi);

enum class Branch { hyperbolic, euclidean, spherical };

const char* to_string(Branch branch);

/// A point in geodesic polar coordinates about the base point p.
///
/// `r` is the geodesic distance to p in the model metric and `phi` the
/// counter-clockwise angle from the reference ray L_0^+. The base point
/// itself always carries phi = 0.
class SurfacePoint {
 public:
  SurfacePoint() = default;
  SurfacePoint(double r, double phi);

  static SurfacePoint base() { return {}; }

  double r() const { return r_; }
  double phi() const { return phi_; }

  friend bool operator==(const SurfacePoint&, const SurfacePoint&) = default;

 private:
  double r_ = 0.0;
  double phi_ = 0.0;
};

/// Direction of the geodesic line L_theta through p, theta in [0, pi).
class GeodesicAngle {
 public:
  explicit GeodesicAngle(double theta);

  double theta() const { return theta_; }

 private:
  double theta_;
};

/// Simply connected surface of constant curvature K together with the
/// compact domain Omega = closed ball B(p, m).
///
/// Every computation is carried out in the unit-curvature model after
/// rescaling lengths by unit_scale() = sqrt(|K|) (1 for the plane).
class SurfaceModel {
 public:
  SurfaceModel(double curvature, double domain_radius);

  static SurfaceModel hyperbolic(double domain_radius) { return {-1.0, domain_radius}; }
  static SurfaceModel euclidean(double domain_radius) { return {0.0, domain_radius}; }
  static SurfaceModel spherical(double domain_radius) { return {1.0, domain_radius}; }

  double curvature() const { return curvature_; }
  double domain_radius() const { return domain_radius_; }
  Branch branch() const { return branch_; }
  double unit_scale() const { return unit_scale_; }

  /// Domain radius measured in the unit-curvature model.
  double unit_domain_radius() const { return domain_radius_ * unit_scale_; }

  bool contains(const SurfacePoint& q) const;

  /// Throws DomainError naming `what` when q lies outside Omega.
  void require_contains(const SurfacePoint& q, const std::string& what = "point") const;

 private:
  double curvature_;
  double domain_radius_;
  Branch branch_;
  double unit_scale_;
};

}  // namespace curveproj
