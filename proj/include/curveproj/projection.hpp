#pragma once

#include "curveproj/surface.hpp"

namespace curveproj {

/// Closest-point projection of a surface point onto the line L_theta.
struct ProjectionResult {
  /// Signed arc length from p to P_theta q, positive on L_theta^+.
  double signed_coordinate = 0.0;
  /// tanh / tan / identity of the signed coordinate (unit-curvature model).
  double transformed = 0.0;
  /// Counter-clockwise angle from L_theta^+ to the ray through q, in [0, 2pi).
  double incidence_angle = 0.0;
  /// P_theta q itself.
  SurfacePoint projected_point;
};

/// Geodesic distance d_K(a, b).
///
/// Law of cosines on the triangle (p, a, b), evaluated in its half-angle
/// (haversine) form so that nearby points keep full relative precision.
double distance(const SurfacePoint& a, const SurfacePoint& b, const SurfaceModel& model);

/// The point at signed arc length t along L_theta.
SurfacePoint point_on_line(GeodesicAngle theta, double t);

ProjectionResult signed_projection(GeodesicAngle theta, const SurfacePoint& q,
                                   const SurfaceModel& model);

/// Transformed projection tanh(d(p,q)) cos(theta_q - theta) (resp. tan, or
/// the identity on the plane), evaluated directly rather than through the
/// signed coordinate. `theta` may be any real.
double transformed_projection(double theta, const SurfacePoint& q, const SurfaceModel& model);

/// Brute-force closest point: minimizes distance(q, point_on_line(theta, t))
/// over a uniform grid of `resolution` samples of t in [-m, m], followed by
/// two rounds of 100-point subdivision around the running argmin.
double oracle_projection(GeodesicAngle theta, const SurfacePoint& q, const SurfaceModel& model,
                         int resolution);

/// Leg adjacent to `angle` in a geodesic right triangle with hypotenuse
/// `hypotenuse`: tanh b = tanh c cos a, tan b = tan c cos a, or b = c cos a.
double right_triangle_leg(double hypotenuse, double angle, const SurfaceModel& model);

namespace detail {

/// 0.5 * ln((1 + x) / (1 - x)) with |x| clamped to 1 - 1e-15.
double clamped_artanh(double x);

}  // namespace detail

}  // namespace curveproj
