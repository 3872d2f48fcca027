#pragma once

#include <cstdint>
#include <vector>

#include "curveproj/surface.hpp"

namespace curveproj {

/// Metric data of an off-diagonal pair (p1, p2).
///
/// Lengths are expressed in the unit-curvature model (model lengths times
/// SurfaceModel::unit_scale()), which makes every quantity derived from a
/// pair invariant under rescaling the curvature.
struct PairGeometry {
  SurfacePoint p1;
  SurfacePoint p2;
  double d1 = 0.0;
  double d2 = 0.0;
  double d = 0.0;
  double td1 = 0.0;
  double td2 = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double alpha0 = 0.0;
};

/// Pure-cosine form of the transformed difference:
/// Pi~_theta p1 - Pi~_theta p2 = D cos(theta - theta_hat).
struct Decomposition {
  double A = 0.0;
  double B = 0.0;
  double D = 0.0;
  double alpha_hat = 0.0;  ///< in (0, 2pi]; 2pi stands in for atan2 == 0
  double theta_hat = 0.0;  ///< in [0, 2pi)
};

/// Pairs closer than this (unit model) are rejected as diagonal.
inline constexpr double kDiagonalCutoff = 1e-9;

/// Throws std::invalid_argument for near-diagonal pairs.
PairGeometry pair_geometry(const SurfacePoint& p1, const SurfacePoint& p2,
                           const SurfaceModel& model);

Decomposition decomposition(const PairGeometry& g);

/// Closed-form A^2 + B^2 from the law of cosines:
/// (2 cosh d cosh d1 cosh d2 - cosh^2 d1 - cosh^2 d2) / (cosh^2 d1 cosh^2 d2)
/// on the hyperbolic plane, the cos analogue with reversed sign pattern on
/// the sphere, and d^2 on the plane.
double decomposition_norm_squared(const PairGeometry& g, Branch branch);

/// Phi_theta(p1, p2) = (Pi~_theta p1 - Pi~_theta p2) / d(p1, p2).
double phi(double theta, const SurfacePoint& p1, const SurfacePoint& p2,
           const SurfaceModel& model);
double phi(GeodesicAngle theta, const SurfacePoint& p1, const SurfacePoint& p2,
           const SurfaceModel& model);

/// l-th theta-derivative of Phi, (D/d) cos(theta - theta_hat + l pi/2).
double phi_derivative(double theta, const PairGeometry& g, const Decomposition& dec, int order);
double phi_derivative(GeodesicAngle theta, const SurfacePoint& p1, const SurfacePoint& p2,
                      const SurfaceModel& model, int order);

/// Theta-derivatives of the signed projection Pi_theta q for orders
/// 0..max_order, by Taylor-jet composition of tanh(r)cos(phi - theta) with
/// artanh (resp. arctan). Element l holds d^l/dtheta^l.
std::vector<double> projection_derivatives(double theta, const SurfacePoint& q,
                                           const SurfaceModel& model, int max_order);

/// Analytic bounds c <= D/d <= C on the domain ball.
struct AnalyticBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Hyperbolic: c = 1/(sqrt2 cosh^2 m), C = sqrt2 sup_{t<=2m} sqrt(cosh t - 1)/t.
/// Spherical: c = inf_{t<=2m} sqrt2 sqrt(1 - cos t)/t, C = 1/cos^2 m.
/// Plane: c = C = 1. Radii in the unit-curvature model.
AnalyticBounds analytic_bounds(const SurfaceModel& model);

struct Violation {
  SurfacePoint p1;
  SurfacePoint p2;
  double theta = 0.0;
  double phi = 0.0;
  double derivative = 0.0;
};

struct TransversalityReport {
  double c_hat = 0.0;
  double C_hat = 0.0;
  double c_analytic = 0.0;
  double C_analytic = 0.0;
  double c_prime = 0.0;
  /// Element l: sampled sup |d^l Phi / dtheta^l|, l = 0..max_order.
  std::vector<double> derivative_bounds;
  /// Element l: sampled sup |d^l Pi_theta q / dtheta^l| over single points.
  std::vector<double> projection_derivative_bounds;
  std::vector<Violation> violations;
  /// Sampled D/d ratios falling outside [c_analytic, C_analytic].
  std::size_t out_of_bounds = 0;
  /// Derivative samples exceeding C_hat.
  std::size_t regularity_failures = 0;
  std::size_t sample_count = 0;
  std::size_t theta_count = 0;
  std::uint64_t seed = 0;

  bool sandwich_holds() const;
  bool passed() const;
};

/// Seeded pairs drawn from the area measure on Omega, rejecting near-diagonal
/// draws. Throws std::runtime_error after 100 * n_pairs attempts.
std::vector<std::pair<SurfacePoint, SurfacePoint>> sample_pairs(const SurfaceModel& model,
                                                                std::size_t n_pairs,
                                                                std::uint64_t seed);

/// Sampled extrema of D/d against the analytic bounds.
TransversalityReport estimate_constants(const SurfaceModel& model, std::size_t n_pairs,
                                        std::uint64_t seed);

/// Regularity and order-0 transversality checks on n_pairs x n_thetas samples;
/// theta runs over the open grid pi (i + 1/2) / n_thetas.
TransversalityReport check_definition(const SurfaceModel& model, std::size_t n_pairs,
                                      std::size_t n_thetas, int max_order, std::uint64_t seed);

}  // namespace curveproj
