#include "curveproj/projection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace curveproj {

namespace detail {

double clamped_artanh(double x) {
  constexpr double kLimit = 1.0 - 1e-15;
  x = std::clamp(x, -kLimit, kLimit);
  return 0.5 * (std::log1p(x) - std::log1p(-x));
}

}  // namespace detail

namespace {

// Radial profile of the transformed projection in the unit model.
double radial_transform(double unit_r, Branch branch) {
  switch (branch) {
    case Branch::hyperbolic:
      return std::tanh(unit_r);
    case Branch::spherical:
      return std::tan(unit_r);
    case Branch::euclidean:
      break;
  }
  return unit_r;
}

double inverse_radial_transform(double x, Branch branch) {
  switch (branch) {
    case Branch::hyperbolic:
      return detail::clamped_artanh(x);
    case Branch::spherical:
      return std::atan(x);
    case Branch::euclidean:
      break;
  }
  return x;
}

}  // namespace

double distance(const SurfacePoint& a, const SurfacePoint& b, const SurfaceModel& model) {
  model.require_contains(a, "distance: first point");
  model.require_contains(b, "distance: second point");

  const double s = model.unit_scale();
  const double ua = a.r() * s;
  const double ub = b.r() * s;
  const double half_gap = std::sin(0.5 * (a.phi() - b.phi()));
  const double gap2 = half_gap * half_gap;

  double d = 0.0;
  switch (model.branch()) {
    case Branch::hyperbolic: {
      // sinh^2(d/2) = sinh^2((a-b)/2) + sinh a sinh b sin^2(delta/2)
      const double sh = std::sinh(0.5 * (ua - ub));
      const double h = sh * sh + std::sinh(ua) * std::sinh(ub) * gap2;
      d = 2.0 * std::asinh(std::sqrt(std::max(h, 0.0)));
      break;
    }
    case Branch::spherical: {
      // sin^2(d/2) = sin^2((a-b)/2) + sin a sin b sin^2(delta/2)
      const double sn = std::sin(0.5 * (ua - ub));
      const double h = std::clamp(sn * sn + std::sin(ua) * std::sin(ub) * gap2, 0.0, 1.0);
      d = 2.0 * std::atan2(std::sqrt(h), std::sqrt(1.0 - h));
      break;
    }
    case Branch::euclidean: {
      const double dr = ua - ub;
      d = std::sqrt(dr * dr + 4.0 * ua * ub * gap2);
      break;
    }
  }
  return d / s;
}

SurfacePoint point_on_line(GeodesicAngle theta, double t) {
  return t >= 0.0 ? SurfacePoint(t, theta.theta()) : SurfacePoint(-t, theta.theta() + kPi);
}

double transformed_projection(double theta, const SurfacePoint& q, const SurfaceModel& model) {
  model.require_contains(q, "projection input");
  return radial_transform(q.r() * model.unit_scale(), model.branch()) *
         std::cos(q.phi() - theta);
}

ProjectionResult signed_projection(GeodesicAngle theta, const SurfacePoint& q,
                                   const SurfaceModel& model) {
  ProjectionResult out;
  out.transformed = transformed_projection(theta.theta(), q, model);
  out.incidence_angle = reduce_angle(q.phi() - theta.theta());

  const double s = model.unit_scale();
  // A foot point landing exactly on p reports +0.
  out.signed_coordinate = inverse_radial_transform(out.transformed, model.branch()) / s + 0.0;
  out.projected_point = point_on_line(theta, out.signed_coordinate);
  return out;
}

double oracle_projection(GeodesicAngle theta, const SurfacePoint& q, const SurfaceModel& model,
                         int resolution) {
  if (resolution < 2) {
    throw std::invalid_argument("oracle_projection: resolution must be at least 2");
  }
  model.require_contains(q, "oracle input");

  const double m = model.domain_radius();
  auto objective = [&](double t) { return distance(q, point_on_line(theta, t), model); };

  // Returns the argmin over `count` uniform samples of [lo, hi].
  auto grid_argmin = [&](double lo, double hi, int count) {
    double best_t = lo;
    double best = std::numeric_limits<double>::infinity();
    const double step = (hi - lo) / (count - 1);
    for (int i = 0; i < count; ++i) {
      const double t = (i == count - 1) ? hi : lo + step * i;
      const double value = objective(t);
      if (value < best) {
        best = value;
        best_t = t;
      }
    }
    return std::pair{best_t, step};
  };

  auto [t_star, step] = grid_argmin(-m, m, resolution);
  constexpr int kRefinePoints = 100;
  for (int round = 0; round < 2; ++round) {
    const double lo = std::max(-m, t_star - step);
    const double hi = std::min(m, t_star + step);
    std::tie(t_star, step) = grid_argmin(lo, hi, kRefinePoints);
  }
  return t_star;
}

double right_triangle_leg(double hypotenuse, double angle, const SurfaceModel& model) {
  if (!(hypotenuse > 0.0) || hypotenuse > 2.0 * model.domain_radius()) {
    std::ostringstream msg;
    msg << "right_triangle_leg: hypotenuse " << hypotenuse << " outside (0, 2m]";
    throw DomainError(msg.str());
  }
  if (angle < 0.0 || angle > 0.5 * kPi) {
    throw std::invalid_argument("right_triangle_leg: angle outside [0, pi/2]");
  }

  const double s = model.unit_scale();
  const double c = hypotenuse * s;
  const double cos_a = std::cos(angle);
  double b = 0.0;
  switch (model.branch()) {
    case Branch::hyperbolic:
      b = detail::clamped_artanh(std::tanh(c) * cos_a);
      break;
    case Branch::spherical:
      // tan b = tan c cos a, on the branch continuous through c = pi/2.
      b = std::atan2(std::sin(c) * cos_a, std::cos(c));
      break;
    case Branch::euclidean:
      b = c * cos_a;
      break;
  }
  return b / s;
}

}  // namespace curveproj
