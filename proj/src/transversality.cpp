#include "curveproj/transversality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "curveproj/parallel.hpp"
#include "curveproj/projection.hpp"
#include "curveproj/random.hpp"

namespace curveproj {

namespace {

constexpr double kRoundoff = 1e-12;

double unit_radial(double unit_r, Branch branch) {
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

}  // namespace

SurfacePoint sample_domain_point(const SurfaceModel& model, SampleStream& stream) {
  const double m = model.unit_domain_radius();
  const double u = stream.uniform();
  const double phi = stream.uniform(0.0, kTwoPi);
  double r = 0.0;
  // Inverse CDF of the radial area density sinh r, sin r, r.
  switch (model.branch()) {
    case Branch::hyperbolic:
      r = std::acosh(1.0 + u * (std::cosh(m) - 1.0));
      break;
    case Branch::spherical:
      r = std::acos(1.0 - u * (1.0 - std::cos(m)));
      break;
    case Branch::euclidean:
      r = m * std::sqrt(u);
      break;
  }
  r = std::min(r / model.unit_scale(), model.domain_radius());
  return {r, phi};
}

PairGeometry pair_geometry(const SurfacePoint& p1, const SurfacePoint& p2,
                           const SurfaceModel& model) {
  const double s = model.unit_scale();
  PairGeometry g;
  g.p1 = p1;
  g.p2 = p2;
  g.d = distance(p1, p2, model) * s;
  if (g.d < kDiagonalCutoff) {
    std::ostringstream msg;
    msg << "pair_geometry: near-diagonal pair (d=" << g.d << ")";
    throw std::invalid_argument(msg.str());
  }
  g.d1 = p1.r() * s;
  g.d2 = p2.r() * s;
  g.td1 = unit_radial(g.d1, model.branch());
  g.td2 = unit_radial(g.d2, model.branch());
  g.theta1 = p1.phi();
  g.theta2 = p2.phi();
  g.alpha0 = g.theta1 - g.theta2;
  return g;
}

Decomposition decomposition(const PairGeometry& g) {
  Decomposition dec;
  dec.A = g.td1 * std::cos(g.alpha0) - g.td2;
  dec.B = g.td1 * std::sin(g.alpha0);
  dec.D = std::hypot(dec.A, dec.B);
  if (!(dec.D > 0.0)) {
    throw std::logic_error("decomposition: A and B vanish for an off-diagonal pair");
  }
  dec.alpha_hat = std::atan2(dec.B, dec.A);
  if (dec.alpha_hat <= 0.0) dec.alpha_hat += kTwoPi;
  dec.theta_hat = reduce_angle(g.theta2 + dec.alpha_hat);
  return dec;
}

double decomposition_norm_squared(const PairGeometry& g, Branch branch) {
  switch (branch) {
    case Branch::hyperbolic: {
      const double c1 = std::cosh(g.d1);
      const double c2 = std::cosh(g.d2);
      return (2.0 * std::cosh(g.d) * c1 * c2 - c1 * c1 - c2 * c2) / (c1 * c1 * c2 * c2);
    }
    case Branch::spherical: {
      const double c1 = std::cos(g.d1);
      const double c2 = std::cos(g.d2);
      return (c1 * c1 + c2 * c2 - 2.0 * std::cos(g.d) * c1 * c2) / (c1 * c1 * c2 * c2);
    }
    case Branch::euclidean:
      break;
  }
  return g.d * g.d;
}

double phi(double theta, const SurfacePoint& p1, const SurfacePoint& p2,
           const SurfaceModel& model) {
  const PairGeometry g = pair_geometry(p1, p2, model);
  return (transformed_projection(theta, p1, model) - transformed_projection(theta, p2, model)) /
         g.d;
}

double phi(GeodesicAngle theta, const SurfacePoint& p1, const SurfacePoint& p2,
           const SurfaceModel& model) {
  return phi(theta.theta(), p1, p2, model);
}

double phi_derivative(double theta, const PairGeometry& g, const Decomposition& dec, int order) {
  if (order < 0) throw std::invalid_argument("phi_derivative: negative order");
  return dec.D / g.d * std::cos(theta - dec.theta_hat + order * 0.5 * kPi);
}

double phi_derivative(GeodesicAngle theta, const SurfacePoint& p1, const SurfacePoint& p2,
                      const SurfaceModel& model, int order) {
  if (order < 1) throw std::invalid_argument("phi_derivative: order must be >= 1");
  const PairGeometry g = pair_geometry(p1, p2, model);
  return phi_derivative(theta.theta(), g, decomposition(g), order);
}

std::vector<double> projection_derivatives(double theta, const SurfacePoint& q,
                                           const SurfaceModel& model, int max_order) {
  if (max_order < 0) throw std::invalid_argument("projection_derivatives: negative order");
  model.require_contains(q, "projection_derivatives input");

  const Branch branch = model.branch();
  const double s = model.unit_scale();
  const double radial = unit_radial(q.r() * s, branch);
  const double a = q.phi() - theta;
  const auto n = static_cast<std::size_t>(max_order) + 1;

  // Taylor coefficients in h of x(theta + h) = radial * cos(a - h).
  std::vector<double> x(n + 1);
  double factorial = 1.0;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) factorial *= static_cast<double>(k);
    x[k] = radial * std::cos(a - static_cast<double>(k) * 0.5 * kPi) / factorial;
  }

  // Pi = F(x) / s with F' = 1 / (1 + sigma x^2).
  const double sigma = branch == Branch::hyperbolic ? -1.0 : branch == Branch::spherical ? 1.0 : 0.0;
  std::vector<double> u(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double sq = 0.0;
    for (std::size_t j = 0; j <= k; ++j) sq += x[j] * x[k - j];
    u[k] = (k == 0 ? 1.0 : 0.0) + sigma * sq;
  }
  constexpr double kGuard = 1e-15;
  u[0] = std::max(u[0], kGuard);

  std::vector<double> g(n, 0.0);
  g[0] = 1.0 / u[0];
  for (std::size_t k = 1; k < n; ++k) {
    double acc = 0.0;
    for (std::size_t j = 1; j <= k; ++j) acc += u[j] * g[k - j];
    g[k] = -acc / u[0];
  }

  std::vector<double> f(n, 0.0);
  switch (branch) {
    case Branch::hyperbolic:
      f[0] = detail::clamped_artanh(x[0]);
      break;
    case Branch::spherical:
      f[0] = std::atan(x[0]);
      break;
    case Branch::euclidean:
      f[0] = x[0];
      break;
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    double acc = 0.0;
    for (std::size_t j = 0; j <= k; ++j) acc += static_cast<double>(j + 1) * x[j + 1] * g[k - j];
    f[k + 1] = acc / static_cast<double>(k + 1);
  }

  std::vector<double> out(n);
  factorial = 1.0;
  for (std::size_t l = 0; l < n; ++l) {
    if (l > 0) factorial *= static_cast<double>(l);
    out[l] = factorial * f[l] / s;
  }
  return out;
}

AnalyticBounds analytic_bounds(const SurfaceModel& model) {
  const double m = model.unit_domain_radius();
  switch (model.branch()) {
    case Branch::hyperbolic: {
      const double ch = std::cosh(m);
      // sqrt2 sqrt(cosh t - 1)/t = 2 sinh(t/2)/t is increasing; sup at t = 2m.
      return {1.0 / (std::sqrt(2.0) * ch * ch), std::sinh(m) / m};
    }
    case Branch::spherical: {
      const double c = std::cos(m);
      // sqrt2 sqrt(1 - cos t)/t = 2 sin(t/2)/t is decreasing on (0, pi); inf at t = 2m.
      return {std::sin(m) / m, 1.0 / (c * c)};
    }
    case Branch::euclidean:
      break;
  }
  return {1.0, 1.0};
}

bool TransversalityReport::sandwich_holds() const {
  return c_analytic * (1.0 - kRoundoff) <= c_hat && c_hat <= C_hat &&
         C_hat <= C_analytic * (1.0 + kRoundoff) && out_of_bounds == 0;
}

bool TransversalityReport::passed() const {
  const bool finite = std::all_of(projection_derivative_bounds.begin(),
                                  projection_derivative_bounds.end(),
                                  [](double v) { return std::isfinite(v); });
  return sandwich_holds() && violations.empty() && regularity_failures == 0 && finite;
}

std::vector<std::pair<SurfacePoint, SurfacePoint>> sample_pairs(const SurfaceModel& model,
                                                                std::size_t n_pairs,
                                                                std::uint64_t seed) {
  if (n_pairs == 0) throw std::invalid_argument("sample_pairs: n_pairs must be >= 1");
  SampleStream stream(seed);
  std::vector<std::pair<SurfacePoint, SurfacePoint>> pairs;
  pairs.reserve(n_pairs);
  const std::size_t max_attempts = 100 * n_pairs;
  std::size_t attempts = 0;
  while (pairs.size() < n_pairs) {
    if (++attempts > max_attempts) {
      throw std::runtime_error("sample_pairs: too many near-diagonal draws");
    }
    const SurfacePoint p1 = sample_domain_point(model, stream);
    const SurfacePoint p2 = sample_domain_point(model, stream);
    if (distance(p1, p2, model) * model.unit_scale() < kDiagonalCutoff) continue;
    pairs.emplace_back(p1, p2);
  }
  return pairs;
}

namespace {

struct RatioSample {
  PairGeometry geometry;
  Decomposition dec;
  double ratio = 0.0;
};

std::vector<RatioSample> ratio_samples(const SurfaceModel& model, std::size_t n_pairs,
                                       std::uint64_t seed, TransversalityReport& report) {
  const auto pairs = sample_pairs(model, n_pairs, seed);
  std::vector<RatioSample> samples(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    RatioSample& s = samples[i];
    s.geometry = pair_geometry(pairs[i].first, pairs[i].second, model);
    s.dec = decomposition(s.geometry);
    s.ratio = s.dec.D / s.geometry.d;
  });

  const AnalyticBounds bounds = analytic_bounds(model);
  report.c_analytic = bounds.lower;
  report.C_analytic = bounds.upper;
  report.c_hat = std::numeric_limits<double>::infinity();
  report.C_hat = 0.0;
  report.out_of_bounds = 0;
  for (const auto& s : samples) {
    report.c_hat = std::min(report.c_hat, s.ratio);
    report.C_hat = std::max(report.C_hat, s.ratio);
    if (s.ratio < bounds.lower * (1.0 - kRoundoff) || s.ratio > bounds.upper * (1.0 + kRoundoff)) {
      ++report.out_of_bounds;
    }
  }
  report.c_prime = report.c_hat / 10.0 * (1.0 - kRoundoff);
  report.sample_count = samples.size();
  report.seed = seed;
  return samples;
}

}  // namespace

TransversalityReport estimate_constants(const SurfaceModel& model, std::size_t n_pairs,
                                        std::uint64_t seed) {
  TransversalityReport report;
  ratio_samples(model, n_pairs, seed, report);
  return report;
}

TransversalityReport check_definition(const SurfaceModel& model, std::size_t n_pairs,
                                      std::size_t n_thetas, int max_order, std::uint64_t seed) {
  if (max_order < 1) throw std::invalid_argument("check_definition: max_order must be >= 1");
  if (n_thetas == 0) throw std::invalid_argument("check_definition: n_thetas must be >= 1");

  TransversalityReport report;
  const auto samples = ratio_samples(model, n_pairs, seed, report);
  report.theta_count = n_thetas;

  const auto orders = static_cast<std::size_t>(max_order) + 1;
  std::vector<double> thetas(n_thetas);
  for (std::size_t j = 0; j < n_thetas; ++j) {
    thetas[j] = kPi * (static_cast<double>(j) + 0.5) / static_cast<double>(n_thetas);
  }

  struct PairOutcome {
    std::vector<double> phi_sup;
    std::vector<double> projection_sup;
    std::vector<Violation> violations;
    std::size_t regularity_failures = 0;
  };
  std::vector<PairOutcome> outcomes(samples.size());

  const double c_prime = report.c_prime;
  const double regularity_cap = report.C_hat * (1.0 + kRoundoff);
  parallel_for(samples.size(), [&](std::size_t i) {
    const RatioSample& s = samples[i];
    PairOutcome& out = outcomes[i];
    out.phi_sup.assign(orders, 0.0);
    out.projection_sup.assign(orders, 0.0);
    const SurfacePoint& p1 = s.geometry.p1;
    const SurfacePoint& p2 = s.geometry.p2;
    for (double theta : thetas) {
      const double value = (transformed_projection(theta, p1, model) -
                            transformed_projection(theta, p2, model)) /
                           s.geometry.d;
      out.phi_sup[0] = std::max(out.phi_sup[0], std::abs(value));
      for (std::size_t l = 1; l < orders; ++l) {
        const double dl = std::abs(phi_derivative(theta, s.geometry, s.dec, static_cast<int>(l)));
        out.phi_sup[l] = std::max(out.phi_sup[l], dl);
        if (dl > regularity_cap) ++out.regularity_failures;
      }

      const double slope = phi_derivative(theta, s.geometry, s.dec, 1);
      if (std::abs(value) <= c_prime && std::abs(slope) < c_prime) {
        out.violations.push_back({p1, p2, theta, value, slope});
      }

      for (const SurfacePoint* q : {&p1, &p2}) {
        const auto jets = projection_derivatives(theta, *q, model, max_order);
        for (std::size_t l = 0; l < orders; ++l) {
          out.projection_sup[l] = std::max(out.projection_sup[l], std::abs(jets[l]));
        }
      }
    }
  });

  report.derivative_bounds.assign(orders, 0.0);
  report.projection_derivative_bounds.assign(orders, 0.0);
  for (const auto& out : outcomes) {
    for (std::size_t l = 0; l < orders; ++l) {
      report.derivative_bounds[l] = std::max(report.derivative_bounds[l], out.phi_sup[l]);
      report.projection_derivative_bounds[l] =
          std::max(report.projection_derivative_bounds[l], out.projection_sup[l]);
    }
    report.violations.insert(report.violations.end(), out.violations.begin(),
                             out.violations.end());
    report.regularity_failures += out.regularity_failures;
  }
  return report;
}

}  // namespace curveproj
