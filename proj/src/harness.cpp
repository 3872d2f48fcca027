#include "curveproj/harness.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "curveproj/csv.hpp"
#include "curveproj/parallel.hpp"

namespace curveproj {

std::vector<double> open_theta_grid(int n_theta) {
  if (n_theta < 1) throw std::invalid_argument("open_theta_grid: n_theta must be >= 1");
  std::vector<double> grid(n_theta);
  for (int i = 0; i < n_theta; ++i) grid[i] = kPi * (i + 0.5) / n_theta;
  return grid;
}

void validate(const SweepConfig& config) {
  if (config.n_theta < 8) throw std::invalid_argument("sweep: n_theta must be >= 8");
  SurfaceModel(config.curvature, config.domain_radius);
  if (config.scale && !(*config.scale > 0.0)) {
    throw std::invalid_argument("sweep: scale must be positive");
  }
}

PointCloud sweep_cloud(const SweepConfig& config) {
  validate(config);
  const SurfaceModel model(config.curvature, config.domain_radius);
  const auto planar = generate_attractor(config.fractal);
  const double scale = config.scale.value_or(fit_scale(planar, model));
  std::ostringstream label;
  label << config.fractal.maps().size() << "-map IFS, depth " << config.fractal.depth();
  return push_to_surface(planar, model, scale, label.str(), config.fractal.expected_dimension());
}

std::vector<SweepRow> run_sweep(const SweepConfig& config, const PointCloud& cloud) {
  validate(config);
  const SurfaceModel model(config.curvature, config.domain_radius);
  const auto grid = open_theta_grid(config.n_theta);
  std::vector<SweepRow> rows(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    const GeodesicAngle theta(grid[i]);
    const auto values = project_cloud(cloud, theta, model, config.transformed);
    const auto eps = config.epsilons.empty() ? auto_epsilons(values) : config.epsilons;
    const DimensionEstimate est = box_count_1d(values, eps);
    SweepRow& row = rows[i];
    row.theta = grid[i];
    row.dim_estimate = est.slope;
    row.r_squared = est.r_squared;
    row.measure_estimate = measure_estimate_1d(values, eps.back()).covered_length;
    row.n_points = values.size();
  });
  return rows;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  return run_sweep(config, sweep_cloud(config));
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "theta,dim_estimate,r_squared,measure_estimate,n_points\n";
  for (const auto& row : rows) {
    out << format_real(row.theta) << ',' << format_real(row.dim_estimate) << ','
        << format_real(row.r_squared) << ',' << format_real(row.measure_estimate) << ','
        << row.n_points << '\n';
  }
}

void write_sweep_svg(std::ostream& out, const std::vector<SweepRow>& rows,
                     double expected_dimension) {
  constexpr double kWidth = 800.0;
  constexpr double kHeight = 400.0;
  constexpr double kMargin = 40.0;
  double y_max = expected_dimension;
  for (const auto& row : rows) y_max = std::max(y_max, row.dim_estimate);
  y_max = std::max(1.0, y_max) + 0.1;
  const double y_min = -0.1;

  auto px = [&](double theta) { return kMargin + theta / kPi * (kWidth - 2.0 * kMargin); };
  auto py = [&](double dim) {
    return kHeight - kMargin - (dim - y_min) / (y_max - y_min) * (kHeight - 2.0 * kMargin);
  };
  char buf[64];
  auto fmt = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"400\" "
         "viewBox=\"0 0 800 400\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"400\" fill=\"white\"/>\n";
  out << "<line x1=\"" << fmt(px(0.0)) << "\" y1=\"" << fmt(py(expected_dimension)) << "\" x2=\""
      << fmt(px(kPi)) << "\" y2=\"" << fmt(py(expected_dimension))
      << "\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n";
  out << "<polyline fill=\"none\" stroke=\"black\" points=\"";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) out << ' ';
    out << fmt(px(rows[i].theta)) << ',' << fmt(py(rows[i].dim_estimate));
  }
  out << "\"/>\n";
  out << "<text x=\"" << fmt(kMargin) << "\" y=\"24\" font-family=\"sans-serif\" "
         "font-size=\"14\">dimension estimate vs theta (expected "
      << format_real(expected_dimension) << ")</text>\n";
  out << "</svg>\n";
}

void write_transversality_csv(std::ostream& out, const TransversalityReport& report) {
  out << "field,value\n";
  out << "c_hat," << format_real(report.c_hat) << '\n';
  out << "C_hat," << format_real(report.C_hat) << '\n';
  out << "c_analytic," << format_real(report.c_analytic) << '\n';
  out << "C_analytic," << format_real(report.C_analytic) << '\n';
  out << "c_prime," << format_real(report.c_prime) << '\n';
  for (std::size_t l = 0; l < report.derivative_bounds.size(); ++l) {
    out << "phi_derivative_sup_" << l << ',' << format_real(report.derivative_bounds[l]) << '\n';
  }
  for (std::size_t l = 0; l < report.projection_derivative_bounds.size(); ++l) {
    out << "projection_derivative_sup_" << l << ','
        << format_real(report.projection_derivative_bounds[l]) << '\n';
  }
  out << "out_of_bounds," << report.out_of_bounds << '\n';
  out << "regularity_failures," << report.regularity_failures << '\n';
  out << "sample_count," << report.sample_count << '\n';
  out << "theta_count," << report.theta_count << '\n';
  out << "seed," << report.seed << '\n';
  out << "violations," << report.violations.size() << '\n';
  for (const auto& v : report.violations) {
    out << "violation," << format_real(v.p1.r()) << ' ' << format_real(v.p1.phi()) << ' '
        << format_real(v.p2.r()) << ' ' << format_real(v.p2.phi()) << ' '
        << format_real(v.theta) << '\n';
  }
}

std::string transversality_summary(const TransversalityReport& report) {
  std::ostringstream s;
  s << "c_hat=" << format_real(report.c_hat) << ", C_hat=" << format_real(report.C_hat)
    << ", c_analytic=" << format_real(report.c_analytic)
    << ", C_analytic=" << format_real(report.C_analytic)
    << ", violations=" << report.violations.size();
  return s.str();
}

const char* to_string(ArcImageKind kind) {
  switch (kind) {
    case ArcImageKind::single:
      return "single";
    case ArcImageKind::finite:
      return "finite";
    case ArcImageKind::whole_line:
      return "whole_line";
  }
  return "unknown";
}

double line_coordinate(const AmbientPoint& on_line, double theta, const SphereFrame& frame) {
  return std::atan2(on_line.dot(frame.direction(theta)), on_line.dot(frame.base()));
}

CounterexampleResult run_counterexample(const CounterexampleConfig& config,
                                        const SphereFrame& frame) {
  if (config.n_theta < 8) throw std::invalid_argument("counterexample: n_theta must be >= 8");
  if (!(config.arc_length > 0.0 && config.arc_length < kPi)) {
    throw std::invalid_argument("counterexample: arc length must lie in (0, pi)");
  }
  const PolarArc arc{config.arc_center - 0.5 * config.arc_length, config.arc_length};
  const auto arc_points = arc.sample(config.arc_samples, frame);
  const auto grid = open_theta_grid(config.n_theta);

  CounterexampleResult result;
  result.psi_image = arc_psi_image(arc, frame);
  result.epsilon = result.psi_image.intervals().front().start;

  result.rows.resize(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    const double theta = grid[i];
    ArcImageKind kind = ArcImageKind::whole_line;
    if (!arc_meets_whole_line(theta, arc, frame)) {
      const SetProjection image = project_set(theta, arc_points, frame);
      kind = image.whole_line          ? ArcImageKind::whole_line
             : image.points.size() == 1 ? ArcImageKind::single
                                        : ArcImageKind::finite;
    }
    result.rows[i] = {theta, kind};
  });

  std::size_t whole = 0;
  bool single_below = true;
  for (const auto& row : result.rows) {
    if (row.kind == ArcImageKind::whole_line) ++whole;
    if (row.theta < result.epsilon && row.kind != ArcImageKind::single) single_below = false;
  }
  result.measured_whole_line_length = static_cast<double>(whole) * kPi / config.n_theta;
  result.single_point_below_epsilon = single_below && result.epsilon > 0.0;

  // Dimension of the projected arc at a thinned set of angles below epsilon.
  const std::size_t stride = std::max<std::size_t>(1, grid.size() / 100);
  for (std::size_t i = 0; i < grid.size() && grid[i] < result.epsilon; i += stride) {
    std::vector<double> coords;
    coords.reserve(arc_points.size());
    for (const auto& q : arc_points) {
      const MultiProjection mp = multivalued_project(grid[i], q, frame);
      if (mp.point) coords.push_back(line_coordinate(*mp.point, grid[i], frame));
    }
    if (coords.empty()) continue;
    const DimensionEstimate est = box_count_1d(coords, auto_epsilons(coords));
    result.max_dimension_below_epsilon = std::max(result.max_dimension_below_epsilon, est.slope);
  }
  return result;
}

void write_counterexample_csv(std::ostream& out, const CounterexampleResult& result) {
  out << "theta,kind\n";
  for (const auto& row : result.rows) {
    out << format_real(row.theta) << ',' << to_string(row.kind) << '\n';
  }
}

}  // namespace curveproj
