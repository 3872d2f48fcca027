#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "curveproj/dimension.hpp"
#include "curveproj/fractal.hpp"
#include "curveproj/sphere_multivalued.hpp"
#include "curveproj/surface.hpp"
#include "curveproj/transversality.hpp"

namespace curveproj {

/// Open angle grid pi (i + 1/2) / n, i = 0..n-1.
std::vector<double> open_theta_grid(int n_theta);

struct SweepConfig {
  double curvature = -1.0;
  double domain_radius = 2.0;
  IFSSpec fractal = IFSSpec::triangle_dust(10);
  /// Exponential-map scale; unset means fit_scale(...) with fill 0.95.
  std::optional<double> scale;
  int n_theta = 180;
  /// Box-counting scales; empty means auto_epsilons per angle.
  std::vector<double> epsilons;
  std::uint64_t seed = 0;
  std::string output_path;
  /// Count boxes on the transformed projection instead of the signed one.
  bool transformed = false;
};

struct SweepRow {
  double theta = 0.0;
  double dim_estimate = 0.0;
  double r_squared = 0.0;
  /// Covered length at the finest scale of the ladder.
  double measure_estimate = 0.0;
  std::size_t n_points = 0;
};

/// Throws std::invalid_argument for n_theta < 8 or an invalid model.
void validate(const SweepConfig& config);

/// Builds the point cloud described by the config.
PointCloud sweep_cloud(const SweepConfig& config);

/// Projects the cloud at every grid angle and estimates dimension and
/// covered length. Rows come back in grid order whatever the thread count.
std::vector<SweepRow> run_sweep(const SweepConfig& config, const PointCloud& cloud);
std::vector<SweepRow> run_sweep(const SweepConfig& config);

/// Header `theta,dim_estimate,r_squared,measure_estimate,n_points`, LF endings.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// 800x400 SVG: polyline of dim_estimate against theta and a horizontal
/// reference line at the expected dimension.
void write_sweep_svg(std::ostream& out, const std::vector<SweepRow>& rows,
                     double expected_dimension);

/// `field,value` rows followed by one `violation` row per failed sample.
void write_transversality_csv(std::ostream& out, const TransversalityReport& report);

/// `c_hat=..., C_hat=..., c_analytic=..., C_analytic=..., violations=N`.
std::string transversality_summary(const TransversalityReport& report);

enum class ArcImageKind { single, finite, whole_line };

const char* to_string(ArcImageKind kind);

struct CounterexampleConfig {
  int n_theta = 10'000;
  double arc_length = 0.4;
  /// Arc parameter of the arc midpoint on M; 0 is farthest from the poles
  /// +-q_0 of the reference line.
  double arc_center = 0.0;
  /// Points sampled along the arc when classifying P_theta(I).
  int arc_samples = 64;
};

struct CounterexampleScanRow {
  double theta = 0.0;
  ArcImageKind kind = ArcImageKind::single;
};

struct CounterexampleResult {
  std::vector<CounterexampleScanRow> rows;
  /// Exact psi-image of the arc.
  AngleSet psi_image;
  /// Grid cells classified whole_line, times pi / n_theta.
  double measured_whole_line_length = 0.0;
  /// Upper end of the leading angle range (0, epsilon) free of the
  /// whole-line locus.
  double epsilon = 0.0;
  /// Every grid angle in (0, epsilon) maps the arc to one point.
  bool single_point_below_epsilon = false;
  /// Largest box-counting slope of the projected arc over grid angles in
  /// (0, epsilon).
  double max_dimension_below_epsilon = 0.0;
};

CounterexampleResult run_counterexample(const CounterexampleConfig& config,
                                        const SphereFrame& frame = {});

/// Signed arc-length coordinate along the full great circle L_theta.
double line_coordinate(const AmbientPoint& on_line, double theta, const SphereFrame& frame = {});

/// Header `theta,kind`.
void write_counterexample_csv(std::ostream& out, const CounterexampleResult& result);

}  // namespace curveproj
