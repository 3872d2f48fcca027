// curveproj command-line driver.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curveproj/csv.hpp"
#include "curveproj/dimension.hpp"
#include "curveproj/fractal.hpp"
#include "curveproj/harness.hpp"
#include "curveproj/projection.hpp"
#include "curveproj/sphere_multivalued.hpp"
#include "curveproj/surface.hpp"
#include "curveproj/transversality.hpp"

namespace {

using namespace curveproj;

constexpr int kExitFailure = 1;
constexpr int kExitBadInput = 2;

struct ModelArgs {
  double curvature = -1.0;
  double radius = 2.0;

  void attach(CLI::App& cmd) {
    cmd.add_option("-K,--curvature", curvature, "Gaussian curvature K")->capture_default_str();
    cmd.add_option("-m,--radius", radius, "Domain radius about the base point")
        ->capture_default_str();
  }
  SurfaceModel model() const { return {curvature, radius}; }
};

// Opens `path` for writing, or hands back std::cout for an empty path / "-".
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) : path_(path) {
    if (path.empty() || path == "-") return;
    file_.open(path, std::ios::binary);
    if (!file_) throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void finish() {
    stream().flush();
    if (!stream()) throw std::runtime_error("write failed for '" + label() + "'");
  }

 private:
  std::string label() const { return path_.empty() ? "<stdout>" : path_; }
  std::string path_;
  std::ofstream file_;
};

std::vector<double> parse_epsilons(const std::string& text) {
  std::vector<double> eps;
  if (text.empty() || text == "auto") return eps;
  for (const auto& field : split_csv_line(text)) eps.push_back(parse_real(field));
  return eps;
}

IFSSpec make_fractal(const std::string& name, int depth, double ratio) {
  if (name == "triangle") return IFSSpec::triangle_dust(depth);
  if (name == "cantor") return IFSSpec::cantor(depth);
  if (name == "corner") return IFSSpec::corner_dust(ratio, depth);
  throw std::invalid_argument("unknown fractal '" + name + "' (triangle, cantor, corner)");
}

int cmd_project(const ModelArgs& args, double theta, double r, double phi) {
  const SurfaceModel model = args.model();
  const SurfacePoint q(r, phi);
  model.require_contains(q, "project");
  const ProjectionResult res = signed_projection(GeodesicAngle(theta), q, model);
  std::cout << "signed_coordinate=" << format_real(res.signed_coordinate) << '\n'
            << "transformed=" << format_real(res.transformed) << '\n'
            << "incidence_angle=" << format_real(res.incidence_angle) << '\n'
            << "projected_r=" << format_real(res.projected_point.r()) << '\n'
            << "projected_phi=" << format_real(res.projected_point.phi()) << '\n';
  return 0;
}

int cmd_transversality(const ModelArgs& args, std::size_t n_pairs, std::size_t n_theta,
                       int max_order, std::uint64_t seed, const std::string& out_path) {
  const SurfaceModel model = args.model();
  const TransversalityReport constants = estimate_constants(model, n_pairs, seed);
  TransversalityReport report = check_definition(model, n_pairs, n_theta, max_order, seed);
  report.out_of_bounds += constants.out_of_bounds;
  if (!out_path.empty()) {
    OutputTarget out(out_path);
    write_transversality_csv(out.stream(), report);
    out.finish();
  }
  std::cout << transversality_summary(report) << '\n';
  if (!report.sandwich_holds()) std::cerr << "constant sandwich failed\n";
  return report.passed() ? 0 : kExitFailure;
}

int cmd_sweep(const SweepConfig& config, const std::string& svg_path) {
  const PointCloud cloud = sweep_cloud(config);
  const auto rows = run_sweep(config, cloud);
  OutputTarget out(config.output_path);
  write_sweep_csv(out.stream(), rows);
  out.finish();
  if (!svg_path.empty()) {
    OutputTarget svg(svg_path);
    write_sweep_svg(svg.stream(), rows, cloud.expected_dimension);
    svg.finish();
  }
  return 0;
}

int cmd_counterexample(const CounterexampleConfig& config, const std::string& out_path,
                       const std::string& interval_path) {
  const CounterexampleResult result = run_counterexample(config);
  if (!out_path.empty()) {
    OutputTarget out(out_path);
    write_counterexample_csv(out.stream(), result);
    out.finish();
  }
  if (!interval_path.empty()) {
    OutputTarget out(interval_path);
    write_angle_set_csv(out.stream(), result.psi_image);
    out.finish();
  }
  std::cout << "epsilon=" << format_real(result.epsilon)
            << ", single_point_below_epsilon=" << (result.single_point_below_epsilon ? 1 : 0)
            << ", dimension_below_epsilon=" << format_real(result.max_dimension_below_epsilon)
            << ", psi_interval_length=" << format_real(result.psi_image.total_length())
            << ", whole_line_length=" << format_real(result.measured_whole_line_length) << '\n';
  return result.single_point_below_epsilon ? 0 : kExitFailure;
}

int cmd_dimension(const std::string& in_path, const std::string& eps_text,
                  const std::string& out_path) {
  std::ifstream in(in_path);
  if (!in) throw std::runtime_error("cannot open '" + in_path + "' for reading");
  const auto values = read_real_column(in);
  auto eps = parse_epsilons(eps_text);
  if (eps.empty()) eps = auto_epsilons(values);
  const DimensionEstimate est = box_count_1d(values, eps);
  if (!out_path.empty()) {
    OutputTarget out(out_path);
    write_box_counts_csv(out.stream(), est);
    out.finish();
  }
  std::cout << "dim_estimate=" << format_real(est.slope)
            << ", r_squared=" << format_real(est.r_squared)
            << ", measure_estimate=" << format_real(measure_estimate_1d(values, eps.back()).covered_length)
            << ", n_points=" << values.size() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Projections onto geodesic lines of constant-curvature surfaces"};
  app.require_subcommand(1);

  ModelArgs project_model;
  double theta = 0.0, r = 0.0, phi = 0.0;
  auto* project = app.add_subcommand("project", "Project one point onto L_theta");
  project_model.attach(*project);
  project->add_option("--theta", theta, "Line angle in [0, pi)")->required();
  project->add_option("--r", r, "Geodesic distance from the base point")->required();
  project->add_option("--phi", phi, "Polar angle at the base point")->required();

  ModelArgs trans_model;
  std::size_t n_pairs = 2000, trans_theta = 200;
  int max_order = 4;
  std::uint64_t trans_seed = 1;
  std::string trans_out;
  auto* trans = app.add_subcommand("transversality", "Estimate constants and check transversality");
  trans_model.attach(*trans);
  trans->add_option("--pairs", n_pairs, "Sampled point pairs")->capture_default_str();
  trans->add_option("--n-theta", trans_theta, "Angles per pair")->capture_default_str();
  trans->add_option("--max-order", max_order, "Highest derivative order checked")
      ->capture_default_str();
  trans->add_option("--seed", trans_seed)->capture_default_str();
  trans->add_option("--out", trans_out, "CSV report path");

  ModelArgs sweep_model;
  std::string fractal = "triangle", eps_text = "auto", sweep_out, svg_out;
  int depth = 10;
  double ratio = 0.315;
  std::optional<double> scale;
  SweepConfig sweep_config;
  auto* sweep = app.add_subcommand("sweep", "Dimension and measure of projections over theta");
  sweep_model.attach(*sweep);
  sweep->add_option("--fractal", fractal, "triangle, cantor or corner")->capture_default_str();
  sweep->add_option("--depth", depth, "IFS depth")->capture_default_str();
  sweep->add_option("--ratio", ratio, "Contraction ratio of the corner dust")
      ->capture_default_str();
  sweep->add_option("--scale", scale, "Exponential-map scale (default: fit the domain)");
  sweep->add_option("--n-theta", sweep_config.n_theta)->capture_default_str();
  sweep->add_option("--epsilons", eps_text, "Comma-separated scales or 'auto'")
      ->capture_default_str();
  sweep->add_option("--seed", sweep_config.seed)->capture_default_str();
  sweep->add_flag("--transformed", sweep_config.transformed,
                  "Box-count the transformed projection");
  sweep->add_option("--out", sweep_out, "CSV path (default stdout)");
  sweep->add_option("--svg", svg_out, "SVG plot path");

  CounterexampleConfig counter_config;
  std::string counter_out, interval_out;
  auto* counter = app.add_subcommand("counterexample", "Multivalued projections of an arc on the sphere");
  counter->add_option("--n-theta", counter_config.n_theta)->capture_default_str();
  counter->add_option("--arc-length", counter_config.arc_length)->capture_default_str();
  counter->add_option("--arc-center", counter_config.arc_center)->capture_default_str();
  counter->add_option("--out", counter_out, "Per-angle CSV path");
  counter->add_option("--intervals", interval_out, "Whole-line angle interval CSV path");

  std::string dim_in, dim_eps = "auto", dim_out;
  auto* dimension = app.add_subcommand("dimension", "Box-count a CSV column of reals");
  dimension->add_option("input", dim_in, "CSV file")->required();
  dimension->add_option("--epsilons", dim_eps, "Comma-separated scales or 'auto'")
      ->capture_default_str();
  dimension->add_option("--out", dim_out, "Box-count table CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitBadInput;
  }

  try {
    if (*project) return cmd_project(project_model, theta, r, phi);
    if (*trans) {
      return cmd_transversality(trans_model, n_pairs, trans_theta, max_order, trans_seed, trans_out);
    }
    if (*sweep) {
      sweep_config.curvature = sweep_model.curvature;
      sweep_config.domain_radius = sweep_model.radius;
      sweep_config.fractal = make_fractal(fractal, depth, ratio);
      sweep_config.scale = scale;
      sweep_config.epsilons = parse_epsilons(eps_text);
      sweep_config.output_path = sweep_out;
      return cmd_sweep(sweep_config, svg_out);
    }
    if (*counter) return cmd_counterexample(counter_config, counter_out, interval_out);
    if (*dimension) return cmd_dimension(dim_in, dim_eps, dim_out);
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitBadInput;
}
