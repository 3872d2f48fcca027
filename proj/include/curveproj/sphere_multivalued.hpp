#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "curveproj/surface.hpp"

namespace curveproj {

/// Unit vector in R^3.
class AmbientPoint {
 public:
  AmbientPoint() = default;
  /// Normalizes (x, y, z); throws std::invalid_argument for a zero vector.
  AmbientPoint(double x, double y, double z);

  double x() const { return x_; }
  double y() const { return y_; }
  double z() const { return z_; }

  double dot(const AmbientPoint& o) const { return x_ * o.x_ + y_ * o.y_ + z_ * o.z_; }
  /// Cross product, renormalized. Requires non-parallel inputs.
  AmbientPoint cross(const AmbientPoint& o) const;
  AmbientPoint operator-() const;

 private:
  double x_ = 0.0;
  double y_ = 0.0;
  double z_ = 1.0;
};

/// Great-circle distance on the unit sphere.
double great_circle_distance(const AmbientPoint& a, const AmbientPoint& b);

/// Base point p with reference tangent v_0. The second frame vector
/// p x v_0 completes a positively oriented tangent basis, so that
/// v_theta = cos(theta) v_0 + sin(theta) (p x v_0).
///
/// The default frame puts p on the positive y-axis and L_0 on the equator
/// z = 0; L_theta is the equator rotated about the y-axis by theta, and the
/// north pole N = (0, 0, 1) is one of the two points whose projection onto
/// L_0 is the whole line.
class SphereFrame {
 public:
  SphereFrame();
  SphereFrame(const AmbientPoint& base, const AmbientPoint& v0);

  const AmbientPoint& base() const { return base_; }
  const AmbientPoint& e1() const { return e1_; }
  const AmbientPoint& e2() const { return e2_; }

  /// Unit tangent of L_theta at p.
  AmbientPoint direction(double theta) const;
  /// q_theta = p x v_theta, the pole of L_theta lying on M.
  AmbientPoint pole(double theta) const;
  /// Point of M = {q : <q, p> = 0} at arc parameter s from e1 towards e2.
  AmbientPoint polar_circle_point(double s) const;

  /// Exponential map at p for the unit sphere: polar chart -> ambient.
  AmbientPoint from_chart(const SurfacePoint& q) const;
  /// Inverse chart; valid for points other than -p.
  SurfacePoint to_chart(const AmbientPoint& q) const;

 private:
  AmbientPoint base_;
  AmbientPoint e1_;
  AmbientPoint e2_;
};

inline constexpr double kOrthogonalityTolerance = 1e-12;

enum class ProjectionKind { singleton, whole_line };

struct MultiProjection {
  ProjectionKind kind = ProjectionKind::singleton;
  std::optional<AmbientPoint> point;  ///< present iff singleton
};

/// Closest points of the full great circle L_theta to q: the whole circle
/// when q is orthogonal to it (q = +-q_theta), otherwise the normalized
/// projection of q onto span(p, v_theta).
MultiProjection multivalued_project(double theta, const AmbientPoint& q,
                                    const SphereFrame& frame = {});

/// The unique theta in [0, pi) with <q, v_theta> = 0 for q on M.
/// psi(q) == psi(-q). Throws DomainError when q is off M.
double psi(const AmbientPoint& q, const SphereFrame& frame = {});

/// Disjoint, sorted closed sub-intervals of [0, pi).
class AngleSet {
 public:
  struct Interval {
    double start = 0.0;
    double end = 0.0;
    double length() const { return end - start; }
  };

  AngleSet() = default;
  explicit AngleSet(std::vector<Interval> intervals);

  /// Sorts the angles and merges neighbours closer than `resolution`.
  static AngleSet from_angles(std::vector<double> angles, double resolution);

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool contains(double theta, double tolerance = 0.0) const;
  double total_length() const;
  /// Closure of [0, pi) minus this set.
  AngleSet complement() const;

 private:
  std::vector<Interval> intervals_;
};

struct ExceptionalSets {
  /// Angles where P_theta(A) is the whole line: psi of A.
  AngleSet whole_line;
  /// The rest of [0, pi).
  AngleSet regular;
};

/// A must lie on M. Angles are merged at resolution pi / n_theta.
ExceptionalSets exceptional_sets(std::span<const AmbientPoint> set, int n_theta,
                                 const SphereFrame& frame = {});

/// P_theta applied to a finite set: whole line if any element is orthogonal
/// to L_theta, otherwise the distinct image points (merged within 1e-9).
struct SetProjection {
  bool whole_line = false;
  std::vector<AmbientPoint> points;
};

SetProjection project_set(double theta, std::span<const AmbientPoint> set,
                          const SphereFrame& frame = {});

/// Connected arc of M: parameters s in [start, start + length].
struct PolarArc {
  double start = 0.0;
  double length = 0.0;

  /// `samples` evenly spaced points including both endpoints.
  std::vector<AmbientPoint> sample(int samples, const SphereFrame& frame = {}) const;
};

/// Whether theta belongs to psi of the arc, decided from the sign of
/// <q, v_theta> at the arc endpoints (it changes sign at most once along an
/// arc shorter than pi).
bool arc_meets_whole_line(double theta, const PolarArc& arc, const SphereFrame& frame = {});

/// Exact psi-image of an arc shorter than pi, split at the wrap point of
/// [0, pi) when necessary.
AngleSet arc_psi_image(const PolarArc& arc, const SphereFrame& frame = {});

/// CSV with header `start,end`.
void write_angle_set_csv(std::ostream& out, const AngleSet& set);

}  // namespace curveproj
