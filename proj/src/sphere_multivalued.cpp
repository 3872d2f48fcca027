#include "curveproj/sphere_multivalued.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "curveproj/csv.hpp"

namespace curveproj {

AmbientPoint::AmbientPoint(double x, double y, double z) {
  const double norm = std::sqrt(x * x + y * y + z * z);
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("AmbientPoint: zero or non-finite vector");
  }
  x_ = x / norm;
  y_ = y / norm;
  z_ = z / norm;
}

AmbientPoint AmbientPoint::cross(const AmbientPoint& o) const {
  return {y_ * o.z_ - z_ * o.y_, z_ * o.x_ - x_ * o.z_, x_ * o.y_ - y_ * o.x_};
}

AmbientPoint AmbientPoint::operator-() const {
  AmbientPoint out = *this;
  out.x_ = -x_;
  out.y_ = -y_;
  out.z_ = -z_;
  return out;
}

double great_circle_distance(const AmbientPoint& a, const AmbientPoint& b) {
  // |a x b| and a.b through atan2 stay accurate at both ends of [0, pi].
  const double cx = a.y() * b.z() - a.z() * b.y();
  const double cy = a.z() * b.x() - a.x() * b.z();
  const double cz = a.x() * b.y() - a.y() * b.x();
  return std::atan2(std::sqrt(cx * cx + cy * cy + cz * cz), a.dot(b));
}

SphereFrame::SphereFrame() : SphereFrame({0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}) {}

SphereFrame::SphereFrame(const AmbientPoint& base, const AmbientPoint& v0)
    : base_(base), e1_(v0) {
  if (std::abs(base_.dot(e1_)) > 1e-12) {
    throw std::invalid_argument("SphereFrame: reference direction is not tangent at the base");
  }
  e2_ = base_.cross(e1_);
}

AmbientPoint SphereFrame::direction(double theta) const {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c * e1_.x() + s * e2_.x(), c * e1_.y() + s * e2_.y(), c * e1_.z() + s * e2_.z()};
}

AmbientPoint SphereFrame::pole(double theta) const { return base_.cross(direction(theta)); }

AmbientPoint SphereFrame::polar_circle_point(double s) const { return direction(s); }

AmbientPoint SphereFrame::from_chart(const SurfacePoint& q) const {
  const AmbientPoint v = direction(q.phi());
  const double c = std::cos(q.r());
  const double s = std::sin(q.r());
  return {c * base_.x() + s * v.x(), c * base_.y() + s * v.y(), c * base_.z() + s * v.z()};
}

SurfacePoint SphereFrame::to_chart(const AmbientPoint& q) const {
  const double along = q.dot(base_);
  const double a = q.dot(e1_);
  const double b = q.dot(e2_);
  return {std::atan2(std::hypot(a, b), along), std::atan2(b, a)};
}

MultiProjection multivalued_project(double theta, const AmbientPoint& q, const SphereFrame& frame) {
  const AmbientPoint& p = frame.base();
  const AmbientPoint v = frame.direction(theta);
  const double qp = q.dot(p);
  const double qv = q.dot(v);
  if (std::abs(qp) <= kOrthogonalityTolerance && std::abs(qv) <= kOrthogonalityTolerance) {
    return {ProjectionKind::whole_line, std::nullopt};
  }
  return {ProjectionKind::singleton, AmbientPoint(qp * p.x() + qv * v.x(), qp * p.y() + qv * v.y(),
                                                  qp * p.z() + qv * v.z())};
}

double psi(const AmbientPoint& q, const SphereFrame& frame) {
  const double off = q.dot(frame.base());
  if (std::abs(off) > kOrthogonalityTolerance) {
    std::ostringstream msg;
    msg << "psi: point is not on the polar circle (<q, p> = " << off << ")";
    throw DomainError(msg.str());
  }
  // <q, v_theta> = cos(theta) a + sin(theta) b vanishes at atan2(b, a) - pi/2 (mod pi).
  return reduce_angle(std::atan2(q.dot(frame.e2()), q.dot(frame.e1())) - 0.5 * kPi, kPi);
}

AngleSet::AngleSet(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  std::sort(intervals_.begin(), intervals_.end(),
            [](const Interval& a, const Interval& b) { return a.start < b.start; });
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const auto& iv = intervals_[i];
    if (iv.start < 0.0 || iv.end > kPi || iv.end < iv.start) {
      throw std::invalid_argument("AngleSet: interval outside [0, pi]");
    }
    if (i > 0 && iv.start < intervals_[i - 1].end) {
      throw std::invalid_argument("AngleSet: intervals overlap");
    }
  }
}

AngleSet AngleSet::from_angles(std::vector<double> angles, double resolution) {
  for (double& a : angles) a = reduce_angle(a, kPi);
  std::sort(angles.begin(), angles.end());
  std::vector<Interval> merged;
  for (double a : angles) {
    if (!merged.empty() && a - merged.back().end <= resolution) {
      merged.back().end = a;
    } else {
      merged.push_back({a, a});
    }
  }
  return AngleSet(std::move(merged));
}

bool AngleSet::contains(double theta, double tolerance) const {
  return std::any_of(intervals_.begin(), intervals_.end(), [&](const Interval& iv) {
    return iv.start - tolerance <= theta && theta <= iv.end + tolerance;
  });
}

double AngleSet::total_length() const {
  double total = 0.0;
  for (const auto& iv : intervals_) total += iv.length();
  return total;
}

AngleSet AngleSet::complement() const {
  std::vector<Interval> gaps;
  double cursor = 0.0;
  for (const auto& iv : intervals_) {
    if (iv.start > cursor) gaps.push_back({cursor, iv.start});
    cursor = std::max(cursor, iv.end);
  }
  if (cursor < kPi) gaps.push_back({cursor, kPi});
  return AngleSet(std::move(gaps));
}

ExceptionalSets exceptional_sets(std::span<const AmbientPoint> set, int n_theta,
                                 const SphereFrame& frame) {
  if (n_theta < 1) throw std::invalid_argument("exceptional_sets: n_theta must be >= 1");
  std::vector<double> angles;
  angles.reserve(set.size());
  for (const auto& q : set) angles.push_back(psi(q, frame));
  ExceptionalSets out;
  out.whole_line = AngleSet::from_angles(std::move(angles), kPi / n_theta);
  out.regular = out.whole_line.complement();
  return out;
}

SetProjection project_set(double theta, std::span<const AmbientPoint> set,
                          const SphereFrame& frame) {
  constexpr double kMergeDistance = 1e-9;
  SetProjection out;
  for (const auto& q : set) {
    const MultiProjection mp = multivalued_project(theta, q, frame);
    if (mp.kind == ProjectionKind::whole_line) {
      out.whole_line = true;
      out.points.clear();
      return out;
    }
    const AmbientPoint& image = *mp.point;
    const bool seen = std::any_of(out.points.begin(), out.points.end(), [&](const AmbientPoint& p) {
      return great_circle_distance(p, image) <= kMergeDistance;
    });
    if (!seen) out.points.push_back(image);
  }
  return out;
}

std::vector<AmbientPoint> PolarArc::sample(int samples, const SphereFrame& frame) const {
  if (samples < 2) throw std::invalid_argument("PolarArc::sample: need at least 2 samples");
  std::vector<AmbientPoint> out;
  out.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    out.push_back(frame.polar_circle_point(start + length * i / (samples - 1)));
  }
  return out;
}

bool arc_meets_whole_line(double theta, const PolarArc& arc, const SphereFrame& frame) {
  if (!(arc.length >= 0.0 && arc.length < kPi)) {
    throw std::invalid_argument("arc_meets_whole_line: arc length must lie in [0, pi)");
  }
  const AmbientPoint v = frame.direction(theta);
  const double head = frame.polar_circle_point(arc.start).dot(v);
  const double tail = frame.polar_circle_point(arc.start + arc.length).dot(v);
  return head * tail <= 0.0;
}

AngleSet arc_psi_image(const PolarArc& arc, const SphereFrame& frame) {
  if (!(arc.length >= 0.0 && arc.length < kPi)) {
    throw std::invalid_argument("arc_psi_image: arc length must lie in [0, pi)");
  }
  const double lo = psi(frame.polar_circle_point(arc.start), frame);
  const double hi = lo + arc.length;
  if (hi <= kPi) return AngleSet({{lo, hi}});
  return AngleSet({{0.0, hi - kPi}, {lo, kPi}});
}

void write_angle_set_csv(std::ostream& out, const AngleSet& set) {
  out << "start,end\n";
  for (const auto& iv : set.intervals()) {
    out << format_real(iv.start) << ',' << format_real(iv.end) << '\n';
  }
}

}  // namespace curveproj
