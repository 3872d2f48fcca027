#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "curveproj/dimension.hpp"
#include "curveproj/fractal.hpp"
#include "curveproj/projection.hpp"
#include "curveproj/random.hpp"
#include "curveproj/sphere_multivalued.hpp"

namespace {

using namespace curveproj;

TEST(SphereFrame, DefaultIsOrthonormal) {
  const SphereFrame frame;
  EXPECT_EQ(frame.base().y(), 1.0);
  EXPECT_EQ(frame.e1().x(), 1.0);
  EXPECT_NEAR(frame.base().dot(frame.e1()), 0.0, 1e-15);
  EXPECT_NEAR(frame.base().dot(frame.e2()), 0.0, 1e-15);
  EXPECT_NEAR(frame.e1().dot(frame.e2()), 0.0, 1e-15);
  // The poles of L_0 are the two ends of the z-axis.
  EXPECT_NEAR(std::abs(frame.pole(0.0).z()), 1.0, 1e-15);
  EXPECT_THROW(SphereFrame(AmbientPoint(0, 1, 0), AmbientPoint(0, 1, 1)), std::invalid_argument);
  EXPECT_THROW(AmbientPoint(0, 0, 0), std::invalid_argument);
}

TEST(SphereFrame, ChartRoundTripAndDistance) {
  const SphereFrame frame(AmbientPoint(1, 2, 3), AmbientPoint(3, 0, -1));
  SampleStream rng(31);
  for (int i = 0; i < 500; ++i) {
    const SurfacePoint q(rng.uniform(0.01, 3.0), rng.uniform(0.0, kTwoPi));
    const AmbientPoint a = frame.from_chart(q);
    EXPECT_NEAR(great_circle_distance(a, frame.base()), q.r(), 1e-12);
    const SurfacePoint back = frame.to_chart(a);
    EXPECT_NEAR(back.r(), q.r(), 1e-12);
    EXPECT_NEAR(std::remainder(back.phi() - q.phi(), kTwoPi), 0.0, 1e-11);
  }
}

TEST(GreatCircleDistance, AccurateAtBothEnds) {
  const AmbientPoint a(1, 0, 0);
  EXPECT_NEAR(great_circle_distance(a, AmbientPoint(1, 1e-9, 0)), 1e-9, 1e-20);
  EXPECT_NEAR(great_circle_distance(a, AmbientPoint(-1, 1e-9, 0)), kPi - 1e-9, 1e-15);
  EXPECT_NEAR(great_circle_distance(a, -a), kPi, 1e-15);
}

TEST(MultivaluedProject, PolesProjectToWholeLine) {
  const SphereFrame frame;
  for (double theta : {0.0, 0.4, 2.9}) {
    EXPECT_EQ(multivalued_project(theta, frame.pole(theta), frame).kind, ProjectionKind::whole_line);
    EXPECT_EQ(multivalued_project(theta, -frame.pole(theta), frame).kind, ProjectionKind::whole_line);
    EXPECT_FALSE(multivalued_project(theta, frame.pole(theta), frame).point.has_value());
  }
}

TEST(MultivaluedProject, SingletonIsClosestPointOfGreatCircle) {
  const SphereFrame frame;
  SampleStream rng(32);
  for (int i = 0; i < 200; ++i) {
    const double theta = rng.uniform(0.0, kPi);
    const AmbientPoint q(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    const MultiProjection mp = multivalued_project(theta, q, frame);
    ASSERT_EQ(mp.kind, ProjectionKind::singleton);
    const double best = great_circle_distance(q, *mp.point);
    // Scan L_theta: p cos t + v_theta sin t.
    const AmbientPoint v = frame.direction(theta);
    const AmbientPoint& p = frame.base();
    for (int k = 0; k < 2000; ++k) {
      const double t = kTwoPi * k / 2000;
      const AmbientPoint on(p.x() * std::cos(t) + v.x() * std::sin(t),
                            p.y() * std::cos(t) + v.y() * std::sin(t),
                            p.z() * std::cos(t) + v.z() * std::sin(t));
      EXPECT_LE(best, great_circle_distance(q, on) + 1e-12);
    }
  }
}

TEST(MultivaluedProject, AgreesWithChartProjectionOnHemisphere) {
  const SphereFrame frame;
  const SurfaceModel model = SurfaceModel::spherical(1.5);
  SampleStream rng(33);
  for (int i = 0; i < 500; ++i) {
    const GeodesicAngle theta(rng.uniform(0.0, kPi));
    const SurfacePoint q = sample_domain_point(model, rng);
    const double t = signed_projection(theta, q, model).signed_coordinate;
    const MultiProjection mp = multivalued_project(theta.theta(), frame.from_chart(q), frame);
    ASSERT_TRUE(mp.point);
    EXPECT_NEAR(great_circle_distance(*mp.point, frame.from_chart(point_on_line(theta, t))), 0.0, 1e-10);
  }
}

TEST(Psi, InvertsPoleMapAndIsAntipodallyEven) {
  const SphereFrame frame;
  EXPECT_EQ(psi(frame.pole(0.0), frame), 0.0);
  SampleStream rng(34);
  for (int i = 0; i < 1000; ++i) {
    const double theta = rng.uniform(0.0, kPi);
    EXPECT_NEAR(psi(frame.pole(theta), frame), theta, 1e-12);
    const AmbientPoint q = frame.polar_circle_point(rng.uniform(-10.0, 10.0));
    const double a = psi(q, frame);
    EXPECT_GE(a, 0.0);
    EXPECT_LT(a, kPi);
    EXPECT_NEAR(std::remainder(psi(-q, frame) - a, kPi), 0.0, 1e-12);
    EXPECT_NEAR(q.dot(frame.direction(a)), 0.0, 1e-12);
  }
  EXPECT_THROW(psi(frame.base(), frame), DomainError);
}

TEST(Psi, WholeLineOccursInExactlyOneGridCell) {
  // For q on M, <q, v_theta> changes sign exactly once over [0, pi].
  const SphereFrame frame;
  const int n = 100'000;
  SampleStream rng(35);
  for (int trial = 0; trial < 20; ++trial) {
    const AmbientPoint q = frame.polar_circle_point(rng.uniform(0.0, kTwoPi));
    int cells = 0;
    int hit = -1;
    double f_lo = q.dot(frame.direction(0.0));
    for (int i = 0; i < n; ++i) {
      const double f_hi = q.dot(frame.direction(kPi * (i + 1) / n));
      if (f_lo == 0.0 || f_lo * f_hi < 0.0) {
        ++cells;
        hit = i;
      }
      f_lo = f_hi;
    }
    EXPECT_EQ(cells, 1);
    const double a = psi(q, frame);
    EXPECT_LE(kPi * hit / n, a + 1e-12);
    EXPECT_GE(kPi * (hit + 1) / n, a - 1e-12);
  }
}

TEST(AngleSet, MergingAndComplement) {
  const AngleSet set = AngleSet::from_angles({0.1, 0.11, 0.12, 2.0, kPi + 0.5}, 0.015);
  ASSERT_EQ(set.intervals().size(), 3u);
  EXPECT_NEAR(set.intervals()[0].start, 0.1, 1e-15);
  EXPECT_NEAR(set.intervals()[0].end, 0.12, 1e-15);
  EXPECT_NEAR(set.intervals()[1].start, 0.5, 1e-15);
  EXPECT_TRUE(set.contains(0.115));
  EXPECT_FALSE(set.contains(1.0));
  const AngleSet gaps = set.complement();
  EXPECT_NEAR(set.total_length() + gaps.total_length(), kPi, 1e-15);
  EXPECT_TRUE(gaps.contains(1.0));
  EXPECT_THROW(AngleSet({{0.5, 0.4}}), std::invalid_argument);
  EXPECT_THROW(AngleSet({{0.1, 0.5}, {0.4, 0.6}}), std::invalid_argument);
  EXPECT_THROW(AngleSet({{0.1, 3.5}}), std::invalid_argument);
  EXPECT_NEAR(AngleSet().complement().total_length(), kPi, 0.0);
}

TEST(ExceptionalSets, CantorSubsetOfPolarCircle) {
  const SphereFrame frame;
  std::vector<AmbientPoint> set;
  for (const auto& p : generate_attractor(IFSSpec::cantor(12))) {
    const double s = 0.3 + 0.8 * p.x;
    set.push_back(frame.polar_circle_point(s));
  }
  const ExceptionalSets sets = exceptional_sets(set, 100'000, frame);
  EXPECT_NEAR(sets.whole_line.total_length() + sets.regular.total_length(), kPi, 1e-12);
  // psi is an isometry of M onto the angle circle, so the exceptional
  // angles inherit the Cantor dimension.
  std::vector<double> angles;
  for (const auto& q : set) {
    const double a = psi(q, frame);
    angles.push_back(a);
    EXPECT_TRUE(sets.whole_line.contains(a, 1e-12));
  }
  const double slope = box_count_1d(angles, auto_epsilons(angles)).slope;
  EXPECT_NEAR(slope, std::log(2.0) / std::log(3.0), 0.06);
  // A Cantor set of length 0.8 at depth 12 covers (2/3)^12 of it.
  EXPECT_LT(sets.whole_line.total_length(), 0.1);
  EXPECT_THROW(exceptional_sets(set, 0, frame), std::invalid_argument);
}

TEST(ProjectSet, ArcAwayFromPolesCollapses) {
  const SphereFrame frame;
  const PolarArc arc{-0.2, 0.4};
  const auto points = arc.sample(51, frame);
  const SetProjection small = project_set(0.3, points, frame);
  EXPECT_FALSE(small.whole_line);
  ASSERT_EQ(small.points.size(), 1u);
  // The collapsed image is +-v_theta.
  EXPECT_NEAR(std::abs(small.points[0].dot(frame.direction(0.3))), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(small.points[0].dot(frame.base())), 0.0, 1e-12);
  // theta = pi/2 lies in psi(arc) and the midpoint e1 is the pole.
  EXPECT_TRUE(project_set(kPi / 2, points, frame).whole_line);
}

TEST(PolarArc, WholeLineTestMatchesPsiImage) {
  const SphereFrame frame;
  for (const PolarArc arc : {PolarArc{-0.2, 0.4}, PolarArc{1.4, 0.5}, PolarArc{3.0, 2.0}}) {
    const AngleSet image = arc_psi_image(arc, frame);
    EXPECT_NEAR(image.total_length(), arc.length, 1e-12);
    for (int i = 0; i < 1000; ++i) {
      const double theta = kPi * (i + 0.5) / 1000;
      EXPECT_EQ(arc_meets_whole_line(theta, arc, frame), image.contains(theta, 1e-12)) << theta;
    }
  }
  EXPECT_EQ(arc_psi_image(PolarArc{1.4, 0.5}, frame).intervals().size(), 2u);
  EXPECT_THROW(arc_psi_image(PolarArc{0.0, 4.0}, frame), std::invalid_argument);
  EXPECT_THROW(PolarArc{}.sample(1, frame), std::invalid_argument);
}

TEST(AngleSetCsv, Format) {
  std::stringstream out;
  write_angle_set_csv(out, AngleSet({{0.25, 0.5}}));
  EXPECT_EQ(out.str(), "start,end\n0.25,0.5\n");
}

}  // namespace
