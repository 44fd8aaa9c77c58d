#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "knotwork/geometry.hpp"

using namespace knotwork;

TEST_CASE("stereographic projections") {
  Vec2 origin = stereo2_project({0, 0, -1});
  CHECK(std::abs(origin[0]) < 1e-15);
  CHECK(std::abs(origin[1]) < 1e-15);
  Vec2 equator = stereo2_project({1, 0, 0});
  CHECK(std::abs(equator[0] - 1) < 1e-15);
  CHECK_THROWS_AS(stereo2_project({0, 0, 1}), std::domain_error);
  CHECK_THROWS_AS(stereo3_project({0, 0, 0, 1}), std::domain_error);

  std::mt19937 rng(9);
  std::uniform_real_distribution<double> uni(-4, 4);
  for (int i = 0; i < 1000; ++i) {
    Vec2 u{uni(rng), uni(rng)};
    Vec3 s = stereo2_invert(u);
    CHECK(std::abs(dot(s, s) - 1.0) < 1e-12);
    Vec2 back = stereo2_project(s);
    CHECK(std::hypot(back[0] - u[0], back[1] - u[1]) < 1e-10);

    Vec3 v{uni(rng), uni(rng), uni(rng)};
    Vec4 s4 = stereo3_invert(v);
    CHECK(std::abs(norm(s4) - 1.0) < 1e-12);
    Vec3 back3 = stereo3_project(s4);
    CHECK(norm(back3 - v) < 1e-10);
  }
}

TEST_CASE("hopf map values and invariance") {
  Vec3 north = hopf_map({Complex(1, 0), Complex(0, 0)});
  CHECK(norm(north - Vec3{0, 0, 1}) < 1e-15);
  Vec3 south = hopf_map({Complex(0, 0), Complex(1, 0)});
  CHECK(norm(south - Vec3{0, 0, -1}) < 1e-15);
  const double r = 1 / std::sqrt(2.0);
  Vec3 equator = hopf_map({Complex(r, 0), Complex(r, 0)});
  CHECK(norm(equator - Vec3{1, 0, 0}) < 1e-12);

  CHECK_THROWS_AS(hopf_map({Complex(1, 0), Complex(1, 0)}),
                  std::invalid_argument);

  std::mt19937 rng(10);
  std::uniform_real_distribution<double> uni(-1, 1);
  for (int i = 0; i < 200; ++i) {
    Vec4 x{uni(rng), uni(rng), uni(rng), uni(rng)};
    double n = norm(x);
    if (n < 0.1) continue;
    ComplexPair p = ComplexPair::from_point({x[0] / n, x[1] / n, x[2] / n, x[3] / n});
    Vec3 m = hopf_map(p);
    CHECK(std::abs(norm(m) - 1.0) < 1e-12);
    double phase = uni(rng) * 3;
    ComplexPair q{std::polar(1.0, phase) * p.z1, std::polar(1.0, phase) * p.z2};
    CHECK(norm(hopf_map(q) - m) < 1e-12);
  }
}

TEST_CASE("hopf fibers project to the base and stay disjoint") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> uni(-1, 1);
  Vec3 prev_base{0, 0, 1};
  SampledCurve prev = hopf_fiber(prev_base, 48);
  for (int i = 0; i < 20; ++i) {
    Vec3 base{uni(rng), uni(rng), uni(rng)};
    double n = norm(base);
    if (n < 0.2) continue;
    base = {base[0] / n, base[1] / n, base[2] / n};
    SampledCurve fiber = hopf_fiber(base, 48);
    CHECK(fiber.closed);
    CHECK(norm(fiber.points.front() - fiber.points.back()) < 1e-12);
    for (const Vec4& p : fiber.points)
      CHECK(norm(hopf_map(ComplexPair::from_point(p)) - base) < 1e-9);
    // Distinct fibers never meet.
    double min_dist = 1e9;
    for (const Vec4& p : fiber.points)
      for (const Vec4& q : prev.points)
        min_dist = std::min(min_dist, norm(p - q));
    CHECK(min_dist > 1e-3);
    prev = fiber;
    prev_base = base;
  }
  CHECK_THROWS_AS(hopf_fiber({0, 0, 2}, 16), std::invalid_argument);
  CHECK_THROWS_AS(hopf_fiber({0, 0, 1}, 2), std::invalid_argument);
}

TEST_CASE("exceptional fiber over the north pole") {
  SampledCurve fiber = hopf_fiber({0, 0, 1}, 16);
  for (const Vec4& p : fiber.points) {
    CHECK(std::abs(std::hypot(p[0], p[1]) - 1.0) < 1e-12);
    CHECK(std::abs(p[2]) < 1e-12);
    CHECK(std::abs(p[3]) < 1e-12);
  }
}

TEST_CASE("torus fibers stay on their Clifford torus and close up") {
  const double r = 1 / std::sqrt(2.0);
  ComplexPair start{Complex(r, 0), Complex(r, 0)};
  SampledCurve tk = torus_fiber(2, 3, start, 400);
  for (const Vec4& p : tk.points)
    CHECK(std::abs(std::hypot(p[0], p[1]) - r) < 1e-9);
  CHECK(norm(tk.points.front() - tk.points.back()) < 1e-9);

  // (1,1) is a plain Hopf fiber: it projects to a single base point.
  SampledCurve h = torus_fiber(1, 1, start, 64);
  Vec3 base = hopf_map(start);
  for (const Vec4& p : h.points)
    CHECK(norm(hopf_map(ComplexPair::from_point(p)) - base) < 1e-9);

  CHECK_THROWS_AS(torus_fiber(2, 3, {Complex(1, 0), Complex(0, 0)}, 64),
                  std::invalid_argument);
}

TEST_CASE("gauss linking values") {
  SampledCurve f1 = stereo_project_curve(hopf_fiber({1, 0, 0}, 512));
  SampledCurve f2 = stereo_project_curve(hopf_fiber({-1, 0, 0}, 512));
  CHECK(std::abs(std::abs(gauss_linking(f1, f2)) - 1.0) < 0.01);

  auto circle = [](Vec3 center, bool xz, int samples) {
    SampledCurve c;
    c.dim = 3;
    c.closed = true;
    for (int k = 0; k <= samples; ++k) {
      double t = 2 * std::numbers::pi * k / samples;
      Vec3 p = xz ? Vec3{center[0] + std::cos(t), center[1],
                        center[2] + std::sin(t)}
                  : Vec3{center[0] + std::cos(t), center[1] + std::sin(t),
                        center[2]};
      c.params.push_back(t / (2 * std::numbers::pi));
      c.points.push_back({p[0], p[1], p[2], 0});
    }
    return c;
  };
  // Hopf-link configuration: unit circles in orthogonal planes, one
  // passing through the other's center.
  CHECK(std::abs(std::abs(gauss_linking(circle({0, 0, 0}, false, 512),
                                        circle({1, 0, 0}, true, 512))) -
                 1.0) < 0.01);
  // Far-apart rings are unlinked.
  CHECK(std::abs(gauss_linking(circle({0, 0, 0}, false, 256),
                               circle({10, 0, 0}, false, 256))) < 0.01);
  // Symmetry and resampling stability.
  CHECK(std::abs(gauss_linking(f1, f2) - gauss_linking(f2, f1)) < 1e-12);
  SampledCurve f2_coarse = stereo_project_curve(hopf_fiber({-1, 0, 0}, 307));
  CHECK(std::abs(gauss_linking(f1, f2) - gauss_linking(f1, f2_coarse)) < 0.01);

  // Intersecting curves are rejected.
  CHECK_THROWS_AS(gauss_linking(circle({0, 0, 0}, false, 64),
                                circle({1e-9, 0, 0}, false, 64)),
                  std::invalid_argument);
  CHECK_THROWS_AS(gauss_linking(f1, hopf_fiber({-1, 0, 0}, 64)),
                  std::invalid_argument);
}

TEST_CASE("seifert tube map") {
  CHECK(std::abs(seifert_tube_map({1, 0, 0, 1}, 1) - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(seifert_tube_map({1, 0, 1.0 / 6, 1}, 3) - Complex(-1, 0)) <
        1e-12);
  CHECK_THROWS_AS(seifert_tube_map({1, 0, 0, 1}, 0), std::invalid_argument);

  // Winding: with lambda fixed, mu sweeping [0,1] winds the argument
  // exactly n times.
  for (int n : {1, 2, 5}) {
    const int steps = 600;
    double total = 0;
    Complex prev = seifert_tube_map({1, 0.25, 0, 1}, n);
    for (int k = 1; k <= steps; ++k) {
      Complex cur = seifert_tube_map({1, 0.25, static_cast<double>(k) / steps, 1}, n);
      total += std::arg(cur / prev);
      prev = cur;
    }
    CHECK(std::abs(total / (2 * std::numbers::pi) - n) < 1e-9);
  }
}

TEST_CASE("area form coefficient") {
  CHECK(std::abs(area_form_coefficient({1, 0, 0, 1}, 1) - 1 / std::numbers::pi) <
        1e-15);
  CHECK(std::abs(area_form_coefficient({0.5, 0, 0, 1}, 1) -
                 2 / std::numbers::pi) < 1e-15);
  CHECK_THROWS_AS(area_form_coefficient({0, 0, 0, 1}, 1), std::domain_error);

  // Quadrature over the annulus: integral of N/rho drho dnu.
  const double kappa = 0.35;
  const int steps = 40000;
  double integral = 0;
  for (int i = 0; i < steps; ++i) {
    double rho = 1 - kappa + (i + 0.5) * kappa / steps;
    integral += area_form_coefficient({rho, 0, 0, kappa}, 2) * (kappa / steps);
  }
  CHECK(std::abs(integral + std::log(1 - kappa) / std::numbers::pi) < 1e-6);
}

TEST_CASE("hopfion scalars and radiative fields") {
  std::mt19937 rng(12);
  std::uniform_real_distribution<double> uni(-4, 4);

  // The level sets of phi are Hopf fibers: phi is constant along the
  // stereographic image of a fiber.
  SampledCurve fiber = stereo_project_curve(hopf_fiber({0.6, 0, 0.8}, 64));
  Complex ref = hopfion_scalar_phi(fiber.xyz(0));
  for (std::size_t i = 1; i < fiber.size(); ++i)
    CHECK(std::abs(hopfion_scalar_phi(fiber.xyz(i)) - ref) < 1e-7);

  int tested = 0;
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    Vec3 x{uni(rng), uni(rng), uni(rng)};
    FieldSample s;
    try {
      s = ranada_field(x, 1e-4);
    } catch (const std::domain_error&) {
      continue;
    }
    double nb = norm(s.B), ne = norm(s.E);
    if (nb < 1e-12 || ne < 1e-12) continue;
    ++tested;
    worst = std::max(worst, std::abs(dot(s.B, s.E)) / (nb * ne));
  }
  CHECK(tested > 80);
  CHECK(worst < 1e-4);

  CHECK_THROWS_AS(ranada_field({0.3, 0.3, 0.3}, 0.0), std::invalid_argument);
}

TEST_CASE("divergence error shrinks like h^2") {
  Vec3 probe{0.6, -0.3, 0.4};
  double coarse = std::abs(ranada_divergence_b(probe, 2e-3));
  double fine = std::abs(ranada_divergence_b(probe, 1e-3));
  CHECK(coarse / fine > 2.5);
  CHECK(coarse / fine < 6.0);
}

TEST_CASE("field magnitude decays along a ray") {
  double prev = std::numeric_limits<double>::max();
  for (double r = 3; r <= 20; r += 1) {
    Vec3 x{r * 0.7, r * 0.5, r * 0.3};
    double nb = norm(ranada_field(x, 1e-4).B);
    CHECK(nb < prev);
    prev = nb;
  }
}
