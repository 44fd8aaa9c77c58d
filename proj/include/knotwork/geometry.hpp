#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace knotwork {

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;
using Complex = std::complex<double>;

inline Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}
inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec4 operator-(const Vec4& a, const Vec4& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}
inline double norm(const Vec4& a) {
  return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3]);
}

// Point on the unit 3-sphere written as two complex coordinates
// z1 = x1 + i x2, z2 = x3 + i x4.
struct ComplexPair {
  Complex z1, z2;

  static ComplexPair from_point(const Vec4& x) {
    return {Complex(x[0], x[1]), Complex(x[2], x[3])};
  }
  Vec4 to_point() const {
    return {z1.real(), z1.imag(), z2.real(), z2.imag()};
  }
  double sphere_norm() const { return std::sqrt(std::norm(z1) + std::norm(z2)); }
};

// ---------------------------------------------------------------------
// Stereographic projections from the North pole: u = x / (1 - x_{n+1}),
// with inverse (2u, 1 - |u|^2) / (1 + |u|^2).
// ---------------------------------------------------------------------

inline Vec2 stereo2_project(const Vec3& x) {
  if (std::abs(1.0 - x[2]) < 1e-12)
    throw std::domain_error("stereo2_project: North pole");
  const double s = 1.0 / (1.0 - x[2]);
  return {x[0] * s, x[1] * s};
}

inline Vec3 stereo2_invert(const Vec2& u) {
  const double u2 = u[0] * u[0] + u[1] * u[1];
  const double s = 1.0 / (1.0 + u2);
  return {2 * u[0] * s, 2 * u[1] * s, (u2 - 1) * s};
}

inline Vec3 stereo3_project(const Vec4& x) {
  if (std::abs(1.0 - x[3]) < 1e-12)
    throw std::domain_error("stereo3_project: North pole");
  const double s = 1.0 / (1.0 - x[3]);
  return {x[0] * s, x[1] * s, x[2] * s};
}

inline Vec4 stereo3_invert(const Vec3& u) {
  const double u2 = dot(u, u);
  const double s = 1.0 / (1.0 + u2);
  return {2 * u[0] * s, 2 * u[1] * s, 2 * u[2] * s, (u2 - 1) * s};
}

// ---------------------------------------------------------------------
// The Hopf map. The conjugate form (2 z1 conj(z2), |z1|^2 - |z2|^2) is
// used so that the whole fiber {(e^{it} z1, e^{it} z2)} maps to one
// point of the 2-sphere.
// ---------------------------------------------------------------------

inline Vec3 hopf_map(const ComplexPair& p, double tolerance = 1e-9) {
  if (std::abs(p.sphere_norm() - 1.0) > tolerance)
    throw std::invalid_argument("hopf_map: point is off the unit 3-sphere");
  const Complex w = 2.0 * p.z1 * std::conj(p.z2);
  return {w.real(), w.imag(), std::norm(p.z1) - std::norm(p.z2)};
}

// A polyline curve in 3- or 4-space with parameter values in [0,1].
// Closed curves repeat their first point at the end.
struct SampledCurve {
  int dim = 3;
  bool closed = false;
  std::vector<double> params;
  std::vector<Vec4> points;  // last component unused when dim == 3

  std::size_t size() const { return points.size(); }
  Vec3 xyz(std::size_t i) const {
    return {points[i][0], points[i][1], points[i][2]};
  }
};

// One point of the fiber over a base point of the 2-sphere.
inline ComplexPair hopf_fiber_section(const Vec3& base) {
  if (1.0 + base[2] < 1e-12) return {Complex(0, 0), Complex(1, 0)};
  const double z1 = std::sqrt((1.0 + base[2]) / 2.0);
  return {Complex(z1, 0), Complex(base[0], -base[1]) / (2.0 * z1)};
}

// The whole fiber circle over a base point, sampled uniformly. Every
// sample maps back to the base under hopf_map.
inline SampledCurve hopf_fiber(const Vec3& base, int samples) {
  if (samples < 3) throw std::invalid_argument("hopf_fiber: need >= 3 samples");
  if (std::abs(norm(base) - 1.0) > 1e-9)
    throw std::invalid_argument("hopf_fiber: base point is off the 2-sphere");
  const ComplexPair start = hopf_fiber_section(base);
  SampledCurve curve;
  curve.dim = 4;
  curve.closed = true;
  for (int k = 0; k <= samples; ++k) {
    const double t = static_cast<double>(k) / samples;
    const Complex phase = std::polar(1.0, 2.0 * std::numbers::pi * t);
    curve.params.push_back(t);
    curve.points.push_back(
        ComplexPair{phase * start.z1, phase * start.z2}.to_point());
  }
  return curve;
}

// Orbit of (z1, z2) -> (e^{i alpha t} z1, e^{i beta t} z2), t in [0, 2pi].
// For coprime (alpha, beta) and z1, z2 both nonzero this is a torus knot
// on the Clifford torus |z1| = const; otherwise it closes into a link
// fiber, which the caller may detect with std::gcd.
inline SampledCurve torus_fiber(int alpha, int beta, const ComplexPair& start,
                                int samples) {
  if (samples < 3) throw std::invalid_argument("torus_fiber: need >= 3 samples");
  if (std::abs(start.sphere_norm() - 1.0) > 1e-9)
    throw std::invalid_argument("torus_fiber: start is off the 3-sphere");
  if (std::abs(start.z1) < 1e-12 || std::abs(start.z2) < 1e-12)
    throw std::invalid_argument("torus_fiber: start must have z1, z2 != 0");
  SampledCurve curve;
  curve.dim = 4;
  curve.closed = true;
  for (int k = 0; k <= samples; ++k) {
    const double t = static_cast<double>(k) / samples;
    const double angle = 2.0 * std::numbers::pi * t;
    curve.params.push_back(t);
    curve.points.push_back(ComplexPair{std::polar(1.0, alpha * angle) * start.z1,
                                       std::polar(1.0, beta * angle) * start.z2}
                               .to_point());
  }
  return curve;
}

// Stereographic image in 3-space of a curve on the 3-sphere.
inline SampledCurve stereo_project_curve(const SampledCurve& c) {
  if (c.dim != 4)
    throw std::invalid_argument("stereo_project_curve: curve is not in 4-space");
  SampledCurve out;
  out.dim = 3;
  out.closed = c.closed;
  out.params = c.params;
  for (const Vec4& p : c.points) {
    Vec3 q = stereo3_project(p);
    out.points.push_back({q[0], q[1], q[2], 0.0});
  }
  return out;
}

// Gauss linking number of two disjoint closed polylines by midpoint-rule
// double quadrature of (dx x dy) . (x - y) / |x - y|^3 / (4 pi).
inline double gauss_linking(const SampledCurve& c1, const SampledCurve& c2,
                            double min_distance = 1e-6) {
  if (c1.dim != 3 || c2.dim != 3)
    throw std::invalid_argument("gauss_linking: curves must be in 3-space");
  if (!c1.closed || !c2.closed)
    throw std::invalid_argument("gauss_linking: curves must be closed");
  if (c1.size() < 3 || c2.size() < 3)
    throw std::invalid_argument("gauss_linking: degenerate curve");

  const std::size_t n1 = c1.size() - 1, n2 = c2.size() - 1;
  std::vector<Vec3> mid1(n1), mid2(n2), seg1(n1), seg2(n2);
  for (std::size_t i = 0; i < n1; ++i) {
    Vec3 a = c1.xyz(i), b = c1.xyz(i + 1);
    mid1[i] = {(a[0] + b[0]) / 2, (a[1] + b[1]) / 2, (a[2] + b[2]) / 2};
    seg1[i] = b - a;
  }
  for (std::size_t j = 0; j < n2; ++j) {
    Vec3 a = c2.xyz(j), b = c2.xyz(j + 1);
    mid2[j] = {(a[0] + b[0]) / 2, (a[1] + b[1]) / 2, (a[2] + b[2]) / 2};
    seg2[j] = b - a;
  }
  double sum = 0.0;
  double min_dist = std::numeric_limits<double>::max();
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) {
      const Vec3 r = mid1[i] - mid2[j];
      const double dist = norm(r);
      min_dist = std::min(min_dist, dist);
      sum += dot(cross(seg1[i], seg2[j]), r) / (dist * dist * dist);
    }
  if (min_dist < min_distance)
    throw std::invalid_argument("gauss_linking: curves come within " +
                                std::to_string(min_dist));
  return sum / (4.0 * std::numbers::pi);
}

// ---------------------------------------------------------------------
// Preferred-framing tube coordinates and area form.
// ---------------------------------------------------------------------

// Cylindrical coordinates (rho, lambda, mu) on the solid torus with the
// annulus thickness kappa; angles are normalized to [0, 1].
struct TubeCoordinates {
  double rho = 1.0;
  double lambda = 0.0;
  double mu = 0.0;
  double kappa = 1.0;
};

// Fibration map of the n-twisted tube: e^{2 pi i (lambda + n mu)}. As mu
// sweeps [0,1] at fixed lambda the argument winds exactly n times.
inline Complex seifert_tube_map(const TubeCoordinates& c, int n) {
  if (n < 1) throw std::invalid_argument("seifert_tube_map: n must be >= 1");
  return std::polar(1.0, 2.0 * std::numbers::pi * (c.lambda + n * c.mu));
}

// Coefficient of d rho ^ d nu in the normalized annulus area form,
// N / rho with N = 1/pi. Singular on the core circle rho = 0.
inline double area_form_coefficient(const TubeCoordinates& c, int n) {
  if (n < 1) throw std::invalid_argument("area_form_coefficient: n must be >= 1");
  if (c.rho <= 0.0)
    throw std::domain_error("area_form_coefficient: singular at rho = 0");
  return 1.0 / (std::numbers::pi * c.rho);
}

// ---------------------------------------------------------------------
// Static snapshots of the Hopf-fibration scalar fields and the derived
// magnetic/electric samples.
// ---------------------------------------------------------------------

// sp2 . hopf_map . sp3^{-1} as a complex scalar: the level curves are the
// stereographic images of Hopf fibers.
inline Complex hopfion_scalar_phi(const Vec3& x) {
  const Vec4 s = stereo3_invert(x);
  const Vec3 m = hopf_map(ComplexPair::from_point(s));
  if (std::abs(1.0 - m[2]) < 1e-12)
    throw std::domain_error("hopfion scalar: singular locus");
  return Complex(m[0], m[1]) / (1.0 - m[2]);
}

// Companion scalar built from the orthogonal circle family: the same
// chain with the sphere coordinates re-paired as (x1 + i x3, x4 + i x2).
// Its fibers meet the phi-fibers at right angles, which is what makes
// the sampled fields radiative (B . E = 0).
inline Complex hopfion_scalar_theta(const Vec3& x) {
  const Vec4 s = stereo3_invert(x);
  const Vec3 m = hopf_map(ComplexPair{Complex(s[0], s[2]), Complex(s[3], s[1])});
  if (std::abs(1.0 - m[2]) < 1e-12)
    throw std::domain_error("hopfion scalar: singular locus");
  return Complex(m[0], m[1]) / (1.0 - m[2]);
}

struct FieldSample {
  Vec3 position{};
  Vec3 B{};
  Vec3 E{};
};

namespace detail {

template <typename Scalar>
std::array<Vec3, 2> scalar_gradients(Scalar&& f, const Vec3& x, double h) {
  Vec3 grad_re{}, grad_im{};
  for (int k = 0; k < 3; ++k) {
    Vec3 xp = x, xm = x;
    xp[k] += h;
    xm[k] -= h;
    const Complex fp = f(xp), fm = f(xm);
    grad_re[k] = (fp.real() - fm.real()) / (2 * h);
    grad_im[k] = (fp.imag() - fm.imag()) / (2 * h);
  }
  return {grad_re, grad_im};
}

}  // namespace detail

// Static magnetic/electric sample of the hopfion configuration in
// natural units (a = c = 1):
//   B = -(1/pi) grad(Re phi) x grad(Im phi) / (1 + |phi|^2)^2
//   E = +(1/pi) grad(Re theta) x grad(Im theta) / (1 + |theta|^2)^2
// with central-difference gradients of step h.
inline FieldSample ranada_field(const Vec3& point, double h) {
  if (h <= 0) throw std::invalid_argument("ranada_field: step must be positive");
  FieldSample sample;
  sample.position = point;

  const Complex phi = hopfion_scalar_phi(point);
  auto [phi_re, phi_im] = detail::scalar_gradients(hopfion_scalar_phi, point, h);
  const double phi_den = 1.0 + std::norm(phi);
  const Vec3 b = cross(phi_re, phi_im);
  const double bscale = -1.0 / (std::numbers::pi * phi_den * phi_den);
  sample.B = {b[0] * bscale, b[1] * bscale, b[2] * bscale};

  const Complex theta = hopfion_scalar_theta(point);
  auto [th_re, th_im] = detail::scalar_gradients(hopfion_scalar_theta, point, h);
  const double th_den = 1.0 + std::norm(theta);
  const Vec3 e = cross(th_re, th_im);
  const double escale = 1.0 / (std::numbers::pi * th_den * th_den);
  sample.E = {e[0] * escale, e[1] * escale, e[2] * escale};
  return sample;
}

// Central-difference divergence of the sampled B field; the exact field
// is divergence free, so the value measures the O(h^2) stencil error.
inline double ranada_divergence_b(const Vec3& point, double h) {
  double div = 0.0;
  for (int k = 0; k < 3; ++k) {
    Vec3 xp = point, xm = point;
    xp[k] += h;
    xm[k] -= h;
    div += (ranada_field(xp, h).B[k] - ranada_field(xm, h).B[k]) / (2 * h);
  }
  return div;
}

}  // namespace knotwork
