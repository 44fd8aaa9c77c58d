#pragma once

#include <array>
#include <optional>
#include <stdexcept>

#include "knotwork/diagram.hpp"

namespace knotwork {

// Writhe/twist/self-linking data of a framed knot presented as a band.
// Lk = Wr + Tw always; the vertical convention sets Tw = Wr. The
// preferred twist count n is recorded exactly when Lk is a positive even
// number (then Lk = 2n with n >= 1).
struct FramedBand {
  int writhe = 0;
  int twist = 0;
  int self_linking = 0;
  std::optional<int> preferred_n;
};

enum class FramingConvention { vertical, explicit_twist };

inline FramedBand band_from_diagram(const LinkDiagram& d,
                                    FramingConvention convention,
                                    int explicit_twist = 0) {
  if (d.component_count() != 1)
    throw std::invalid_argument("band_from_diagram: diagram is not a knot");
  FramedBand band;
  band.writhe = d.writhe();
  band.twist = convention == FramingConvention::vertical ? band.writhe
                                                         : explicit_twist;
  band.self_linking = band.writhe + band.twist;
  if (band.self_linking > 0 && band.self_linking % 2 == 0)
    band.preferred_n = band.self_linking / 2;
  return band;
}

// Element of SL(2,Z) acting on the torus mapping classes. Stored
// row-major as [[a, b], [c, d]].
struct TwistMatrix {
  std::array<int, 4> m{1, 0, 0, 1};

  TwistMatrix() = default;
  TwistMatrix(int a, int b, int c, int d) : m{a, b, c, d} {
    if (determinant() != 1)
      throw std::invalid_argument("TwistMatrix: determinant must be 1");
  }

  int determinant() const { return m[0] * m[3] - m[1] * m[2]; }

  friend bool operator==(const TwistMatrix& x, const TwistMatrix& y) {
    return x.m == y.m;
  }

  friend TwistMatrix operator*(const TwistMatrix& x, const TwistMatrix& y) {
    return TwistMatrix(x.m[0] * y.m[0] + x.m[1] * y.m[2],
                       x.m[0] * y.m[1] + x.m[1] * y.m[3],
                       x.m[2] * y.m[0] + x.m[3] * y.m[2],
                       x.m[2] * y.m[1] + x.m[3] * y.m[3]);
  }

  // The matrix acting on curve-class coefficient vectors (a, b) in the
  // longitude/meridian basis; it is the transpose of the basis action.
  TwistMatrix class_action() const {
    return TwistMatrix(m[0], m[2], m[1], m[3]);
  }
};

// Integer homology class a*longitude + b*meridian on the torus.
struct TorusClass {
  int a = 0;
  int b = 0;
  friend bool operator==(TorusClass x, TorusClass y) {
    return x.a == y.a && x.b == y.b;
  }
};

inline TorusClass apply(const TwistMatrix& m, TorusClass c) {
  return {m.m[0] * c.a + m.m[1] * c.b, m.m[2] * c.a + m.m[3] * c.b};
}

enum class TwistKind {
  longitude_twist_pos,  // tau_d^{+(L)}
  longitude_twist_neg,
  meridian_twist_pos,  // tau_d^{+(M)}
  meridian_twist_neg
};

inline TwistMatrix twist_matrix(TwistKind kind) {
  switch (kind) {
    case TwistKind::longitude_twist_pos:
      return TwistMatrix(1, 0, 1, 1);
    case TwistKind::longitude_twist_neg:
      return TwistMatrix(1, 0, -1, 1);
    case TwistKind::meridian_twist_pos:
      return TwistMatrix(1, 1, 0, 1);
    default:
      return TwistMatrix(1, -1, 0, 1);
  }
}

// n-fold meridian twist: the free group on one generator inside SL(2,Z).
inline TwistMatrix twist_matrix_power(int n) {
  return TwistMatrix(1, n, 0, 1);
}

// Basis change longitude' = longitude + n*meridian, meridian' = meridian
// induces (a, b) -> (a, b + n*a) on curve classes.
inline TorusClass meridian_twist_on_class(TorusClass c, int n) {
  return {c.a, c.b + n * c.a};
}

// A torus self-homeomorphism extends to the solid torus exactly when it
// takes meridians to meridians: the class (0, 1) must map to +-(0, 1).
// The argument is the class action of the twist.
inline bool extends_to_solid_torus(const TwistMatrix& class_action) {
  if (class_action.determinant() != 1)
    throw std::invalid_argument("extends_to_solid_torus: not in SL(2,Z)");
  TorusClass image = apply(class_action, TorusClass{0, 1});
  return (image.a == 0 && image.b == 1) || (image.a == 0 && image.b == -1);
}

}  // namespace knotwork
