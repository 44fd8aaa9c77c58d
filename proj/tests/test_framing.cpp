#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "knotwork/framing.hpp"
#include "knotwork/reidemeister.hpp"

using namespace knotwork;

TEST_CASE("vertical framing of the trefoil") {
  LinkDiagram tre = closure_to_diagram(parse_braid("1 1 1"));
  FramedBand band = band_from_diagram(tre, FramingConvention::vertical);
  CHECK(band.writhe == 3);
  CHECK(band.twist == 3);
  CHECK(band.self_linking == 6);
  REQUIRE(band.preferred_n.has_value());
  CHECK(*band.preferred_n == 3);
}

TEST_CASE("vertical framing of the unknot has no preferred twist count") {
  FramedBand band =
      band_from_diagram(LinkDiagram::unknot(), FramingConvention::vertical);
  CHECK(band.writhe == 0);
  CHECK(band.twist == 0);
  CHECK(band.self_linking == 0);
  CHECK_FALSE(band.preferred_n.has_value());
}

TEST_CASE("explicit framing adds the given twist") {
  LinkDiagram f8 = closure_to_diagram(parse_braid("1 -2 1 -2"));
  FramedBand band =
      band_from_diagram(f8, FramingConvention::explicit_twist, 2);
  CHECK(band.writhe == 0);
  CHECK(band.twist == 2);
  CHECK(band.self_linking == 2);
  REQUIRE(band.preferred_n.has_value());
  CHECK(*band.preferred_n == 1);

  FramedBand odd = band_from_diagram(f8, FramingConvention::explicit_twist, 3);
  CHECK(odd.self_linking == 3);
  CHECK_FALSE(odd.preferred_n.has_value());
}

TEST_CASE("framing requires a knot diagram") {
  CHECK_THROWS_AS(band_from_diagram(closure_to_diagram(parse_braid("1 1")),
                                    FramingConvention::vertical),
                  std::invalid_argument);
}

TEST_CASE("self-linking under Reidemeister rewrites") {
  LinkDiagram tre = closure_to_diagram(parse_braid("1 1 1"));
  auto lk = [](const LinkDiagram& d) {
    return band_from_diagram(d, FramingConvention::vertical).self_linking;
  };
  // R1 changes Wr by the kink sign, and with the vertical convention the
  // self-linking follows as 2 Wr.
  LinkDiagram kinked = reidemeister_r1_add(tre, 0, -1);
  CHECK(lk(kinked) == lk(tre) - 2);
  // R2 leaves the writhe (hence Lk) alone.
  LinkDiagram pushed = reidemeister_r2_add(tre, 0, 1);
  CHECK(lk(pushed) == lk(tre));
}

TEST_CASE("twist matrices") {
  CHECK(twist_matrix_power(0) == TwistMatrix(1, 0, 0, 1));
  CHECK(twist_matrix_power(2) * twist_matrix_power(3) == twist_matrix_power(5));
  CHECK(twist_matrix(TwistKind::longitude_twist_pos) == TwistMatrix(1, 0, 1, 1));
  CHECK(twist_matrix(TwistKind::meridian_twist_pos) == TwistMatrix(1, 1, 0, 1));
  CHECK(twist_matrix(TwistKind::longitude_twist_pos) *
            twist_matrix(TwistKind::longitude_twist_neg) ==
        TwistMatrix(1, 0, 0, 1));
  CHECK(twist_matrix(TwistKind::meridian_twist_pos) *
            twist_matrix(TwistKind::meridian_twist_neg) ==
        TwistMatrix(1, 0, 0, 1));
  CHECK_THROWS_AS(TwistMatrix(1, 1, 1, 1), std::invalid_argument);

  // Powers form a homomorphism from the integers.
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> nd(-20, 20);
  for (int i = 0; i < 50; ++i) {
    int a = nd(rng), b = nd(rng);
    CHECK(twist_matrix_power(a) * twist_matrix_power(b) ==
          twist_matrix_power(a + b));
  }
}

TEST_CASE("meridian twists on curve classes") {
  CHECK(meridian_twist_on_class({0, 1}, 7) == TorusClass{0, 1});
  CHECK(meridian_twist_on_class({1, 0}, 1) == TorusClass{1, 1});
  CHECK(meridian_twist_on_class({3, 4}, 2) == TorusClass{3, 10});

  std::mt19937 rng(43);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int i = 0; i < 60; ++i) {
    TorusClass c{coeff(rng), coeff(rng)};
    int n = coeff(rng), m = coeff(rng);
    CHECK(meridian_twist_on_class(meridian_twist_on_class(c, n), m) ==
          meridian_twist_on_class(c, n + m));
    // The class action matrix realizes the same map.
    CHECK(apply(twist_matrix_power(n).class_action(), c) ==
          meridian_twist_on_class(c, n));
  }
}

TEST_CASE("extension to the solid torus") {
  for (int n = -5; n <= 5; ++n) {
    CHECK(extends_to_solid_torus(TwistMatrix(1, 0, n, 1)));
    CHECK(extends_to_solid_torus(twist_matrix_power(n).class_action()));
  }
  CHECK_FALSE(extends_to_solid_torus(TwistMatrix(1, 1, 0, 1)));
  CHECK_FALSE(extends_to_solid_torus(
      twist_matrix(TwistKind::longitude_twist_pos).class_action()));
  CHECK(extends_to_solid_torus(TwistMatrix(1, 0, 0, 1)));
}
