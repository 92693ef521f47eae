#include <doctest.h>

#include <string>

#include "slitsqueeze/error.hpp"
#include "slitsqueeze/geometry.hpp"
#include "slitsqueeze/schottky.hpp"
#include "support.hpp"

using namespace slitsqueeze;

namespace {

ErrorKind kind_of(std::initializer_list<Circle> holes) {
  try {
    make_circular_domain(holes);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("domain was accepted");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("valid domains") {
    const auto a = make_circular_domain({{0.0, 0.3}});
    CHECK(a.connectivity() == 2);
    CHECK(a.is_concentric_annulus());
    const auto d = make_circular_domain({{-0.4, 0.15}, {0.45, 0.2}});
    CHECK(d.connectivity() == 3);
    CHECK(!d.is_concentric_annulus());
    CHECK(d.boundary(0).radius == 1.0);
    CHECK(d.boundary(2).center == Complex(0.45));
    CHECK(d.contains(0.0));
    CHECK(!d.contains(-0.4));
    CHECK(!d.contains(1.0));
  }

  TEST_CASE("invalid domains name the violation") {
    CHECK(kind_of({{0.5, 0.6}}) == ErrorKind::HoleOutsideDisc);
    CHECK(kind_of({{0.2, 0.2}, {-0.1, 0.2}}) == ErrorKind::HolesOverlap);
    CHECK(kind_of({{0.0, -0.1}}) == ErrorKind::InvalidArgument);
    // touching circles are degenerate
    CHECK(kind_of({{0.5, 0.5}}) == ErrorKind::HoleOutsideDisc);
    CHECK(kind_of({{-0.3, 0.2}, {0.1, 0.2}}) == ErrorKind::HolesOverlap);
    CHECK_THROWS_AS(make_circular_domain(std::span<const Circle>{}), Error);
    try {
      make_circular_domain({{0.0, 0.1}, {0.6, 0.2}, {0.65, 0.1}});
      FAIL("expected overlap");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::HolesOverlap);
      const std::string msg = e.what();
      CHECK(msg.find('2') != std::string::npos);
      CHECK(msg.find('3') != std::string::npos);
    }
    CHECK_THROWS_AS(make_circular_domain({{0.0, 0.1}}).boundary(2), Error);
  }

  TEST_CASE("annulus") {
    CHECK_THROWS_AS(Annulus(0.0), Error);
    CHECK_THROWS_AS(Annulus(1.0), Error);
    const Annulus a(0.25);
    CHECK(a.contains(0.5));
    CHECK(!a.contains(0.2));
    const auto d = annulus_domain(a);
    CHECK(d.holes()[0].radius == 0.25);
  }

  TEST_CASE("generators") {
    const auto g = schottky_generators(make_circular_domain({{0.0, 0.3}}));
    REQUIRE(g.size() == 1);
    for (const Complex z : {Complex(0.5, 0.1), Complex(-0.2, 0.7)}) CHECK(g[0](z) == 0.09 * z);

    const auto h = schottky_generators(make_circular_domain({{0.2, 0.1}}));
    const Complex z(0.3, -0.4);
    CHECK(std::abs(h[0](z) - (0.2 + 0.01 * z / (1.0 - 0.2 * z))) < 1e-15);
  }

  TEST_CASE("generator fixed points and reflected boundary") {
    testing::Rng rng(21);
    for (int t = 0; t < 10; ++t) {
      const auto holes = rng.holes(2, 0.05, 0.25, 0.05);
      const auto d = make_circular_domain(std::span<const Circle>(holes));
      const auto gens = schottky_generators(d);
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const MobiusMap& m = gens[j];
        const Circle h = holes[j];
        // fixed points: c z² + (d - a) z - b = 0
        const Complex a = m.c(), b = m.d() - m.a(), c = -m.b();
        const Complex disc = std::sqrt(b * b - 4.0 * a * c);
        const Complex f1 = (-b + disc) / (2.0 * a);
        const Complex f2 = (-b - disc) / (2.0 * a);
        const Complex inside = std::abs(f1 - h.center) < std::abs(f2 - h.center) ? f1 : f2;
        const Complex outside = inside == f1 ? f2 : f1;
        CHECK(std::abs(inside - h.center) < h.radius);
        CHECK(std::abs(1.0 / std::conj(outside) - h.center) < h.radius);
        for (int k = 0; k < 16; ++k) {
          const Complex p = 1.0 / std::conj(h.point_at(0.4 * k));
          CHECK(std::abs(std::abs(m(p) - h.center) - h.radius) < 1e-10);
        }
      }
    }
  }

  TEST_CASE("normalize_boundary") {
    const auto a = make_circular_domain({{0.0, 0.25}});
    const auto n = normalize_boundary(a, 1, 0.6);
    CHECK(n.domain.is_concentric_annulus());
    CHECK(std::abs(n.domain.holes()[0].radius - 0.25) < 1e-14);
    CHECK(std::abs(n.base - 0.25 / 0.6) < 1e-14);
    CHECK(std::abs(n.map(Complex(0.3, 0.4)) - 0.25 / Complex(0.3, 0.4)) < 1e-14);

    const auto id = normalize_boundary(a, 0, 0.6);
    CHECK(id.base == Complex(0.6));
    CHECK(id.original_index == std::vector<std::size_t>{0, 1});

    const auto d = make_circular_domain({{0.3, 0.1}, {-0.4, 0.12}});
    const auto m = normalize_boundary(d, 1, 0.0);
    CHECK(m.domain.hole_count() == 2);
    CHECK(m.original_index == std::vector<std::size_t>{1, 0, 2});
    // hole 1 maps to the unit circle, the unit circle to hole 1 of the image
    for (int k = 0; k < 8; ++k) {
      CHECK(std::abs(std::abs(m.map(d.boundary(1).point_at(0.7 * k))) - 1.0) < 1e-12);
      const Circle c = m.domain.holes()[0];
      CHECK(std::abs(std::abs(m.map(std::polar(1.0, 0.7 * k)) - c.center) - c.radius) < 1e-12);
    }
    // and back again
    const MobiusMap back = m.map.inverse();
    for (std::size_t j = 1; j <= 2; ++j) {
      const Circle img = image_of_circle(back, m.domain.boundary(j));
      const Circle orig = d.boundary(m.original_index[j]);
      CHECK(std::abs(img.center - orig.center) < 1e-10);
      CHECK(std::abs(img.radius - orig.radius) < 1e-10);
    }

    CHECK_THROWS_AS(normalize_boundary(d, 3, 0.0), Error);
    CHECK_THROWS_AS(normalize_boundary(d, 1, 0.3), Error);
  }

  TEST_CASE("rotation") {
    const auto d = make_circular_domain({{0.3, 0.1}, {-0.4, 0.12}});
    const auto r = rotate(d, 0.5);
    CHECK(std::abs(r.holes()[0].center - std::polar(0.3, 0.5)) < 1e-15);
    CHECK(r.holes()[1].radius == 0.12);
  }
}
