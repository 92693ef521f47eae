#include <doctest.h>

#include "slitsqueeze/error.hpp"
#include "slitsqueeze/squeezing.hpp"
#include "support.hpp"

using namespace slitsqueeze;

TEST_SUITE("squeezing") {
  TEST_CASE("annulus closed form") {
    CHECK(squeeze_annulus_exact(0.8, 0.25) == 0.8);
    CHECK(squeeze_annulus_exact(0.5, 0.25) == 0.5);
    CHECK(std::abs(squeeze_annulus_exact(Complex(0.0, 0.35), 0.25) - 5.0 / 7.0) < 1e-15);
    try {
      squeeze_annulus_exact(0.1, 0.25);
      FAIL("expected PointOutsideAnnulus");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::PointOutsideAnnulus);
      CHECK(std::string(e.what()).find("q < |z| < 1") != std::string::npos);
    }
    CHECK_THROWS_AS(squeeze_annulus_exact(1.0, 0.25), Error);
    testing::Rng rng(61);
    for (int k = 0; k < 50; ++k) {
      const double q = rng.uniform(0.05, 0.9);
      const Complex z = rng.annulus_point(q);
      const double s = squeeze_annulus_exact(z, q);
      CHECK(s < 1.0);
      CHECK(s >= std::sqrt(q) - 1e-15);
      CHECK(std::abs(s - squeeze_annulus_exact(q / std::conj(z), q)) < 1e-14);
      CHECK(s == squeeze_annulus_exact(std::abs(z), q));
    }
  }

  TEST_CASE("doubly connected domains are exact") {
    const auto a = annulus_domain(Annulus(0.25));
    for (const double r : {0.6, 0.45}) {
      const SqueezeBounds b = squeeze_doubly_connected(a, r);
      CHECK(b.exact);
      CHECK(b.lower == b.upper);
      CHECK(std::abs(b.lower - squeeze_annulus_exact(r, 0.25)) < 1e-6);
    }
    const auto e = make_circular_domain({{0.1, 0.2}});
    const SqueezeBounds b = squeeze_doubly_connected(e, -0.5);
    CHECK(b.exact);
    CHECK(b.lower > 0.0);
    CHECK(b.upper < 1.0);
    const SqueezeBounds g = squeeze_bounds(e, -0.5);
    CHECK(g.exact);
    CHECK(std::abs(g.lower - g.upper) < 1e-15);
    for (std::size_t i = 0; i < 2; ++i) {
      const BoundaryBounds bb = boundary_bounds(e, -0.5, i);
      CHECK(bb.lower == bb.upper);
    }
    CHECK_THROWS_AS(squeeze_doubly_connected(make_circular_domain({{-0.4, 0.1}, {0.45, 0.12}}), 0.05), Error);
  }

  TEST_CASE("three-connected sandwich") {
    const auto d = make_circular_domain({{-0.4, 0.1}, {0.45, 0.12}});
    const SqueezeBounds b = squeeze_bounds(d, 0.05);
    CHECK(b.lower > 0.0);
    CHECK(b.lower <= b.upper);
    CHECK(b.upper < 1.0);
    CHECK(b.per_boundary.size() == 3);
    double lo = 0.0, hi = 0.0;
    for (const auto& pb : b.per_boundary) {
      CHECK(pb.lower <= pb.upper);
      lo = std::max(lo, pb.lower);
      hi = std::max(hi, pb.upper);
    }
    CHECK(b.lower == lo);
    CHECK(b.upper == hi);
    CHECK(b.base == Complex(0.05));
    const BoundaryBounds b1 = boundary_bounds(d, 0.05, 1);
    CHECK(b1.lower == b.per_boundary[1].lower);
    for (const auto& c : extremality_certificate(b)) {
      CHECK(c.spread >= 0.0);
      if (!b.exact) CHECK(!c.certified);
    }
  }

  TEST_CASE("symmetric domain is certified at the centre") {
    const auto d = make_circular_domain({{0.5, 0.15}, {-0.5, 0.15}});
    const SqueezeBounds b = squeeze_bounds(d, 0.0);
    const auto certs = extremality_certificate(b);
    REQUIRE(certs.size() == 3);
    CHECK(certs[0].certified);
    CHECK(certs[0].spread < kExtremalSpread);
    CHECK(b.exact);
    CHECK(std::abs(b.lower - certs[0].common_radius) < 1e-9);
  }

  TEST_CASE("doubly connected certificate on the attaining boundary") {
    const auto certs = extremality_certificate(annulus_domain(Annulus(0.25)), 0.6);
    REQUIRE(certs.size() == 2);
    CHECK(certs[0].spread == 0.0);
    CHECK(certs[0].certified);
    CHECK(std::abs(certs[0].common_radius - 0.6) < 1e-8);
  }

  TEST_CASE("refined upper bound") {
    CHECK(refined_upper_bound(1.0, 0.7) == 0.7);
    CHECK(std::abs(refined_upper_bound(3.0, 0.8) - 0.4) < 1e-15);
    CHECK_THROWS_AS(refined_upper_bound(0.5, 0.8), Error);
    const auto d = make_circular_domain({{-0.4, 0.15}, {0.45, 0.2}});
    const double r = refined_upper(d, 0);
    const SlitProfile p = slit_profile(d, 0.0, 0);
    CHECK(r < p.max_radius());
    CHECK(r > 0.0);
    CHECK_THROWS_AS(refined_upper(make_circular_domain({{0.0, 0.2}}), 0), Error);
  }
}
