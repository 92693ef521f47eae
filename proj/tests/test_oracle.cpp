#include <doctest.h>

#include <vector>

#include "slitsqueeze/error.hpp"
#include "slitsqueeze/oracle.hpp"
#include "support.hpp"

using namespace slitsqueeze;

TEST_SUITE("oracle") {
  TEST_CASE("circle statistics on the annulus") {
    const auto d = annulus_domain(Annulus(0.25));
    const SlitMap m(d, 0.6, 0);
    const auto inner = oracle::sample_modulus_on_circle(m, d.boundary(1), 360);
    CHECK(std::abs(inner.mean_modulus - 0.6) < 1e-8);
    CHECK(inner.spread() < 1e-8);
    CHECK(inner.samples == 360);
    CHECK(inner.min_modulus <= inner.mean_modulus);
    CHECK(inner.mean_modulus <= inner.max_modulus);
    const auto outer = oracle::sample_modulus_on_circle(m, d.boundary(0), 360);
    CHECK(std::abs(outer.mean_modulus - 1.0) < 1e-9);
    CHECK(outer.spread() < 1e-9);
    const auto coarse = oracle::sample_modulus_on_circle(m, d.boundary(1), 8);
    const auto fine = oracle::sample_modulus_on_circle(m, d.boundary(1), 1024);
    CHECK(std::abs(coarse.mean_modulus - fine.mean_modulus) < 1e-9);
    CHECK_THROWS_AS(oracle::sample_modulus_on_circle(m, d.boundary(1), 7), Error);
  }

  TEST_CASE("unimodularity") {
    const auto d = annulus_domain(Annulus(0.3));
    CHECK(oracle::unimodularity_residual(SlitMap(d, Complex(0.2, 0.5), 0), 360) < 1e-9);
    CHECK(oracle::unimodularity_residual(SlitMap(d, Complex(0.2, 0.5), 1), 360) < 1e-9);
    // a loose policy is reported, not hidden
    const double loose = oracle::unimodularity_residual(SlitMap(d, Complex(0.2, 0.5), 1, {1e-3}), 360);
    CHECK(loose >= 0.0);
  }

  TEST_CASE("spread shrinks as the truncation tightens") {
    const auto d = make_circular_domain({{-0.4, 0.15}, {0.45, 0.2}});
    double prev = 1.0;
    for (std::size_t len : {2, 4, 6, 8}) {
      const SlitMap m(d, 0.05, 0, {1e-12, 2048, len, 1.0});
      const auto s = oracle::sample_modulus_on_circle(m, d.boundary(1), 64);
      CHECK(s.spread() <= prev * 1.5);
      prev = s.spread();
    }
    CHECK(prev < 1e-8);
  }

  TEST_CASE("near-tangent holes surface NoConvergence") {
    const auto d = make_circular_domain({{-0.45, 0.45}, {0.45, 0.449}});
    CHECK_THROWS_AS(oracle::unimodularity_residual(SlitMap(d, Complex(0.0, 0.6), 0), 64), NoConvergenceError);
  }

  TEST_CASE("fixed-length partial products") {
    const Complex z(0.5, 0.2), y(-0.3, 0.4);
    const std::vector<std::size_t> ns{0, 1, 2, 3, 4, 5, 6, 7, 8, 10, 40};
    const auto v = oracle::omega_partial_products(z, y, 0.5, ns);
    REQUIRE(v.size() == ns.size());
    CHECK(v[0].value == z - y);
    CHECK(v[0].terms_used == 0);
    // successive ratios approach 1 like q^(2n)
    for (std::size_t k = 2; k + 1 < 9; ++k) {
      const double ratio = std::abs(v[k + 1].value / v[k].value - 1.0) / std::abs(v[k].value / v[k - 1].value - 1.0);
      CHECK(ratio == doctest::Approx(0.25).epsilon(0.05));
    }
    const PrimeValue adaptive = omega_annulus(z, y, 0.5);
    const auto bracket = oracle::omega_partial_products(z, y, 0.5, std::vector<std::size_t>{adaptive.terms_used - 1,
                                                                                          adaptive.terms_used + 1});
    const double lo = std::min(bracket[0].value.real(), bracket[1].value.real());
    const double hi = std::max(bracket[0].value.real(), bracket[1].value.real());
    CHECK(adaptive.value.real() >= lo - 1e-15);
    CHECK(adaptive.value.real() <= hi + 1e-15);
    CHECK_THROWS_AS(oracle::omega_partial_products(0.0, y, 0.5, ns), Error);
  }
}
