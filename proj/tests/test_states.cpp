#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "truncirc/errors.hpp"
#include "truncirc/states.hpp"
#include "truncirc/toeplitz.hpp"
#include "truncirc/trig_poly.hpp"
#include "truncirc/wasserstein.hpp"

using namespace truncirc;
using Complex = std::complex<double>;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Independent quadrature of int f * g d(Haar) on a dense grid.
double integrate_product(const TrigPoly& f, const TrigPoly& g, int grid = 8192) {
  double acc = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double t = kTwoPi * i / grid;
    acc += f.eval_real(t) * g.eval_real(t);
  }
  return acc / grid;
}

TrigPoly random_real_poly(int degree, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  TrigPoly p(degree);
  p.set_coeff(0, unit(rng));
  for (int k = 1; k <= degree; ++k) {
    const Complex c(unit(rng), unit(rng));
    p.set_coeff(k, c);
    p.set_coeff(-k, std::conj(c));
  }
  return p;
}

double max_coeff_diff(const TrigPoly& a, const TrigPoly& b) {
  double m = 0.0;
  const int deg = std::max(a.degree(), b.degree());
  for (int k = -deg; k <= deg; ++k)
    m = std::max(m, std::abs(a.coeff(k) - b.coeff(k)));
  return m;
}

// Normalized density values at the m-th roots of unity vs the weights.
double ratio_error(const PureState& phi, std::span<const double> weights) {
  const TrigPoly density = phi.pullback_density();
  const int m = int(weights.size());
  std::vector<double> vals(static_cast<size_t>(m));
  double sum = 0.0;
  for (int j = 1; j <= m; ++j) {
    vals[size_t(j - 1)] = std::max(0.0, density.eval_real(kTwoPi * j / m));
    sum += vals[size_t(j - 1)];
  }
  double err = 0.0;
  for (int j = 0; j < m; ++j)
    err = std::max(err, std::abs(vals[size_t(j)] / sum - weights[size_t(j)]));
  return err;
}

}  // namespace

TEST_CASE("pure_from_roots basics") {
  SUBCASE("single root at 0") {
    const PureState s = pure_from_roots({0.0});
    REQUIRE(s.size() == 2);
    // P(z) = (z - 1)/sqrt(2) in increasing powers, monic coefficient positive.
    CHECK(std::abs(s.xi()(0) + Complex(1.0 / std::sqrt(2.0))) < 1e-12);
    CHECK(std::abs(s.xi()(1) - Complex(1.0 / std::sqrt(2.0))) < 1e-12);
    const TrigPoly d = s.pullback_density();
    CHECK(d.coeff(0).real() == doctest::Approx(1.0));
    CHECK(d.coeff(1).real() == doctest::Approx(-0.5));
    CHECK(std::abs(d.eval_real(0.0)) < 1e-12);
    CHECK(d.eval_real(std::numbers::pi) == doctest::Approx(2.0));
  }
  SUBCASE("cube roots of unity except 1 give the flat vector") {
    const PureState s = pure_from_roots({kTwoPi / 3.0, 2.0 * kTwoPi / 3.0});
    for (int k = 0; k < 3; ++k)
      CHECK(std::abs(s.xi()(k) - Complex(1.0 / std::sqrt(3.0))) < 1e-12);
  }
  SUBCASE("unit norm and normalized density for random root sets") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<double> roots(1 + trial);
      for (double& r : roots) r = angle(rng);
      const PureState s = pure_from_roots(roots);
      CHECK(std::abs(s.xi().norm() - 1.0) < 1e-12);
      const TrigPoly d = s.pullback_density();
      CHECK(std::abs(d.coeff(0).real() - 1.0) < 1e-12);
      CHECK(d.min_on_grid(2048) >= -1e-8);
      // The roots recomputed from xi lie on the circle at the input angles:
      // Q vanishes there.
      for (double r : roots) {
        Complex q(0.0);
        const auto z = std::polar(1.0, r);
        for (int k = s.size() - 1; k >= 0; --k) q = q * z + s.xi()(k);
        CHECK(std::abs(q) < 1e-8);
      }
      // And the density agrees with the explicit root-product form.
      CHECK(max_coeff_diff(d, root_form_density(roots)) < 1e-9);
    }
  }
}

TEST_CASE("evaluate") {
  TrigPoly two_cos(1);
  two_cos.set_coeff(-1, 1.0);
  two_cos.set_coeff(1, 1.0);
  const ToeplitzMatrix t = compress(two_cos, 2);
  CHECK(evaluate(pure_from_roots({0.0}), t) == doctest::Approx(-1.0));
  CHECK(evaluate(pure_from_roots({std::numbers::pi}), t) == doctest::Approx(1.0));

  SUBCASE("pure and derived moment state agree") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 2 + int(rng() % 8);
      std::vector<double> roots(static_cast<size_t>(n - 1));
      for (double& r : roots) r = angle(rng);
      const PureState pure = pure_from_roots(roots);
      const MomentState mom = moment_state(pure);
      const ToeplitzMatrix m = compress(random_real_poly(n - 1, rng), n);
      CHECK(evaluate(pure, m) == doctest::Approx(evaluate(mom, m)).epsilon(1e-10));
    }
  }
  SUBCASE("size mismatch throws") {
    CHECK_THROWS_AS(evaluate(pure_from_roots({0.0}), ToeplitzMatrix::identity(3)),
                    DomainError);
  }
}

TEST_CASE("compression identity: evaluate equals the pullback integral") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + int(rng() % 15);
    std::vector<double> roots(static_cast<size_t>(n - 1));
    for (double& r : roots) r = angle(rng);
    const PureState pure = pure_from_roots(roots);
    const TrigPoly f = random_real_poly(n - 1, rng);
    const double lhs = evaluate(pure, compress(f, n));
    const double rhs = integrate_product(f, pure.pullback_density());
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("MomentState validation") {
  CHECK_THROWS_AS(MomentState(2, {Complex(0.5), Complex(0.0)}), DomainError);
  // |m_1| = 1.5 > 1 makes the moment matrix indefinite.
  CHECK_THROWS_AS(MomentState(2, {Complex(1.0), Complex(1.5)}), DomainError);
  CHECK_THROWS_AS(MomentState(2, {Complex(1.0)}), DomainError);
}

TEST_CASE("moments_from_measure") {
  SUBCASE("density 1 - cos t matches the pure state at n = 2") {
    TrigPoly d(1);
    d.set_coeff(-1, -0.5);
    d.set_coeff(0, 1.0);
    d.set_coeff(1, -0.5);
    const MomentState from_measure =
        moments_from_measure(CircleMeasure::from_density(d), 2);
    const MomentState from_pure = moment_state(pure_from_roots({0.0}));
    for (int k = 0; k < 2; ++k)
      CHECK(std::abs(from_measure.moment(k) - from_pure.moment(k)) < 1e-12);
  }
  SUBCASE("round trip with pullback is the identity on moment states") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    for (int trial = 0; trial < 10; ++trial) {
      const int n = 2 + int(rng() % 8);
      std::vector<double> roots(static_cast<size_t>(n - 1));
      for (double& r : roots) r = angle(rng);
      const MomentState mom = moment_state(pure_from_roots(roots));
      const MomentState back = moments_from_measure(pullback(mom), n);
      for (int k = 0; k < n; ++k)
        CHECK(std::abs(back.moment(k) - mom.moment(k)) < 1e-12);
    }
  }
  SUBCASE("atom moments carry the expected phases") {
    const MomentState m = moments_from_measure(CircleMeasure::point(1.0), 3);
    CHECK(std::abs(m.moment(1) - std::polar(1.0, 1.0)) < 1e-12);
    CHECK(std::abs(m.moment(2) - std::polar(1.0, 2.0)) < 1e-12);
    // Check against the pullback convention: the degree-2 density made from
    // these moments must put its mass near angle 1.
    CHECK(m.pullback_density().argmax_on_grid(4096) == doctest::Approx(1.0).epsilon(1e-2));
  }
  SUBCASE("rejects non-states") {
    CHECK_THROWS_AS(moments_from_measure(CircleMeasure{{{0.0, 0.5}}, {}}, 2),
                    DomainError);
  }
}

TEST_CASE("fejer_state") {
  SUBCASE("n=2 at 0 equals the single root at pi") {
    const PureState s = fejer_state(2, 0.0);
    REQUIRE(s.roots().size() == 1);
    CHECK(s.roots()[0] == doctest::Approx(std::numbers::pi));
  }
  SUBCASE("n=3 at 0 is the flat vector") {
    const PureState s = fejer_state(3, 0.0);
    for (int k = 0; k < 3; ++k)
      CHECK(std::abs(s.xi()(k) - Complex(1.0 / std::sqrt(3.0))) < 1e-12);
  }
  SUBCASE("pullback is the Fejer kernel at theta") {
    for (int n : {2, 5, 9}) {
      const double theta = 0.77;
      CHECK(max_coeff_diff(fejer_state(n, theta).pullback_density(),
                           fejer_density(n, theta)) < 1e-10);
    }
  }
}

TEST_CASE("approx_state") {
  SUBCASE("ratio error decays like 1/sqrt(N)") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(0.05, 1.0);
    for (int trial = 0; trial < 8; ++trial) {
      const int m = 2 + int(rng() % 3);  // m <= 4
      std::vector<double> w(static_cast<size_t>(m));
      double sum = 0.0;
      for (double& v : w) {
        v = unit(rng);
        sum += v;
      }
      for (double& v : w) v /= sum;
      const double e_small = ratio_error(approx_state(w, 1e2, 0), w);
      const double e_big = ratio_error(approx_state(w, 1e4, 0), w);
      CHECK(e_big <= 0.25 * e_small + 1e-12);
    }
  }
  SUBCASE("extra root with compensation keeps the ratio") {
    const std::vector<double> w = {0.2, 0.3, 0.5};
    const PureState s = approx_state(w, 1e6, 2, 0.4);
    CHECK(s.size() == 6);  // m + l + 1
    CHECK(ratio_error(s, w) < 1e-2);
  }
  SUBCASE("input validation") {
    CHECK_THROWS_AS(approx_state(std::vector<double>{0.5, 0.6}, 1e3, 0),
                    DomainError);
    CHECK_THROWS_AS(approx_state(std::vector<double>{1.0}, -1.0, 0), DomainError);
    // Extra root on top of a lambda_j is degenerate.
    CHECK_THROWS_AS(approx_state(std::vector<double>{0.5, 0.5}, 1e3, 1,
                                 std::numbers::pi),
                    DomainError);
  }
}

TEST_CASE("power_state") {
  SUBCASE("m = n = 1 at rotation 0 is the single root at 0") {
    const PureState s = power_state(1, 1, 0.0);
    REQUIRE(s.roots().size() == 1);
    CHECK(std::abs(s.roots()[0]) < 1e-12);
  }
  SUBCASE("pullback equals the power kernel") {
    for (int m : {1, 2, 3})
      for (int n : {1, 2, 4}) {
        const double rho = 0.3;
        CHECK(max_coeff_diff(power_state(m, n, rho).pullback_density(),
                             power_kernel(m, n, rho)) < 1e-10);
      }
  }
  SUBCASE("higher powers concentrate at the kernel maxima") {
    // Maxima of 1 - cos(2t) sit at pi/2 and 3*pi/2.
    const CircleMeasure target{
        {{std::numbers::pi / 2.0, 0.5}, {3.0 * std::numbers::pi / 2.0, 0.5}}, {}};
    const double w_low = w1_circle(pullback(power_state(2, 2, 0.0)), target);
    const double w_high = w1_circle(pullback(power_state(2, 8, 0.0)), target);
    CHECK(w_high < w_low);
  }
}

TEST_CASE("product_state") {
  SUBCASE("multiplying the uniform state is the power state") {
    const PureState prod = product_state(pure_from_roots({}), 2, 3, 0.1);
    const PureState pow = power_state(2, 3, 0.1);
    REQUIRE(prod.size() == pow.size());
    CHECK((prod.xi() - pow.xi()).norm() < 1e-12);
  }
  SUBCASE("density is the normalized product of densities") {
    const PureState phi = pure_from_roots({1.0, 2.5});
    const PureState prod = product_state(phi, 2, 2, 0.3);
    const TrigPoly expected =
        (phi.pullback_density() * power_kernel(2, 2, 0.3)).normalized_density();
    CHECK(max_coeff_diff(prod.pullback_density(), expected) < 1e-10);
  }
  SUBCASE("mass concentrates at the kernel maxima weighted by phi's density") {
    const PureState phi = fejer_state(4, std::numbers::pi / 2.0);
    const TrigPoly d = phi.pullback_density();
    // Kernel maxima for m=2, rotation 0: pi/2 and 3*pi/2.
    const double p1 = d.eval_real(std::numbers::pi / 2.0);
    const double p2 = d.eval_real(3.0 * std::numbers::pi / 2.0);
    const CircleMeasure limit{{{std::numbers::pi / 2.0, p1 / (p1 + p2)},
                               {3.0 * std::numbers::pi / 2.0, p2 / (p1 + p2)}},
                              {}};
    double prev = std::numbers::pi;  // larger than any W1 on the circle
    for (int n : {2, 4, 8, 16}) {
      const double w = w1_circle(pullback(product_state(phi, 2, n, 0.0)), limit);
      CHECK(w < prev);
      prev = w;
    }
  }
  SUBCASE("rejects a density vanishing at every kernel maximum") {
    // phi's roots sit exactly on the maxima of 1 - cos(2t).
    const PureState phi =
        pure_from_roots({std::numbers::pi / 2.0, 3.0 * std::numbers::pi / 2.0});
    CHECK_THROWS_AS(product_state(phi, 2, 2, 0.0), DomainError);
  }
}

TEST_CASE("CircleMeasure") {
  CHECK(CircleMeasure::uniform().is_state());
  CHECK(CircleMeasure::point(1.0).is_state());
  CHECK(CircleMeasure::point(-1.0).atoms[0].angle ==
        doctest::Approx(kTwoPi - 1.0));
  CircleMeasure half{{{0.0, 0.5}}, {}};
  CHECK(half.total_mass() == doctest::Approx(0.5));
  CHECK_FALSE(half.is_state());
}
