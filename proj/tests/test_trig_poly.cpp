#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "truncirc/trig_poly.hpp"

using truncirc::TrigPoly;
using Complex = std::complex<double>;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Quadrature oracle: k-th Fourier coefficient by the periodic rectangle rule
// (spectrally accurate for trig polynomials once the grid resolves them).
Complex fourier_coeff_quadrature(const TrigPoly& f, int k, int grid = 4096) {
  Complex acc(0.0);
  for (int i = 0; i < grid; ++i) {
    const double t = kTwoPi * i / grid;
    acc += f.eval(t) * std::polar(1.0, -k * t);
  }
  return acc / double(grid);
}

TrigPoly random_poly(int degree, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  TrigPoly p(degree);
  for (int k = -degree; k <= degree; ++k)
    p.set_coeff(k, Complex(unit(rng), unit(rng)));
  return p;
}

}  // namespace

TEST_CASE("eval basics") {
  CHECK(TrigPoly::basis(0).eval(1.234).real() == doctest::Approx(1.0));

  TrigPoly one_minus_cos(1);
  one_minus_cos.set_coeff(-1, -0.5);
  one_minus_cos.set_coeff(0, 1.0);
  one_minus_cos.set_coeff(1, -0.5);
  CHECK(one_minus_cos.eval_real(0.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(one_minus_cos.eval_real(std::numbers::pi) == doctest::Approx(2.0));
  CHECK(one_minus_cos.is_real());
}

TEST_CASE("multiply matches hand convolution") {
  TrigPoly one_minus_cos(1), one_plus_cos(1);
  one_minus_cos.set_coeff(-1, -0.5);
  one_minus_cos.set_coeff(0, 1.0);
  one_minus_cos.set_coeff(1, -0.5);
  one_plus_cos.set_coeff(-1, 0.5);
  one_plus_cos.set_coeff(0, 1.0);
  one_plus_cos.set_coeff(1, 0.5);

  SUBCASE("multiplication by 1 is the identity") {
    const TrigPoly p = one_minus_cos * TrigPoly::constant(1.0);
    for (int k = -1; k <= 1; ++k)
      CHECK(std::abs(p.coeff(k) - one_minus_cos.coeff(k)) < 1e-15);
  }

  SUBCASE("(1-cos)(1+cos) = 1/2 - (1/2) cos 2t") {
    const TrigPoly p = one_minus_cos * one_plus_cos;
    CHECK(p.coeff(-2).real() == doctest::Approx(-0.25));
    CHECK(p.coeff(0).real() == doctest::Approx(0.5));
    CHECK(p.coeff(2).real() == doctest::Approx(-0.25));
    CHECK(std::abs(p.coeff(1)) < 1e-15);
  }

  SUBCASE("exponents add") {
    const TrigPoly p = TrigPoly::basis(1) * TrigPoly::basis(1);
    CHECK(std::abs(p.coeff(2) - Complex(1.0)) < 1e-15);
    CHECK(std::abs(p.coeff(1)) < 1e-15);
  }
}

TEST_CASE("convolution correctness on random polynomials") {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  for (int trial = 0; trial < 10; ++trial) {
    const TrigPoly f = random_poly(1 + int(rng() % 8), rng);
    const TrigPoly g = random_poly(1 + int(rng() % 8), rng);
    const TrigPoly fg = f * g;
    for (int i = 0; i < 50; ++i) {
      const double t = angle(rng);
      CHECK(std::abs(fg.eval(t) - f.eval(t) * g.eval(t)) < 1e-10);
    }
  }
}

TEST_CASE("root_form_density") {
  SUBCASE("single root at 0") {
    const double angles[] = {0.0};
    const TrigPoly p = truncirc::root_form_density(angles);
    CHECK(p.coeff(-1).real() == doctest::Approx(-0.5));
    CHECK(p.coeff(0).real() == doctest::Approx(1.0));
    CHECK(p.coeff(1).real() == doctest::Approx(-0.5));
  }
  SUBCASE("no roots gives the constant 1") {
    const TrigPoly p = truncirc::root_form_density(std::vector<double>{});
    CHECK(p.degree() == 0);
    CHECK(p.coeff(0).real() == doctest::Approx(1.0));
  }
  SUBCASE("antipodal roots") {
    const double angles[] = {0.0, std::numbers::pi};
    const TrigPoly p = truncirc::root_form_density(angles);
    CHECK(p.coeff(-2).real() == doctest::Approx(-0.5));
    CHECK(p.coeff(0).real() == doctest::Approx(1.0));
    CHECK(p.coeff(2).real() == doctest::Approx(-0.5));
    // Independent check of the normalization by quadrature.
    CHECK(fourier_coeff_quadrature(p, 0).real() == doctest::Approx(1.0));
  }
  SUBCASE("nonnegative, vanishing exactly at the roots") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<double> angles(3 + trial);
      for (double& a : angles) a = angle(rng);
      const TrigPoly p = truncirc::root_form_density(angles);
      CHECK(p.min_on_grid(4 * p.degree() + 1) >= -1e-10);
      for (double a : angles) CHECK(std::abs(p.eval_real(a)) <= 1e-8);
    }
  }
}

TEST_CASE("fejer_density") {
  SUBCASE("n=1 is the constant 1") {
    const TrigPoly p = truncirc::fejer_density(1, 0.7);
    CHECK(p.degree() == 0);
    CHECK(p.coeff(0).real() == doctest::Approx(1.0));
  }
  SUBCASE("n=2 at theta=0 is 1 + cos") {
    const TrigPoly p = truncirc::fejer_density(2, 0.0);
    CHECK(p.coeff(-1).real() == doctest::Approx(0.5));
    CHECK(p.coeff(0).real() == doctest::Approx(1.0));
    CHECK(p.coeff(1).real() == doctest::Approx(0.5));
  }
  SUBCASE("kernel value at the peak is n") {
    CHECK(truncirc::fejer_density(3, 0.0).eval_real(0.0) == doctest::Approx(3.0));
  }
  SUBCASE("nonnegative with unit mass") {
    for (int n : {2, 5, 16}) {
      const TrigPoly p = truncirc::fejer_density(n, 1.1);
      CHECK(p.coeff(0).real() == doctest::Approx(1.0));
      CHECK(p.min_on_grid(1024) >= -1e-12);
      // Concentrates at theta.
      CHECK(p.argmax_on_grid(1024) == doctest::Approx(1.1).epsilon(1e-2));
    }
  }
}

TEST_CASE("power_kernel") {
  SUBCASE("first powers reproduce 1 - cos(mt)") {
    for (int m : {1, 2}) {
      const TrigPoly p = truncirc::power_kernel(m, 1, 0.0);
      CHECK(p.coeff(m).real() == doctest::Approx(-0.5));
      CHECK(p.coeff(0).real() == doctest::Approx(1.0));
    }
  }
  SUBCASE("square of 1 - cos t") {
    // (1-cos t)^2 = 3/2 - 2 cos t + (1/2) cos 2t, then divide by 3/2.
    const TrigPoly p = truncirc::power_kernel(1, 2, 0.0);
    CHECK(p.coeff(-2).real() == doctest::Approx(1.0 / 6.0));
    CHECK(p.coeff(-1).real() == doctest::Approx(-2.0 / 3.0));
    CHECK(p.coeff(0).real() == doctest::Approx(1.0));
    CHECK(p.coeff(1).real() == doctest::Approx(-2.0 / 3.0));
    CHECK(p.coeff(2).real() == doctest::Approx(1.0 / 6.0));
    CHECK(fourier_coeff_quadrature(p, 0).real() == doctest::Approx(1.0));
    CHECK(fourier_coeff_quadrature(p, 1).real() == doctest::Approx(-2.0 / 3.0));
  }
  SUBCASE("zeros and maxima interleave at the expected angles") {
    const int m = 3, n = 2;
    const double rho = 0.4;
    const TrigPoly p = truncirc::power_kernel(m, n, rho);
    const int grid = 1 << 12;
    double max_val = 0.0;
    for (int i = 0; i < grid; ++i)
      max_val = std::max(max_val, p.eval_real(kTwoPi * i / grid));
    for (int j = 0; j < m; ++j) {
      CHECK(std::abs(p.eval_real(rho + kTwoPi * j / m)) < 1e-10);
      const double peak = rho + (2 * j + 1) * std::numbers::pi / m;
      CHECK(p.eval_real(peak) == doctest::Approx(max_val).epsilon(1e-6));
    }
  }
}
