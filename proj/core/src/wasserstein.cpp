#include "truncirc/wasserstein.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "truncirc/errors.hpp"
#include "truncirc/transport_simplex.hpp"

namespace truncirc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0) t += kTwoPi;
  return t;
}

double arc_distance(double s, double t) {
  const double d = std::abs(wrap_angle(s) - wrap_angle(t));
  return std::min(d, kTwoPi - d);
}

// int_0^t rho d(lambda) for a trig-poly density, normalized Haar measure.
double density_cdf(const TrigPoly& rho, double t) {
  double acc = rho.coeff(0).real() * t / kTwoPi;
  for (int k = 1; k <= rho.degree(); ++k) {
    // c_k (e^{ikt}-1)/(ik) + conjugate term, over 2*pi.
    const std::complex<double> ck = rho.coeff(k);
    const std::complex<double> term =
        ck * (std::polar(1.0, k * t) - 1.0) / std::complex<double>(0.0, double(k));
    acc += 2.0 * term.real() / kTwoPi;
  }
  return acc;
}

}  // namespace

double circle_cdf(const CircleMeasure& mu, double t) {
  double f = 0.0;
  for (const auto& atom : mu.atoms)
    if (wrap_angle(atom.angle) < t) f += atom.weight;
  if (mu.density) f += density_cdf(*mu.density, t);
  return f;
}

W1Result w1_circle_detail(const CircleMeasure& mu, const CircleMeasure& nu,
                          int grid) {
  if (grid < 256) throw DomainError("w1_circle: grid must be >= 256");
  if (!mu.is_state(1e-9) || !nu.is_state(1e-9))
    throw DomainError("w1_circle: inputs must be states");

  // Breakpoints: the uniform grid plus every atom angle, so jumps land
  // exactly on segment boundaries.
  std::vector<double> breaks;
  breaks.reserve(size_t(grid) + mu.atoms.size() + nu.atoms.size() + 1);
  for (int i = 0; i < grid; ++i) breaks.push_back(kTwoPi * i / grid);
  for (const auto& atom : mu.atoms) breaks.push_back(wrap_angle(atom.angle));
  for (const auto& atom : nu.atoms) breaks.push_back(wrap_angle(atom.angle));
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  breaks.push_back(kTwoPi);

  // Segment values of h = F_mu - F_nu at midpoints (h is constant between
  // breakpoints for atomic parts; densities vary smoothly).
  const size_t segments = breaks.size() - 1;
  std::vector<double> value(segments), length(segments);
  for (size_t s = 0; s < segments; ++s) {
    const double mid = 0.5 * (breaks[s] + breaks[s + 1]);
    value[s] = circle_cdf(mu, mid) - circle_cdf(nu, mid);
    length[s] = breaks[s + 1] - breaks[s];
  }

  // Optimal shift: weighted median of the segment values.
  std::vector<size_t> order(segments);
  for (size_t s = 0; s < segments; ++s) order[s] = s;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return value[a] < value[b]; });
  double half = kTwoPi / 2.0, acc = 0.0, shift = value[order.back()];
  for (size_t s : order) {
    acc += length[s];
    if (acc >= half) {
      shift = value[s];
      break;
    }
  }

  double total = 0.0;
  for (size_t s = 0; s < segments; ++s)
    total += length[s] * std::abs(value[s] - shift);
  return {total, shift};
}

double w1_circle(const CircleMeasure& mu, const CircleMeasure& nu, int grid) {
  return w1_circle_detail(mu, nu, grid).value;
}

double w1_lp_oracle(const CircleMeasure& mu, const CircleMeasure& nu, int grid) {
  if (grid < 8 || grid > 512)
    throw DomainError("w1_lp_oracle: grid must be in [8, 512]");
  if (!mu.is_state(1e-9) || !nu.is_state(1e-9))
    throw DomainError("w1_lp_oracle: inputs must be states");

  // Bin each measure onto the grid: atoms to the nearest grid point, the
  // density by midpoint rule, then renormalize to mass 1.
  auto discretize = [&](const CircleMeasure& measure) {
    std::vector<double> w(size_t(grid), 0.0);
    for (const auto& atom : measure.atoms) {
      const int i = int(std::lround(wrap_angle(atom.angle) / kTwoPi * grid)) % grid;
      w[size_t(i)] += atom.weight;
    }
    if (measure.density) {
      for (int i = 0; i < grid; ++i)
        w[size_t(i)] +=
            std::max(0.0, measure.density->eval_real(kTwoPi * i / grid)) / grid;
    }
    double sum = 0.0;
    for (double v : w) sum += v;
    for (double& v : w) v /= sum;
    return w;
  };

  const auto wa = discretize(mu);
  const auto wb = discretize(nu);

  // Drop empty bins to keep the simplex instance small.
  std::vector<int> ia, ib;
  std::vector<double> supply, demand;
  for (int i = 0; i < grid; ++i) {
    if (wa[size_t(i)] > 0) {
      ia.push_back(i);
      supply.push_back(wa[size_t(i)]);
    }
    if (wb[size_t(i)] > 0) {
      ib.push_back(i);
      demand.push_back(wb[size_t(i)]);
    }
  }
  Eigen::MatrixXd cost(ia.size(), ib.size());
  for (size_t r = 0; r < ia.size(); ++r)
    for (size_t c = 0; c < ib.size(); ++c)
      cost(long(r), long(c)) =
          arc_distance(kTwoPi * ia[r] / grid, kTwoPi * ib[c] / grid);
  return solve_transportation(supply, demand, cost);
}

}  // namespace truncirc
