#include "truncirc/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "truncirc/errors.hpp"

namespace truncirc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0) t += kTwoPi;
  return t;
}

}  // namespace

PureState::PureState(std::vector<double> roots) : roots_(std::move(roots)) {
  for (double& r : roots_) r = wrap_angle(r);
  n_ = int(roots_.size()) + 1;

  // Coefficients of the monic polynomial prod_j (z - e^{i theta_j}) by
  // interpolation at the n-th roots of unity: evaluate the product pointwise
  // (a stable product of factors of modulus <= 2) and take the inverse DFT.
  // Unlike sequential expansion, whose intermediate coefficients can dwarf
  // the final ones when roots cluster, this keeps the coefficient error at
  // ~sqrt(n) * eps relative to the Euclidean norm of the result.
  // xi_k = c[k], so P(z) = sum_k xi_k z^k (up to normalization) vanishes at
  // the root angles and the pullback density below is |P(e^{it})|^2.
  std::vector<std::complex<double>> vals(static_cast<size_t>(n_));
  for (int p = 0; p < n_; ++p) {
    const auto z = std::polar(1.0, kTwoPi * p / n_);
    std::complex<double> v(1.0);
    for (double theta : roots_) v *= z - std::polar(1.0, theta);
    vals[size_t(p)] = v;
  }
  std::vector<std::complex<double>> c(size_t(n_), 0.0);
  for (int d = 0; d < n_; ++d) {
    std::complex<double> acc(0.0);
    for (int p = 0; p < n_; ++p)
      acc += vals[size_t(p)] * std::polar(1.0, -kTwoPi * double(p) * d / n_);
    c[size_t(d)] = acc / double(n_);
  }
  xi_.resize(n_);
  for (int k = 0; k < n_; ++k) xi_(k) = c[size_t(k)];
  xi_ /= xi_.norm();
  // Monic expansion keeps the leading coefficient xi_{n-1} = 1/norm > 0,
  // which fixes the global phase deterministically.
}

TrigPoly PureState::pullback_density() const {
  // |P(e^{it})|^2 via the autocorrelation of xi. Analytically this equals
  // root_form_density(roots_), but it stays well-conditioned for large root
  // counts where the explicit product of factors loses all precision.
  TrigPoly p(n_ - 1);
  for (int k = 0; k < n_; ++k) {
    std::complex<double> a(0.0);
    for (int j = 0; j + k < n_; ++j) a += std::conj(xi_(j)) * xi_(j + k);
    p.set_coeff(k, a);
    p.set_coeff(-k, std::conj(a));
  }
  return p;
}

MomentState::MomentState(int n, std::vector<std::complex<double>> moments)
    : n_(n), moments_(std::move(moments)) {
  if (n_ < 1) throw DomainError("MomentState: n must be >= 1");
  if (int(moments_.size()) != n_)
    throw DomainError("MomentState: expected n moments m_0..m_{n-1}");
  if (std::abs(moments_[0] - std::complex<double>(1.0)) > 1e-9)
    throw DomainError("MomentState: m_0 must be 1 (unital state)");
  moments_[0] = 1.0;

  ToeplitzMatrix t(n_);
  for (int k = 0; k < n_; ++k) t.set_hermitian_pair(k, moments_[size_t(k)]);
  // PSD of the moment matrix is exactly the condition for (m_k) to be a
  // truncated moment sequence of a positive measure; the degree-(n-1)
  // pullback polynomial itself may dip negative (e.g. for point masses,
  // whose truncation is a Dirichlet kernel), so no pointwise check here.
  if (!is_psd(t, 1e-9))
    throw DomainError("MomentState: moment matrix is not PSD");
}

std::complex<double> MomentState::moment(int k) const {
  if (k <= -n_ || k >= n_) return 0.0;
  if (k < 0) return std::conj(moments_[size_t(-k)]);
  return moments_[size_t(k)];
}

TrigPoly MomentState::pullback_density() const {
  // The density g must reproduce evaluate(state, compress(f, n)) as
  // integral f * g dHaar = sum_k fhat(k) ghat(-k), and evaluate pairs
  // fhat(k) with m_k, so ghat(k) = m_{-k}.
  TrigPoly p(n_ - 1);
  for (int k = -(n_ - 1); k <= n_ - 1; ++k) p.set_coeff(k, moment(-k));
  return p;
}

double CircleMeasure::total_mass() const {
  double mass = 0.0;
  for (const auto& atom : atoms) mass += atom.weight;
  if (density) mass += density->coeff(0).real();
  return mass;
}

bool CircleMeasure::is_state(double tol) const {
  for (const auto& atom : atoms)
    if (atom.weight < 0) return false;
  return std::abs(total_mass() - 1.0) <= tol;
}

CircleMeasure CircleMeasure::point(double angle) {
  return CircleMeasure{{{wrap_angle(angle), 1.0}}, std::nullopt};
}

CircleMeasure CircleMeasure::uniform() {
  return CircleMeasure{{}, TrigPoly::constant(1.0)};
}

CircleMeasure CircleMeasure::from_density(TrigPoly density) {
  return CircleMeasure{{}, std::move(density)};
}

PureState pure_from_roots(std::vector<double> angles) {
  return PureState(std::move(angles));
}

double evaluate(const PureState& state, const ToeplitzMatrix& t) {
  if (state.size() != t.size())
    throw DomainError("evaluate: state and matrix size mismatch");
  const std::complex<double> v = state.xi().dot(t.dense() * state.xi());
  return v.real();
}

double evaluate(const MomentState& state, const ToeplitzMatrix& t) {
  if (state.size() != t.size())
    throw DomainError("evaluate: state and matrix size mismatch");
  std::complex<double> v(0.0);
  const int n = t.size();
  for (int k = -(n - 1); k <= n - 1; ++k) v += t.diag(k) * state.moment(k);
  return v.real();
}

MomentState moment_state(const PureState& state) {
  const int n = state.size();
  const auto& xi = state.xi();
  std::vector<std::complex<double>> m(size_t(n), 0.0);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j + k < n; ++j) m[size_t(k)] += std::conj(xi(j + k)) * xi(j);
  return MomentState(n, std::move(m));
}

CircleMeasure pullback(const PureState& state) {
  return CircleMeasure::from_density(state.pullback_density());
}

CircleMeasure pullback(const MomentState& state) {
  return CircleMeasure::from_density(state.pullback_density());
}

MomentState moments_from_measure(const CircleMeasure& mu, int n) {
  if (!mu.is_state(1e-9))
    throw DomainError("moments_from_measure: measure is not a state");
  std::vector<std::complex<double>> m(size_t(n), 0.0);
  for (int k = 0; k < n; ++k) {
    std::complex<double> v(0.0);
    // m_k pairs with ghat(-k) in pullback_density, so an atom at angle a
    // contributes w * e^{+ika} and a density contributes its coefficient -k.
    for (const auto& atom : mu.atoms)
      v += atom.weight * std::polar(1.0, k * atom.angle);
    if (mu.density) v += mu.density->coeff(-k);
    m[size_t(k)] = v;
  }
  return MomentState(n, std::move(m));
}

PureState fejer_state(int n, double theta) {
  if (n < 1) throw DomainError("fejer_state: n must be >= 1");
  std::vector<double> roots;
  roots.reserve(size_t(n - 1));
  for (int j = 1; j < n; ++j) roots.push_back(theta + kTwoPi * j / n);
  return PureState(std::move(roots));
}

PureState approx_state(std::span<const double> weights, double big_n, int l,
                       double mu_extra) {
  const int m = int(weights.size());
  if (m < 1) throw DomainError("approx_state: need at least one weight");
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0) throw DomainError("approx_state: weights must be nonnegative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw DomainError("approx_state: weights must sum to 1");
  if (big_n <= 0) throw DomainError("approx_state: N must be positive");
  if (l < 0) throw DomainError("approx_state: l must be >= 0");

  // With an extra root of multiplicity l at mu_extra, pre-compensate the
  // weights so the density ratio at the lambda_j still matches `weights`.
  std::vector<double> adjusted(weights.begin(), weights.end());
  if (l >= 1) {
    double total = 0.0;
    for (int j = 0; j < m; ++j) {
      const double lambda = kTwoPi * (j + 1) / m;
      const double gap = 1.0 - std::cos(lambda - mu_extra);
      if (gap < 1e-12)
        throw DomainError("approx_state: mu_extra coincides with a lambda_j");
      adjusted[size_t(j)] /= std::pow(gap, l);
      total += adjusted[size_t(j)];
    }
    for (double& w : adjusted) w /= total;
  }

  std::vector<double> roots;
  roots.reserve(size_t(m + l));
  for (int j = 0; j < m; ++j) {
    const double lambda = kTwoPi * (j + 1) / m;
    roots.push_back(lambda - std::sqrt(2.0 * adjusted[size_t(j)] / big_n));
  }
  for (int i = 0; i < l; ++i) roots.push_back(mu_extra);
  return PureState(std::move(roots));
}

PureState power_state(int m, int n, double rotation) {
  if (m < 1 || n < 1) throw DomainError("power_state: m, n must be >= 1");
  std::vector<double> roots;
  roots.reserve(size_t(m) * size_t(n));
  for (int j = 0; j < m; ++j)
    for (int rep = 0; rep < n; ++rep) roots.push_back(rotation + kTwoPi * j / m);
  return PureState(std::move(roots));
}

PureState product_state(const PureState& phi, int m, int n, double rotation) {
  if (m < 1 || n < 1) throw DomainError("product_state: m, n must be >= 1");
  const TrigPoly density = phi.pullback_density();
  // Kernel maxima are at rotation + (2j+1)pi/m.
  bool any_nonzero = false;
  for (int j = 0; j < m; ++j) {
    const double peak = rotation + (2 * j + 1) * std::numbers::pi / m;
    if (std::abs(density.eval_real(peak)) > 1e-12) {
      any_nonzero = true;
      break;
    }
  }
  if (!any_nonzero)
    throw DomainError(
        "product_state: density of phi vanishes at every kernel maximum");

  std::vector<double> roots = phi.roots();
  const PureState power = power_state(m, n, rotation);
  roots.insert(roots.end(), power.roots().begin(), power.roots().end());
  return PureState(std::move(roots));
}

}  // namespace truncirc
