#include "truncirc/experiments.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "truncirc/errors.hpp"
#include "truncirc/gh.hpp"
#include "truncirc/wasserstein.hpp"

namespace truncirc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Deterministic uniform [0, 1) independent of library distribution internals.
double next_unit(std::mt19937_64& rng) {
  return double(rng() >> 11) * 0x1.0p-53;
}

PureState random_pure_state(int n, std::mt19937_64& rng) {
  std::vector<double> roots(size_t(n - 1));
  for (double& r : roots) r = kTwoPi * next_unit(rng);
  return PureState(std::move(roots));
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

std::vector<DistortionRow> run_distortion_study(const ExperimentConfig& cfg) {
  if (cfg.n_values.empty())
    throw DomainError("distortion study: empty n-range");
  std::vector<DistortionRow> rows;
  for (int n : cfg.n_values) {
    std::mt19937_64 rng(cfg.seed ^ (0x9e3779b97f4a7c15ULL * std::uint64_t(n)));
    const auto start = std::chrono::steady_clock::now();

    std::vector<PureState> states;
    std::vector<MomentState> moments;
    std::vector<CircleMeasure> measures;
    for (int s = 0; s < cfg.samples; ++s) {
      states.push_back(random_pure_state(n, rng));
      moments.push_back(moment_state(states.back()));
      measures.push_back(pullback(states.back()));
    }

    DistortionRow row{n, 0, 0.0, 0.0, 0.0, true};
    double sum = 0.0;
    for (int i = 0; i < cfg.samples; ++i)
      for (int j = i + 1; j < cfg.samples; ++j) {
        const auto cert =
            connes_distance(moments[size_t(i)], moments[size_t(j)], cfg.solver);
        row.all_converged = row.all_converged && cert.converged;
        const double w1 =
            w1_circle(measures[size_t(i)], measures[size_t(j)], cfg.grid);
        const double disc = std::abs(cert.value - w1);
        row.max_discrepancy = std::max(row.max_discrepancy, disc);
        sum += disc;
        ++row.sampled_pairs;
      }
    row.mean_discrepancy = row.sampled_pairs ? sum / row.sampled_pairs : 0.0;
    row.runtime_s = cfg.timing
                        ? std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - start)
                              .count()
                        : 0.0;
    rows.push_back(row);
  }
  return rows;
}

std::vector<ApproxRow> run_approximation_study(const ExperimentConfig& cfg,
                                               const CircleMeasure& target) {
  if (!target.is_state(1e-9))
    throw DomainError("approximation study: target is not a state");
  const int m = cfg.m;
  if (m < 1) throw DomainError("approximation study: m must be >= 1");

  // Stage 1: snap the target onto the m-th roots of unity. Atom mass moves
  // to the nearest root; density mass integrates over each root's arc.
  std::vector<double> weights(size_t(m), 0.0);
  auto nearest_root = [&](double angle) {
    int j = int(std::lround(angle / (kTwoPi / m))) % m;
    if (j < 0) j += m;
    return j;  // root angle 2*pi*j/m, with j = 0 meaning angle 0 (= lambda_m)
  };
  for (const auto& atom : target.atoms)
    weights[size_t(nearest_root(atom.angle))] += atom.weight;
  if (target.density) {
    const CircleMeasure density_part{{}, target.density};
    for (int j = 0; j < m; ++j) {
      const double lo = kTwoPi * j / m - kTwoPi / (2 * m);
      const double hi = lo + kTwoPi / m;
      double mass = 0.0;
      if (lo < 0) {
        mass = circle_cdf(density_part, hi) +
               (circle_cdf(density_part, kTwoPi) - circle_cdf(density_part, lo + kTwoPi));
      } else {
        mass = circle_cdf(density_part, hi) - circle_cdf(density_part, lo);
      }
      weights[size_t(j)] += mass;
    }
  }
  double total = 0.0;
  for (double w : weights) total += w;
  for (double& w : weights) w /= total;

  CircleMeasure snapped;
  for (int j = 0; j < m; ++j)
    if (weights[size_t(j)] > 0)
      snapped.atoms.push_back({kTwoPi * j / m, weights[size_t(j)]});

  std::vector<ApproxRow> rows;
  rows.push_back(
      {1, double(m), 0, w1_circle(target, snapped, cfg.grid), 0.0});

  // approx_state orders weights by lambda_j = 2*pi*j/m for j = 1..m.
  std::vector<double> ordered(static_cast<size_t>(m));
  for (int j = 1; j <= m; ++j) ordered[size_t(j - 1)] = weights[size_t(j % m)];

  auto ratio_error = [&](const PureState& phi) {
    const TrigPoly density = phi.pullback_density();
    std::vector<double> vals(static_cast<size_t>(m));
    double sum = 0.0;
    for (int j = 1; j <= m; ++j) {
      vals[size_t(j - 1)] = std::max(0.0, density.eval_real(kTwoPi * j / m));
      sum += vals[size_t(j - 1)];
    }
    double err = 0.0;
    for (int j = 0; j < m; ++j)
      err = std::max(err, std::abs(vals[size_t(j)] / sum - ordered[size_t(j)]));
    return err;
  };

  // Stage 2: fit the weights with offset roots at increasing N.
  PureState phi = approx_state(ordered, cfg.big_ns.empty() ? 1e4 : cfg.big_ns.back(),
                               0);
  for (double big_n : cfg.big_ns) {
    const PureState cand = approx_state(ordered, big_n, 0);
    rows.push_back({2, big_n, cand.size(),
                    w1_circle(target, pullback(cand), cfg.grid),
                    ratio_error(cand)});
    phi = cand;
  }

  // Stage 3: multiply by rising powers of the kernel whose maxima sit at the
  // m-th roots of unity (rotation pi/m).
  const double rotation = std::numbers::pi / m;
  for (int power : cfg.powers) {
    const PureState chi = product_state(phi, m, power, rotation);
    rows.push_back({3, double(power), chi.size(),
                    w1_circle(target, pullback(chi), cfg.grid),
                    ratio_error(chi)});
  }
  return rows;
}

std::vector<RecoveryRow> run_circle_recovery(const ExperimentConfig& cfg) {
  if (cfg.n_values.empty())
    throw DomainError("circle recovery: empty n-range");
  const int count = cfg.samples;
  if (count < 1) throw DomainError("circle recovery: need at least one sample");

  std::vector<double> lambdas(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) lambdas[size_t(i)] = kTwoPi * i / count;

  FinitePointCloud circle;
  circle.dist = Eigen::MatrixXd::Zero(count, count);
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) {
      const double d = std::abs(lambdas[size_t(i)] - lambdas[size_t(j)]);
      circle.dist(i, j) = std::min(d, kTwoPi - d);
    }

  std::vector<RecoveryRow> rows;
  for (int n : cfg.n_values) {
    std::vector<MomentState> moments;
    for (double lambda : lambdas)
      moments.push_back(moment_state(fejer_state(n, lambda)));

    bool all_converged = true;
    FinitePointCloud truncated;
    truncated.dist = Eigen::MatrixXd::Zero(count, count);
    for (int i = 0; i < count; ++i)
      for (int j = i + 1; j < count; ++j) {
        const auto cert =
            connes_distance(moments[size_t(i)], moments[size_t(j)], cfg.solver);
        all_converged = all_converged && cert.converged;
        truncated.dist(i, j) = cert.value;
        truncated.dist(j, i) = cert.value;
      }

    Correspondence pairing;
    for (int i = 0; i < count; ++i) pairing.pairs.push_back({i, i});
    const double dis = distortion_correspondence(pairing, truncated, circle);

    double max_rel = 0.0;
    for (int i = 0; i < count; ++i)
      for (int j = i + 1; j < count; ++j)
        if (circle.dist(i, j) > 0)
          max_rel = std::max(max_rel,
                             std::abs(truncated.dist(i, j) - circle.dist(i, j)) /
                                 circle.dist(i, j));

    rows.push_back({n, count, dis, dis / 2.0, max_rel, all_converged});
  }
  return rows;
}

DistanceRecord run_distance(const ExperimentConfig& cfg, const AnyState& a,
                            const AnyState& b) {
  int n = 0;
  if (const auto* p = std::get_if<PureState>(&a)) n = p->size();
  else if (const auto* ms = std::get_if<MomentState>(&a)) n = ms->size();
  if (n == 0) {
    if (const auto* p = std::get_if<PureState>(&b)) n = p->size();
    else if (const auto* ms = std::get_if<MomentState>(&b)) n = ms->size();
  }
  if (n == 0) n = cfg.n_values.empty() ? 8 : cfg.n_values.front();

  const MomentState phi = to_moment_state(a, n);
  const MomentState psi = to_moment_state(b, n);
  const auto cert = connes_distance(phi, psi, cfg.solver);
  const double w1 = w1_circle(to_measure(a), to_measure(b), cfg.grid);

  DistanceRecord record;
  record.n = n;
  record.d_n = cert.value;
  record.w1_of_pullbacks = w1;
  record.feasibility = cert.feasibility;
  record.converged = cert.converged;
  record.iterations = cert.iterations;
  for (int k = 0; k < n; ++k)
    record.maximizer_diags.push_back(cert.maximizer.diag(k));
  return record;
}

std::string render_distortion(const std::vector<DistortionRow>& rows,
                              OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::ostringstream out;
    out << "n,sampled_pairs,max_discrepancy_lower_estimate,"
           "mean_discrepancy_lower_estimate,runtime_s,all_converged\n";
    for (const auto& r : rows)
      out << r.n << ',' << r.sampled_pairs << ','
          << format_double(r.max_discrepancy) << ','
          << format_double(r.mean_discrepancy) << ','
          << format_double(r.runtime_s) << ',' << (r.all_converged ? 1 : 0)
          << '\n';
    return out.str();
  }
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rows)
    j.push_back({{"n", r.n},
                 {"sampled_pairs", r.sampled_pairs},
                 {"max_discrepancy_lower_estimate", r.max_discrepancy},
                 {"mean_discrepancy_lower_estimate", r.mean_discrepancy},
                 {"runtime_s", r.runtime_s},
                 {"all_converged", r.all_converged}});
  return j.dump(2) + "\n";
}

std::string render_approximation(const std::vector<ApproxRow>& rows,
                                 OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::ostringstream out;
    out << "stage,param,state_size,w1_to_target,ratio_error\n";
    for (const auto& r : rows)
      out << r.stage << ',' << format_double(r.param) << ',' << r.state_size
          << ',' << format_double(r.w1_to_target) << ','
          << format_double(r.ratio_error) << '\n';
    return out.str();
  }
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rows)
    j.push_back({{"stage", r.stage},
                 {"param", r.param},
                 {"state_size", r.state_size},
                 {"w1_to_target", r.w1_to_target},
                 {"ratio_error", r.ratio_error}});
  return j.dump(2) + "\n";
}

std::string render_recovery(const std::vector<RecoveryRow>& rows,
                            OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::ostringstream out;
    out << "n,sampled_lambda_count,distortion_lower_estimate,gh_upper_bound,"
           "max_rel_arc_error,all_converged\n";
    for (const auto& r : rows)
      out << r.n << ',' << r.sampled_lambda_count << ','
          << format_double(r.distortion_estimate) << ','
          << format_double(r.gh_upper_bound) << ','
          << format_double(r.max_rel_arc_error) << ','
          << (r.all_converged ? 1 : 0) << '\n';
    return out.str();
  }
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rows)
    j.push_back({{"n", r.n},
                 {"sampled_lambda_count", r.sampled_lambda_count},
                 {"distortion_lower_estimate", r.distortion_estimate},
                 {"gh_upper_bound", r.gh_upper_bound},
                 {"max_rel_arc_error", r.max_rel_arc_error},
                 {"all_converged", r.all_converged}});
  return j.dump(2) + "\n";
}

std::string render_distance(const DistanceRecord& record, OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::ostringstream out;
    out << "n,d_n,w1_of_pullbacks,feasibility,converged,iterations,"
           "maximizer_diags\n";
    out << record.n << ',' << format_double(record.d_n) << ','
        << format_double(record.w1_of_pullbacks) << ','
        << format_double(record.feasibility) << ','
        << (record.converged ? 1 : 0) << ',' << record.iterations << ',';
    out << '"';
    for (size_t k = 0; k < record.maximizer_diags.size(); ++k) {
      if (k) out << ';';
      out << format_double(record.maximizer_diags[k].real()) << '+'
          << format_double(record.maximizer_diags[k].imag()) << 'i';
    }
    out << "\"\n";
    return out.str();
  }
  nlohmann::json diags = nlohmann::json::array();
  for (const auto& d : record.maximizer_diags)
    diags.push_back({d.real(), d.imag()});
  nlohmann::json j{{"n", record.n},
                   {"d_n", record.d_n},
                   {"w1_of_pullbacks", record.w1_of_pullbacks},
                   {"feasibility", record.feasibility},
                   {"converged", record.converged},
                   {"iterations", record.iterations},
                   {"maximizer_diags", diags}};
  return j.dump(2) + "\n";
}

}  // namespace truncirc
