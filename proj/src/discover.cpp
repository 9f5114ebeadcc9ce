// Alternating projected-gradient search for a quantum model of a
// probability table.
#include <algorithm>
#include <cmath>
#include <limits>

#include "mf/sicrep.hpp"

namespace mf {

ValidationReport validate_table(const ProbabilityTable& table) {
  ValidationReport r;
  if (table.q.empty()) r.violations.push_back({"preparations", 0.0});
  for (int m = 0; m < table.preparations(); ++m) {
    if (table.q[m].size() != table.measurements.size()) {
      r.violations.push_back({"measurement count", 0.0, m});
      continue;
    }
    for (size_t k = 0; k < table.measurements.size(); ++k) {
      const auto& row = table.q[m][k];
      if (static_cast<int>(row.size()) != table.measurements[k].n_outcomes) {
        r.violations.push_back({"outcome count", 0.0, m});
        continue;
      }
      double sum = 0.0;
      for (double x : row) {
        if (!std::isfinite(x) || x < -kProbabilityClamp)
          r.violations.push_back({"nonnegative", -x, m});
        sum += x;
      }
      if (std::abs(sum - 1.0) > kProbabilityTol)
        r.violations.push_back({"normalized", std::abs(sum - 1.0), m});
    }
  }
  return r;
}

ProbabilityTable tabulate(const std::vector<DensityMatrix>& states,
                          const std::vector<Povm>& measurements) {
  ProbabilityTable t;
  t.dim_hint = states.empty() ? 0 : states.front().dim;
  for (size_t k = 0; k < measurements.size(); ++k)
    t.measurements.push_back({"M" + std::to_string(k), measurements[k].size()});
  for (const auto& rho : states) {
    std::vector<std::vector<double>> row;
    for (const auto& p : measurements)
      row.push_back(born_probabilities(rho, p).probs);
    t.q.push_back(std::move(row));
  }
  return t;
}

double table_residual(const ProbabilityTable& table,
                      const std::vector<DensityMatrix>& states,
                      const std::vector<Povm>& measurements) {
  double worst = 0.0;
  for (int m = 0; m < table.preparations(); ++m)
    for (size_t k = 0; k < measurements.size(); ++k)
      for (int j = 0; j < measurements[k].size(); ++j)
        worst = std::max(
            worst,
            std::abs(trace_product_real(states[m].matrix, measurements[k][j]) -
                     table.q[m][k][j]));
  return worst;
}

namespace {

// Euclidean projection of a real vector onto the probability simplex.
RealVector project_simplex(const RealVector& v) {
  std::vector<double> u(v.data(), v.data() + v.size());
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumsum = 0.0, shift = 0.0;
  for (size_t i = 0; i < u.size(); ++i) {
    cumsum += u[i];
    const double t = (cumsum - 1.0) / static_cast<double>(i + 1);
    if (u[i] - t > 0) shift = t;
  }
  return (v.array() - shift).cwiseMax(0.0);
}

ComplexMatrix project_density(const ComplexMatrix& h) {
  const Eigensystem es = hermitian_eigensystem(hermitian_part(h));
  const RealVector w = project_simplex(es.values);
  return hermitian_part(es.vectors * w.cast<Complex>().asDiagonal() *
                        es.vectors.adjoint());
}

// Projection onto {E_j ⪰ 0, Σ E_j = I}: Dykstra iteration between the PSD
// cone (per effect) and the completeness hyperplane, followed by a
// congruence that makes the result exactly valid.
constexpr int kDykstraRounds = 30;
std::vector<ComplexMatrix> project_povm(std::vector<ComplexMatrix> e, int dim) {
  const int n = static_cast<int>(e.size());
  std::vector<ComplexMatrix> p_corr(n, ComplexMatrix::Zero(dim, dim));
  std::vector<ComplexMatrix> q_corr(n, ComplexMatrix::Zero(dim, dim));
  const ComplexMatrix id = identity(dim);
  for (int round = 0; round < kDykstraRounds; ++round) {
    double change = 0.0;
    std::vector<ComplexMatrix> y(n);
    for (int j = 0; j < n; ++j) {
      y[j] = project_psd(e[j] + p_corr[j]);
      p_corr[j] = e[j] + p_corr[j] - y[j];
    }
    ComplexMatrix excess = -id;
    for (int j = 0; j < n; ++j) excess += y[j] + q_corr[j];
    excess /= static_cast<double>(n);
    for (int j = 0; j < n; ++j) {
      const ComplexMatrix next = y[j] + q_corr[j] - excess;
      q_corr[j] = y[j] + q_corr[j] - next;
      change = std::max(change, max_abs(next - e[j]));
      e[j] = next;
    }
    if (change < 1e-13) break;
  }
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  for (auto& x : e) {
    x = project_psd(x);
    sum += x;
  }
  const ComplexMatrix s_inv = psd_inv_sqrt(hermitian_part(sum));
  for (auto& x : e) x = hermitian_part(s_inv * x * s_inv);
  return e;
}

struct Model {
  std::vector<ComplexMatrix> states;
  std::vector<std::vector<ComplexMatrix>> effects;
};

double model_residual(const ProbabilityTable& t, const Model& model) {
  double worst = 0.0;
  for (int m = 0; m < t.preparations(); ++m)
    for (size_t k = 0; k < model.effects.size(); ++k)
      for (size_t j = 0; j < model.effects[k].size(); ++j)
        worst = std::max(
            worst, std::abs(trace_product_real(model.states[m],
                                               model.effects[k][j]) -
                            t.q[m][k][j]));
  return worst;
}

constexpr int kInnerSteps = 5;
constexpr int kStallWindow = 50;

void fit_states(const ProbabilityTable& t, Model& model) {
  double lipschitz = 0.0;
  for (const auto& meas : model.effects)
    for (const auto& e : meas) lipschitz += 2.0 * e.squaredNorm();
  if (lipschitz <= 0.0) return;
  const double step = 1.0 / lipschitz;
  for (int m = 0; m < t.preparations(); ++m) {
    ComplexMatrix& rho = model.states[m];
    for (int it = 0; it < kInnerSteps; ++it) {
      ComplexMatrix grad = ComplexMatrix::Zero(rho.rows(), rho.cols());
      for (size_t k = 0; k < model.effects.size(); ++k)
        for (size_t j = 0; j < model.effects[k].size(); ++j) {
          const ComplexMatrix& e = model.effects[k][j];
          grad += 2.0 * (trace_product_real(rho, e) - t.q[m][k][j]) * e;
        }
      rho = project_density(rho - step * grad);
    }
  }
}

void fit_effects(const ProbabilityTable& t, Model& model, int dim) {
  double lipschitz = 0.0;
  for (const auto& rho : model.states) lipschitz += 2.0 * rho.squaredNorm();
  if (lipschitz <= 0.0) return;
  const double step = 1.0 / lipschitz;
  for (size_t k = 0; k < model.effects.size(); ++k) {
    auto& effects = model.effects[k];
    for (int it = 0; it < kInnerSteps; ++it) {
      std::vector<ComplexMatrix> moved(effects.size());
      for (size_t j = 0; j < effects.size(); ++j) {
        ComplexMatrix grad = ComplexMatrix::Zero(dim, dim);
        for (int m = 0; m < t.preparations(); ++m)
          grad += 2.0 *
                  (trace_product_real(model.states[m], effects[j]) -
                   t.q[m][k][j]) *
                  model.states[m];
        moved[j] = effects[j] - step * grad;
      }
      effects = project_povm(std::move(moved), dim);
    }
  }
}

Model random_model(const ProbabilityTable& t, int dim, Rng& rng) {
  Model model;
  for (int m = 0; m < t.preparations(); ++m)
    model.states.push_back(random_state(dim, rng).matrix);
  for (const auto& shape : t.measurements) {
    const Povm p = random_povm(dim, shape.n_outcomes, rng);
    std::vector<ComplexMatrix> effects;
    for (const auto& e : p.effects) effects.push_back(e.matrix);
    model.effects.push_back(std::move(effects));
  }
  return model;
}

}  // namespace

DiscoveryResult discover_system(const ProbabilityTable& table, int d,
                                const DiscoverOptions& opts) {
  const ValidationReport report = validate_table(table);
  if (!report.ok())
    throw DomainError("discover_system: invalid table: " + report.summary());
  if (d < 1) throw DimensionError("discover_system: dimension must be >= 1");

  DiscoveryResult best;
  best.dim = d;
  best.residual = std::numeric_limits<double>::infinity();
  Model best_model;

  for (int restart = 0; restart < std::max(1, opts.restarts); ++restart) {
    Rng rng(opts.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(restart));
    Model model = random_model(table, d, rng);
    double residual = model_residual(table, model);
    double checkpoint = residual;
    for (int iter = 0; iter < opts.max_iters && residual > opts.tol; ++iter) {
      fit_states(table, model);
      fit_effects(table, model, d);
      residual = model_residual(table, model);
      // A restart that gains less than 0.1% over a window has stalled.
      if ((iter + 1) % kStallWindow == 0) {
        if (residual > (1.0 - 1e-3) * checkpoint) break;
        checkpoint = residual;
      }
    }
    if (residual < best.residual) {
      best.residual = residual;
      best.best_restart = restart;
      best_model = std::move(model);
    }
    if (best.residual <= opts.tol) break;
  }

  for (const auto& rho : best_model.states) best.states.push_back({d, rho});
  for (size_t k = 0; k < best_model.effects.size(); ++k)
    best.measurements.push_back(Povm::from_matrices(best_model.effects[k]));
  for (size_t k = 0; k < best.measurements.size(); ++k)
    for (int j = 0; j < best.measurements[k].size(); ++j)
      best.measurements[k].effects[j].label =
          table.measurements[k].label + ":" + std::to_string(j);

  // The verdict is re-derived from the returned model itself.
  best.residual = table_residual(table, best.states, best.measurements);
  bool valid = best.residual <= opts.tol;
  for (const auto& rho : best.states) valid = valid && validate_state(rho).ok();
  for (const auto& p : best.measurements) valid = valid && validate_povm(p).ok();
  best.feasible = valid;
  return best;
}

}  // namespace mf
