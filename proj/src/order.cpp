#include "mf/order.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mf/simplex.hpp"

namespace mf {

double bayes_update(double prior_h, double prior_e,
                    double likelihood_e_given_h) {
  if (!(prior_e > 0.0))
    throw DomainError("bayes_update: evidence has zero probability");
  return likelihood_e_given_h * prior_h / prior_e;
}

GeqResult povm_geq(const Povm& z, const Povm& x, double tol) {
  if (z.dim != x.dim)
    throw DimensionError("povm_geq: dimensions " + std::to_string(z.dim) +
                         " and " + std::to_string(x.dim) + " differ");
  const HermitianBasis basis(z.dim);
  const int nz = z.size(), nx = x.size(), nb = basis.size();

  std::vector<RealVector> zc, xc;
  for (int i = 0; i < nz; ++i) zc.push_back(basis.coordinates(hermitian_part(z[i])));
  for (int j = 0; j < nx; ++j) xc.push_back(basis.coordinates(hermitian_part(x[j])));

  // Variable λ(j|i) sits at column j * nz + i.
  const int rows = nx * nb + nz;
  RealMatrix a = RealMatrix::Zero(rows, nz * nx);
  RealVector b = RealVector::Zero(rows);
  for (int j = 0; j < nx; ++j)
    for (int k = 0; k < nb; ++k) {
      const int row = j * nb + k;
      for (int i = 0; i < nz; ++i) a(row, j * nz + i) = zc[i](k);
      b(row) = xc[j](k);
    }
  for (int i = 0; i < nz; ++i) {
    for (int j = 0; j < nx; ++j) a(nx * nb + i, j * nz + i) = 1.0;
    b(nx * nb + i) = 1.0;
  }

  const LpFeasibility lp = find_feasible_point(a, b, tol);
  GeqResult result;
  result.lp_residual = lp.infeasibility;
  if (!lp.feasible) return result;

  RealMatrix lam(nx, nz);
  for (int j = 0; j < nx; ++j)
    for (int i = 0; i < nz; ++i) lam(j, i) = std::max(0.0, lp.x(j * nz + i));
  for (int i = 0; i < nz; ++i) {
    const double s = lam.col(i).sum();
    if (s > 0) lam.col(i) /= s;
  }
  StochasticMatrix witness(std::move(lam));
  const Povm image = post_process(z, witness);
  for (int j = 0; j < nx; ++j)
    result.witness_residual =
        std::max(result.witness_residual, max_abs(image[j] - x[j]));
  result.holds = result.witness_residual <= tol;
  if (result.holds) result.witness = std::move(witness);
  return result;
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::geq: return "geq";
    case Relation::leq: return "leq";
    case Relation::equivalent: return "equivalent";
    case Relation::incomparable: return "incomparable";
  }
  return "incomparable";
}

Relation relation_from_string(const std::string& s) {
  if (s == "geq") return Relation::geq;
  if (s == "leq") return Relation::leq;
  if (s == "equivalent") return Relation::equivalent;
  if (s == "incomparable") return Relation::incomparable;
  throw std::invalid_argument("unknown relation '" + s + "'");
}

namespace {
Relation relation_of(bool forward, bool backward) {
  if (forward && backward) return Relation::equivalent;
  if (forward) return Relation::geq;
  if (backward) return Relation::leq;
  return Relation::incomparable;
}
}  // namespace

OrderVerdict compare(const Povm& z, const Povm& x, double tol) {
  GeqResult fwd = povm_geq(z, x, tol);
  GeqResult bwd = povm_geq(x, z, tol);
  OrderVerdict v;
  v.relation = relation_of(fwd.holds, bwd.holds);
  v.witness_forward = std::move(fwd.witness);
  v.witness_backward = std::move(bwd.witness);
  v.lp_residual = std::max(fwd.lp_residual, bwd.lp_residual);
  return v;
}

bool is_trivial_class(const Povm& p, double tol) {
  for (const auto& e : p.effects) {
    const Complex scale = e.matrix.trace() / static_cast<double>(p.dim);
    if (max_abs(e.matrix - scale * identity(p.dim)) > tol) return false;
  }
  return true;
}

bool is_rank_one_povm(const Povm& p, double tol) {
  for (const auto& e : p.effects) {
    const RealVector ev = hermitian_eigenvalues(hermitian_part(e.matrix));
    const int above = static_cast<int>((ev.array() > tol).count());
    if (above > 1) return false;
  }
  return true;
}

bool set_geq(const std::vector<Povm>& zs, const std::vector<Povm>& xs,
             double tol) {
  for (const auto& x : xs) {
    bool reached = false;
    for (const auto& z : zs)
      if (povm_geq(z, x, tol).holds) {
        reached = true;
        break;
      }
    if (!reached) return false;
  }
  return true;
}

Relation compare_sets(const std::vector<Povm>& zs, const std::vector<Povm>& xs,
                      double tol) {
  return relation_of(set_geq(zs, xs, tol), set_geq(xs, zs, tol));
}

ValidationReport validate_model(const DecisionModel& model) {
  ValidationReport r;
  const int nw = static_cast<int>(model.prior.size());
  double sum = 0.0;
  for (double p : model.prior) {
    if (!(p >= -kProbabilityClamp)) r.violations.push_back({"prior nonnegative", -p});
    sum += p;
  }
  if (std::abs(sum - 1.0) > kProbabilityTol)
    r.violations.push_back({"prior normalized", std::abs(sum - 1.0)});
  if (model.channel.n_in() != nw)
    r.violations.push_back({"channel inputs", static_cast<double>(model.channel.n_in())});
  else if (model.channel.stochasticity_residual() > kProbabilityTol)
    r.violations.push_back({"channel stochastic", model.channel.stochasticity_residual()});
  if (model.utility.cols() != nw || model.utility.rows() < 1)
    r.violations.push_back({"utility shape", static_cast<double>(model.utility.cols())});
  else if (!model.utility.allFinite())
    r.violations.push_back({"utility finite", 0.0});
  return r;
}

UmaxResult u_max(const DecisionModel& model) {
  const ValidationReport report = validate_model(model);
  if (!report.ok())
    throw DomainError("u_max: invalid decision model: " + report.summary());
  const int nx = model.channel.n_out();
  const int nw = model.channel.n_in();
  const int ng = static_cast<int>(model.utility.rows());

  UmaxResult result;
  RealMatrix v = RealMatrix::Zero(ng, nx);
  for (int x = 0; x < nx; ++x) {
    int best = 0;
    double best_gain = -std::numeric_limits<double>::infinity();
    for (int g = 0; g < ng; ++g) {
      double gain = 0.0;
      for (int w = 0; w < nw; ++w)
        gain += model.utility(g, w) * model.channel(x, w) * model.prior[w];
      if (gain > best_gain) {
        best_gain = gain;
        best = g;
      }
    }
    result.value += best_gain;
    result.choice.push_back(best);
    v(best, x) = 1.0;
  }
  result.strategy = StochasticMatrix(std::move(v));
  return result;
}

double expected_utility(const DecisionModel& model,
                        const StochasticMatrix& strategy) {
  if (strategy.n_in() != model.channel.n_out() ||
      strategy.n_out() != model.utility.rows())
    throw DimensionError("expected_utility: strategy shape mismatch");
  double total = 0.0;
  for (int g = 0; g < strategy.n_out(); ++g)
    for (int x = 0; x < strategy.n_in(); ++x)
      for (int w = 0; w < model.channel.n_in(); ++w)
        total += model.utility(g, w) * strategy(g, x) * model.channel(x, w) *
                 model.prior[w];
  return total;
}

namespace {

StochasticMatrix statistics_channel(const Povm& p,
                                    const std::vector<DensityMatrix>& states) {
  RealMatrix q(p.size(), static_cast<int>(states.size()));
  for (size_t w = 0; w < states.size(); ++w) {
    const auto probs = born_probabilities(states[w], p).probs;
    for (int x = 0; x < p.size(); ++x) q(x, static_cast<int>(w)) = probs[x];
  }
  return StochasticMatrix(std::move(q));
}

}  // namespace

BlackwellReport blackwell_consistency(const Povm& z, const Povm& x,
                                      const std::vector<DensityMatrix>& states,
                                      int n_utilities, std::uint64_t seed,
                                      double tol) {
  BlackwellReport report;
  report.n_utilities = std::max(0, n_utilities);
  report.vacuous = report.n_utilities == 0 || states.empty();
  report.geq_holds = povm_geq(z, x, tol).holds;
  if (report.vacuous) return report;

  const int nw = static_cast<int>(states.size());
  DecisionModel zm{std::vector<double>(nw, 1.0 / nw),
                   statistics_channel(z, states), RealMatrix()};
  DecisionModel xm{zm.prior, statistics_channel(x, states), RealMatrix()};

  Rng rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int u = 0; u < report.n_utilities; ++u) {
    RealMatrix util(nw, nw);
    for (int g = 0; g < nw; ++g)
      for (int w = 0; w < nw; ++w) util(g, w) = unif(rng);
    zm.utility = util;
    xm.utility = util;
    const double vz = u_max(zm).value;
    const double vx = u_max(xm).value;
    if (report.geq_holds && vz < vx - 1e-9) ++report.monotonicity_violations;
    if (vx > vz + tol) {
      ++report.reversals;
      report.max_reversal = std::max(report.max_reversal, vx - vz);
      if (report.geq_holds) ++report.inconsistencies;
    }
  }
  report.consistent =
      report.monotonicity_violations == 0 && report.inconsistencies == 0;
  return report;
}

}  // namespace mf
