// Preference order on measurements by classical post-processing, the
// maximum-expected-utility decision problem and Bayesian updating.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mf/measure.hpp"

namespace mf {

/// P(H|E) = P(E|H) P(H) / P(E). Throws DomainError when P(E) <= 0.
double bayes_update(double prior_h, double prior_e, double likelihood_e_given_h);

struct GeqResult {
  bool holds = false;
  std::optional<StochasticMatrix> witness;  // λ(x|z) when holds
  double lp_residual = 0.0;                 // phase-1 optimum
  double witness_residual = 0.0;            // max |post_process(z, λ) - x|
};

/// Whether x is a classical post-processing of z: X_j = Σ_i λ(j|i) Z_i for
/// some column-stochastic λ. Decided by LP feasibility with every operator
/// equation expanded in the orthonormal Hermitian basis.
GeqResult povm_geq(const Povm& z, const Povm& x, double tol);

enum class Relation { geq, leq, equivalent, incomparable };

std::string to_string(Relation r);
Relation relation_from_string(const std::string& s);

struct OrderVerdict {
  Relation relation = Relation::incomparable;
  std::optional<StochasticMatrix> witness_forward;   // z -> x
  std::optional<StochasticMatrix> witness_backward;  // x -> z
  double lp_residual = 0.0;                          // max of both directions
};

OrderVerdict compare(const Povm& z, const Povm& x, double tol);

/// Every effect is a multiple of the identity, i.e. equivalent to {1}.
bool is_trivial_class(const Povm& p, double tol);

/// Every nonzero effect has exactly one eigenvalue above tol.
bool is_rank_one_povm(const Povm& p, double tol);

// Set-level order: {Z} >= {X} iff every X is a post-processing of some
// single member of {Z}.
bool set_geq(const std::vector<Povm>& zs, const std::vector<Povm>& xs,
             double tol);
Relation compare_sets(const std::vector<Povm>& zs, const std::vector<Povm>& xs,
                      double tol);

// ---------------------------------------------------------------------------
// Decision problem

struct DecisionModel {
  std::vector<double> prior;  // P(w)
  StochasticMatrix channel;   // q(x|w): n_x × n_w
  RealMatrix utility;         // u(w', w): n_guess × n_w
};

ValidationReport validate_model(const DecisionModel& model);

struct UmaxResult {
  double value = 0.0;
  StochasticMatrix strategy;  // deterministic v(w'|x): n_guess × n_x
  std::vector<int> choice;    // argmax guess per x, lowest index on ties
};

/// sup over strategies of Σ u(w',w) v(w'|x) q(x|w) P(w), attained by the
/// deterministic per-outcome argmax.
UmaxResult u_max(const DecisionModel& model);

/// Expected utility of an arbitrary (possibly randomised) strategy.
double expected_utility(const DecisionModel& model,
                        const StochasticMatrix& strategy);

struct BlackwellReport {
  bool geq_holds = false;
  int n_utilities = 0;
  int monotonicity_violations = 0;  // witness exists but u_max(z) < u_max(x)
  int reversals = 0;                // u_max(x) > u_max(z) + tol
  int inconsistencies = 0;          // reversal although a witness exists
  double max_reversal = 0.0;
  bool vacuous = false;
  bool consistent = true;
};

/// Channels q(·|w) = Born statistics of z and x on the state family, uniform
/// prior over w, utilities drawn uniformly from [-1, 1].
BlackwellReport blackwell_consistency(const Povm& z, const Povm& x,
                                      const std::vector<DensityMatrix>& states,
                                      int n_utilities, std::uint64_t seed,
                                      double tol);

}  // namespace mf
