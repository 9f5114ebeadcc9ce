// SIC-POVM reference measurements, the Urgleichung and its classical
// counterpart, and discovery of a d-dimensional model behind a table of
// outcome statistics.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mf/measure.hpp"

namespace mf {

/// Symmetric informationally complete POVM with effects Π_i / d, where
/// Π_i = |ψ_i><ψ_i| are the fiducial projectors.
struct SicPovm {
  int dim = 0;
  std::vector<ComplexVector> fiducials;  // d² unit vectors
  Povm povm;

  int size() const { return static_cast<int>(fiducials.size()); }
  ComplexMatrix projector(int i) const {
    return fiducials[i] * fiducials[i].adjoint();
  }
};

/// Probabilities p(i) of the reference SIC outcomes.
struct SicProbVector {
  int dim = 0;
  std::vector<double> probs;
};

/// Throws DomainError("no built-in fiducial ...") unless d is 2 or 3.
///
/// d = 2: tetrahedron with Bloch vectors (1,1,1), (1,-1,-1), (-1,1,-1),
/// (-1,-1,1), all over √3. d = 3: Weyl–Heisenberg orbit X^a Z^b |ψ> of
/// |ψ> = (0, 1, -1)/√2, ordered by i = 3a + b.
SicPovm build_sic(int d);

/// Largest |  |<ψ_i|ψ_j>|² - 1/(d+1) | over i != j.
double sic_overlap_residual(const SicPovm& sic);

SicProbVector state_to_sic_probs(const DensityMatrix& rho, const SicPovm& sic);

/// ρ = Σ_i [(d+1) p(i) - 1/d] Π_i. Throws DomainError("non-quantum
/// probability vector") when the result is not a state.
DensityMatrix sic_probs_to_state(const SicProbVector& p, const SicPovm& sic);

/// r(j|i) = Tr(Π_i D_j): outcome statistics of `target` on the state left
/// behind by SIC outcome i.
StochasticMatrix povm_to_conditional(const SicPovm& sic, const Povm& target);

/// q(j) = Σ_i [(d+1) p(i) - 1/d] r(j|i). Throws DomainError("inconsistent
/// (p, r) pair") when some q(j) < -1e-9.
OutcomeDistribution urgleichung(const SicProbVector& p,
                                const StochasticMatrix& r,
                                std::vector<std::string> labels = {});

/// Law of total probability q(j) = Σ_i r(j|i) p(i).
OutcomeDistribution classical_rule(const SicProbVector& p,
                                   const StochasticMatrix& r,
                                   std::vector<std::string> labels = {});

// ---------------------------------------------------------------------------
// System discovery

struct MeasurementShape {
  std::string label;
  int n_outcomes = 0;
};

/// q[m][k][j]: probability of outcome j of measurement k on preparation m.
struct ProbabilityTable {
  int dim_hint = 0;
  std::vector<MeasurementShape> measurements;
  std::vector<std::vector<std::vector<double>>> q;

  int preparations() const { return static_cast<int>(q.size()); }
};

ValidationReport validate_table(const ProbabilityTable& table);

/// Table of Born probabilities for the given states and measurements.
ProbabilityTable tabulate(const std::vector<DensityMatrix>& states,
                          const std::vector<Povm>& measurements);

struct DiscoverOptions {
  int max_iters = 500;
  double tol = 1e-6;
  int restarts = 20;
  std::uint64_t seed = 0;
};

struct DiscoveryResult {
  bool feasible = false;
  int dim = 0;
  std::vector<DensityMatrix> states;
  std::vector<Povm> measurements;
  double residual = 0.0;  // max |Tr(ρ_m E^k_j) - q_mkj| of the best model
  int best_restart = -1;
};

/// Searches for states and POVMs in dimension d reproducing the table, by
/// alternating projected gradient over states and effects.
DiscoveryResult discover_system(const ProbabilityTable& table, int d,
                                const DiscoverOptions& opts = {});

/// Max reproduction error of a candidate model against a table.
double table_residual(const ProbabilityTable& table,
                      const std::vector<DensityMatrix>& states,
                      const std::vector<Povm>& measurements);

}  // namespace mf
