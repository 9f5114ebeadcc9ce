// States, POVMs, channels and classical post-processing.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mf/opalg.hpp"

namespace mf {

inline constexpr double kStateTol = 1e-10;
inline constexpr double kCompletenessTol = 1e-9;
inline constexpr double kProbabilityTol = 1e-10;
inline constexpr double kProbabilityClamp = 1e-12;

using Rng = std::mt19937_64;

struct DensityMatrix {
  int dim = 0;
  ComplexMatrix matrix;
};

struct Effect {
  std::string label;
  ComplexMatrix matrix;
};

struct Povm {
  int dim = 0;
  std::vector<Effect> effects;

  int size() const { return static_cast<int>(effects.size()); }
  const ComplexMatrix& operator[](int i) const { return effects[i].matrix; }
  std::vector<std::string> labels() const;

  /// Labels default to "0", "1", ...
  static Povm from_matrices(std::vector<ComplexMatrix> matrices,
                            std::vector<std::string> labels = {});
};

struct OutcomeDistribution {
  std::vector<std::string> labels;
  std::vector<double> probs;

  int size() const { return static_cast<int>(probs.size()); }
};

struct QuantumChannel {
  int dim_in = 0;
  int dim_out = 0;
  std::vector<ComplexMatrix> kraus;
};

/// Column-stochastic table of conditional probabilities λ(out | in).
class StochasticMatrix {
 public:
  StochasticMatrix() = default;
  /// entries has shape n_out × n_in; column j is the distribution for input j.
  explicit StochasticMatrix(RealMatrix entries);

  static StochasticMatrix identity(int n);
  /// Deterministic map sending input i to output targets[i].
  static StochasticMatrix deterministic(const std::vector<int>& targets,
                                        int n_out);

  int n_in() const { return static_cast<int>(entries_.cols()); }
  int n_out() const { return static_cast<int>(entries_.rows()); }
  double operator()(int out, int in) const { return entries_(out, in); }
  const RealMatrix& entries() const { return entries_; }

  /// Largest deviation from nonnegativity / unit column sums.
  double stochasticity_residual() const;

 private:
  RealMatrix entries_;
};

/// Post-processing by `first` and then by `second`, i.e. second · first.
StochasticMatrix compose(const StochasticMatrix& second,
                         const StochasticMatrix& first);

struct Violation {
  std::string invariant;
  double magnitude = 0.0;
  int effect = -1;  // -1 when not tied to one effect
  int row = -1;
  int col = -1;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

ValidationReport validate_povm(const Povm& p);
ValidationReport validate_state(const DensityMatrix& rho);
ValidationReport validate_channel(const QuantumChannel& phi);
ValidationReport validate_distribution(const OutcomeDistribution& q);

/// Wraps a matrix as a state, throwing DomainError on invariant breach.
DensityMatrix make_state(ComplexMatrix m);
DensityMatrix pure_state(const ComplexVector& psi);
DensityMatrix maximally_mixed(int dim);

/// Tr(ρ E_j) per effect, clamped at zero and renormalised.
OutcomeDistribution born_probabilities(const DensityMatrix& rho,
                                       const Povm& p);

/// E'_x = Σ_z λ(x|z) E_z. Output labels are "0", "1", ... unless given.
Povm post_process(const Povm& p, const StochasticMatrix& lam,
                  std::vector<std::string> labels = {});

DensityMatrix apply_channel(const QuantumChannel& phi,
                            const DensityMatrix& rho);
/// Heisenberg-picture map Σ K† X K.
ComplexMatrix apply_adjoint(const QuantumChannel& phi, const ComplexMatrix& x);

QuantumChannel identity_channel(int dim);
QuantumChannel unitary_channel(const ComplexMatrix& u);
/// Kraus set {|i><j| / √d}; sends every state to I/d.
QuantumChannel depolarizing_channel(int dim);

Povm computational_basis(int dim);
Povm trivial_povm(int dim);

/// Clamp entries in [-1e-12, 0) to zero and renormalise.
std::vector<double> clean_probabilities(std::vector<double> probs);

// Seeded fixtures. Ginibre states, normalised Wishart POVMs.
DensityMatrix random_state(int dim, Rng& rng);
DensityMatrix random_state(int dim, std::uint64_t seed);
DensityMatrix random_pure_state(int dim, Rng& rng);
Povm random_povm(int dim, int n_outcomes, Rng& rng);
Povm random_povm(int dim, int n_outcomes, std::uint64_t seed);
/// Rank-one projective measurement in a random orthonormal basis.
Povm random_projective_povm(int dim, Rng& rng);
ComplexMatrix random_unitary(int dim, Rng& rng);
QuantumChannel random_channel(int dim_in, int dim_out, int n_kraus, Rng& rng);
StochasticMatrix random_stochastic(int n_out, int n_in, Rng& rng);
ComplexMatrix random_hermitian(int dim, Rng& rng);

}  // namespace mf
