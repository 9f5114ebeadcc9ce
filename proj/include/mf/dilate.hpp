// Generalized dilations: an auxiliary system S prepared in σ, coupled to the
// target T by a channel Φ on S ⊗ T, then measured with Y on S. The induced
// measurement on T is the one the apparatus simulates.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mf/measure.hpp"
#include "mf/sicrep.hpp"

namespace mf {

struct DilationSpec {
  int dim_s = 0;
  int dim_t = 0;
  DensityMatrix sigma;  // on S
  QuantumChannel phi;   // on S ⊗ T, S first
  Povm y;               // on S
};

ValidationReport validate_spec(const DilationSpec& spec);

/// ρ' = Tr_T[Φ(σ ⊗ ρ)].
DensityMatrix apply_apparatus(const DilationSpec& spec,
                              const DensityMatrix& rho);

/// Z_z = Tr_S[(σ ⊗ 1) Φ*(Y_z ⊗ 1)], labels taken from Y.
Povm induced_povm(const DilationSpec& spec);

struct DilationCheck {
  bool holds = false;
  double residual = 0.0;  // max entrywise |induced_z - Z_z|
};

/// Whether (σ, Φ, y) reproduces z outcome-by-outcome (paired by position).
/// Throws DimensionError when y and z differ in outcome count.
DilationCheck is_generalized_dilation(const Povm& y, const Povm& z,
                                      const DilationSpec& spec, double tol);

/// Naimark dilation: S has one level per outcome, σ = |0><0|, Y is the
/// computational basis of S, and Φ is a unitary whose first d_T columns are
/// the isometry |ψ> ↦ Σ_z |z> ⊗ √Z_z |ψ>, completed by Gram–Schmidt over the
/// standard basis in index order.
DilationSpec naimark_construct(const Povm& z);

struct TuningPair {
  std::string name;
  Povm y;  // measurement on S
  Povm z;  // paired measurement on T
};

struct TuningEntry {
  std::string name;
  Povm y;
  Povm z;
  DilationSpec spec;
  double residual = 0.0;
  bool holds = false;
};

struct TuningCertificate {
  std::vector<TuningEntry> entries;
  double tol = 0.0;
  bool tuned = false;
  bool vacuous = false;
};

/// Throws DimensionError if the two lists differ in length.
TuningCertificate verify_tuned(const std::vector<TuningPair>& pairs,
                               const std::vector<DilationSpec>& specs,
                               double tol);

struct ProbabilisticTuningReport {
  int n_states = 0;
  double max_gap = 0.0;  // max over states and outcomes of |P(z) - P(y)|
  bool agrees = false;   // max_gap <= tol
  bool vacuous = false;
};

/// Samples random states on T and compares the outcome probabilities of z,
/// computed with the Urgleichung on T, with those of the spec's Y applied to
/// ρ' = apply_apparatus(spec, ρ), computed with the Urgleichung on S.
/// Both dimensions must have a built-in SIC.
ProbabilisticTuningReport check_tuning_probabilistic(
    const DilationSpec& spec, const Povm& z, const SicPovm& sic_t,
    const SicPovm& sic_s, int n_states, std::uint64_t seed, double tol);

}  // namespace mf
