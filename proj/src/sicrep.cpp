#include "mf/sicrep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mf {

namespace {

// Eigenvector of (I + n·σ)/2 with eigenvalue 1, first nonzero entry real.
ComplexVector bloch_ket(double x, double y, double z) {
  const double theta = std::acos(std::clamp(z, -1.0, 1.0));
  const double phi = std::atan2(y, x);
  ComplexVector psi(2);
  psi(0) = std::cos(theta / 2);
  psi(1) = std::polar(std::sin(theta / 2), phi);
  return psi;
}

std::vector<ComplexVector> qubit_fiducials() {
  const double s = 1.0 / std::sqrt(3.0);
  return {bloch_ket(s, s, s), bloch_ket(s, -s, -s), bloch_ket(-s, s, -s),
          bloch_ket(-s, -s, s)};
}

std::vector<ComplexVector> qutrit_fiducials() {
  const double h = 1.0 / std::sqrt(2.0);
  ComplexVector fid(3);
  fid << 0.0, h, -h;
  const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  std::vector<ComplexVector> out;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      // X^a Z^b |fid>:  Z^b|j> = ω^{bj}|j>,  X^a|j> = |j+a>
      ComplexVector v = ComplexVector::Zero(3);
      for (int j = 0; j < 3; ++j)
        v((j + a) % 3) = std::pow(omega, b * j) * fid(j);
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace

SicPovm build_sic(int d) {
  SicPovm sic;
  sic.dim = d;
  if (d == 2)
    sic.fiducials = qubit_fiducials();
  else if (d == 3)
    sic.fiducials = qutrit_fiducials();
  else
    throw DomainError("no built-in fiducial for SIC dimension " +
                      std::to_string(d));
  sic.povm.dim = d;
  for (int i = 0; i < sic.size(); ++i)
    sic.povm.effects.push_back(
        {std::to_string(i), sic.projector(i) / static_cast<double>(d)});
  return sic;
}

double sic_overlap_residual(const SicPovm& sic) {
  const double target = 1.0 / (sic.dim + 1.0);
  double worst = 0.0;
  for (int i = 0; i < sic.size(); ++i)
    for (int j = 0; j < sic.size(); ++j)
      if (i != j)
        worst = std::max(
            worst, std::abs(std::norm(sic.fiducials[i].dot(sic.fiducials[j])) -
                            target));
  return worst;
}

SicProbVector state_to_sic_probs(const DensityMatrix& rho, const SicPovm& sic) {
  if (rho.dim != sic.dim)
    throw DimensionError("state_to_sic_probs: state dimension " +
                         std::to_string(rho.dim) + " vs SIC dimension " +
                         std::to_string(sic.dim));
  return {sic.dim, born_probabilities(rho, sic.povm).probs};
}

DensityMatrix sic_probs_to_state(const SicProbVector& p, const SicPovm& sic) {
  if (p.dim != sic.dim || static_cast<int>(p.probs.size()) != sic.size())
    throw DimensionError("sic_probs_to_state: probability vector does not "
                         "match the SIC");
  const double d = sic.dim;
  double sum = 0.0;
  for (double pi : p.probs) {
    if (pi < -kProbabilityTol || pi > 1.0 / d + kProbabilityTol)
      throw DomainError("non-quantum probability vector: entry " +
                        std::to_string(pi) + " outside [0, 1/d]");
    sum += pi;
  }
  if (std::abs(sum - 1.0) > kProbabilityTol)
    throw DomainError("non-quantum probability vector: sums to " +
                      std::to_string(sum));
  ComplexMatrix m = ComplexMatrix::Zero(sic.dim, sic.dim);
  for (int i = 0; i < sic.size(); ++i)
    m += ((d + 1.0) * p.probs[i] - 1.0 / d) * sic.projector(i);
  m = hermitian_part(m);
  const double min_eig = hermitian_eigenvalues(m).minCoeff();
  if (min_eig < -kPsdRejectTol)
    throw DomainError("non-quantum probability vector: reconstructed "
                      "operator has eigenvalue " +
                      std::to_string(min_eig));
  return {sic.dim, m};
}

StochasticMatrix povm_to_conditional(const SicPovm& sic, const Povm& target) {
  if (target.dim != sic.dim)
    throw DimensionError("povm_to_conditional: POVM dimension " +
                         std::to_string(target.dim) + " vs SIC dimension " +
                         std::to_string(sic.dim));
  RealMatrix r(target.size(), sic.size());
  for (int i = 0; i < sic.size(); ++i) {
    const ComplexVector& psi = sic.fiducials[i];
    for (int j = 0; j < target.size(); ++j)
      r(j, i) = psi.dot(target[j] * psi).real();
  }
  return StochasticMatrix(std::move(r));
}

namespace {

std::vector<std::string> default_labels(std::vector<std::string> labels,
                                        int n) {
  if (labels.empty())
    for (int j = 0; j < n; ++j) labels.push_back(std::to_string(j));
  if (static_cast<int>(labels.size()) != n)
    throw DimensionError("label count mismatch");
  return labels;
}

void check_reference_shape(const SicProbVector& p, const StochasticMatrix& r,
                           const char* who) {
  if (static_cast<int>(p.probs.size()) != p.dim * p.dim)
    throw DimensionError(std::string(who) +
                         ": probability vector must have d² entries");
  if (r.n_in() != p.dim * p.dim)
    throw DimensionError(std::string(who) + ": conditional has " +
                         std::to_string(r.n_in()) + " inputs, expected " +
                         std::to_string(p.dim * p.dim));
}

}  // namespace

OutcomeDistribution urgleichung(const SicProbVector& p,
                                const StochasticMatrix& r,
                                std::vector<std::string> labels) {
  check_reference_shape(p, r, "urgleichung");
  const double d = p.dim;
  std::vector<double> q(r.n_out(), 0.0);
  for (int i = 0; i < r.n_in(); ++i) {
    const double coeff = (d + 1.0) * p.probs[i] - 1.0 / d;
    for (int j = 0; j < r.n_out(); ++j) q[j] += coeff * r(j, i);
  }
  for (int j = 0; j < r.n_out(); ++j)
    if (q[j] < -1e-9)
      throw DomainError("inconsistent (p, r) pair: q(" + std::to_string(j) +
                        ") = " + std::to_string(q[j]));
  for (double& x : q) x = std::max(x, 0.0);
  return {default_labels(std::move(labels), r.n_out()),
          clean_probabilities(std::move(q))};
}

OutcomeDistribution classical_rule(const SicProbVector& p,
                                   const StochasticMatrix& r,
                                   std::vector<std::string> labels) {
  if (r.n_in() != static_cast<int>(p.probs.size()))
    throw DimensionError("classical_rule: conditional has " +
                         std::to_string(r.n_in()) + " inputs but p has " +
                         std::to_string(p.probs.size()) + " entries");
  std::vector<double> q(r.n_out(), 0.0);
  for (int i = 0; i < r.n_in(); ++i)
    for (int j = 0; j < r.n_out(); ++j) q[j] += r(j, i) * p.probs[i];
  return {default_labels(std::move(labels), r.n_out()),
          clean_probabilities(std::move(q))};
}

}  // namespace mf
