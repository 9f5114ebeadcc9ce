#include "mf/dilate.hpp"

#include <algorithm>
#include <cmath>

namespace mf {

ValidationReport validate_spec(const DilationSpec& spec) {
  ValidationReport r;
  const int joint = spec.dim_s * spec.dim_t;
  if (spec.dim_s < 1 || spec.dim_t < 1) {
    r.violations.push_back({"dimension", 0.0});
    return r;
  }
  if (spec.phi.dim_in != joint || spec.phi.dim_out != joint)
    r.violations.push_back({"phi dimension", static_cast<double>(spec.phi.dim_in)});
  if (spec.sigma.dim != spec.dim_s)
    r.violations.push_back({"sigma dimension", static_cast<double>(spec.sigma.dim)});
  if (spec.y.dim != spec.dim_s)
    r.violations.push_back({"y dimension", static_cast<double>(spec.y.dim)});
  if (!r.ok()) return r;
  for (auto& v : validate_state(spec.sigma).violations) {
    v.invariant = "sigma " + v.invariant;
    r.violations.push_back(v);
  }
  for (auto& v : validate_channel(spec.phi).violations) {
    v.invariant = "phi " + v.invariant;
    r.violations.push_back(v);
  }
  for (auto& v : validate_povm(spec.y).violations) {
    v.invariant = "y " + v.invariant;
    r.violations.push_back(v);
  }
  return r;
}

namespace {

void check_dims(const DilationSpec& spec, const char* who) {
  const int joint = spec.dim_s * spec.dim_t;
  if (spec.phi.dim_in != joint || spec.phi.dim_out != joint ||
      spec.sigma.dim != spec.dim_s || spec.y.dim != spec.dim_s)
    throw DimensionError(std::string(who) +
                         ": dilation components do not match dim_s=" +
                         std::to_string(spec.dim_s) +
                         ", dim_t=" + std::to_string(spec.dim_t));
}

}  // namespace

DensityMatrix apply_apparatus(const DilationSpec& spec,
                              const DensityMatrix& rho) {
  check_dims(spec, "apply_apparatus");
  if (rho.dim != spec.dim_t)
    throw DimensionError("apply_apparatus: state dimension " +
                         std::to_string(rho.dim) + " vs target dimension " +
                         std::to_string(spec.dim_t));
  const DensityMatrix joint{spec.dim_s * spec.dim_t,
                            tensor(spec.sigma.matrix, rho.matrix)};
  const DensityMatrix out = apply_channel(spec.phi, joint);
  return {spec.dim_s, hermitian_part(partial_trace(out.matrix, spec.dim_s,
                                                   spec.dim_t, Keep::first))};
}

Povm induced_povm(const DilationSpec& spec) {
  check_dims(spec, "induced_povm");
  const ComplexMatrix id_t = identity(spec.dim_t);
  const ComplexMatrix sigma_ext = tensor(spec.sigma.matrix, id_t);
  Povm z;
  z.dim = spec.dim_t;
  for (const auto& e : spec.y.effects) {
    const ComplexMatrix heis = apply_adjoint(spec.phi, tensor(e.matrix, id_t));
    z.effects.push_back(
        {e.label, hermitian_part(partial_trace(sigma_ext * heis, spec.dim_s,
                                               spec.dim_t, Keep::second))});
  }
  return z;
}

DilationCheck is_generalized_dilation(const Povm& y, const Povm& z,
                                      const DilationSpec& spec, double tol) {
  if (y.size() != z.size())
    throw DimensionError("is_generalized_dilation: Y has " +
                         std::to_string(y.size()) + " outcomes but Z has " +
                         std::to_string(z.size()));
  if (z.dim != spec.dim_t)
    throw DimensionError("is_generalized_dilation: Z dimension " +
                         std::to_string(z.dim) + " vs target dimension " +
                         std::to_string(spec.dim_t));
  DilationSpec with_y = spec;
  with_y.y = y;
  const Povm induced = induced_povm(with_y);
  DilationCheck check;
  for (int i = 0; i < z.size(); ++i)
    check.residual = std::max(check.residual, max_abs(induced[i] - z[i]));
  check.holds = check.residual <= tol;
  return check;
}

DilationSpec naimark_construct(const Povm& z) {
  const ValidationReport report = validate_povm(z);
  if (!report.ok())
    throw DomainError("naimark_construct: invalid POVM: " + report.summary());
  const int n = z.size();
  const int d = z.dim;
  const int joint = n * d;

  ComplexMatrix u = ComplexMatrix::Zero(joint, joint);
  for (int k = 0; k < n; ++k) u.block(k * d, 0, d, d) = psd_sqrt(z[k]);

  int filled = d;
  for (int cand = 0; cand < joint && filled < joint; ++cand) {
    ComplexVector v = ComplexVector::Zero(joint);
    v(cand) = 1.0;
    for (int pass = 0; pass < 2; ++pass)
      for (int c = 0; c < filled; ++c) v -= u.col(c).dot(v) * u.col(c);
    const double norm = v.norm();
    if (norm > 1e-8) u.col(filled++) = v / norm;
  }
  if (filled != joint)
    throw DomainError("naimark_construct: unitary completion failed");

  DilationSpec spec;
  spec.dim_s = n;
  spec.dim_t = d;
  spec.sigma = {n, basis_projector(n, 0)};
  spec.phi = unitary_channel(u);
  spec.y = computational_basis(n);
  for (int k = 0; k < n; ++k) spec.y.effects[k].label = z.effects[k].label;
  return spec;
}

TuningCertificate verify_tuned(const std::vector<TuningPair>& pairs,
                               const std::vector<DilationSpec>& specs,
                               double tol) {
  if (pairs.size() != specs.size())
    throw DimensionError("verify_tuned: " + std::to_string(pairs.size()) +
                         " pairs but " + std::to_string(specs.size()) +
                         " dilations");
  TuningCertificate cert;
  cert.tol = tol;
  cert.vacuous = pairs.empty();
  cert.tuned = true;
  for (size_t i = 0; i < pairs.size(); ++i) {
    const DilationCheck check =
        is_generalized_dilation(pairs[i].y, pairs[i].z, specs[i], tol);
    cert.entries.push_back({pairs[i].name, pairs[i].y, pairs[i].z, specs[i],
                            check.residual, check.holds});
    cert.tuned = cert.tuned && check.holds;
  }
  return cert;
}

ProbabilisticTuningReport check_tuning_probabilistic(
    const DilationSpec& spec, const Povm& z, const SicPovm& sic_t,
    const SicPovm& sic_s, int n_states, std::uint64_t seed, double tol) {
  check_dims(spec, "check_tuning_probabilistic");
  if (sic_t.dim != spec.dim_t || sic_s.dim != spec.dim_s || z.dim != spec.dim_t)
    throw DimensionError("check_tuning_probabilistic: SIC dimensions do not "
                         "match the dilation");
  if (z.size() != spec.y.size())
    throw DimensionError("check_tuning_probabilistic: outcome count mismatch");

  ProbabilisticTuningReport report;
  report.n_states = std::max(0, n_states);
  report.vacuous = report.n_states == 0;
  const StochasticMatrix r_z = povm_to_conditional(sic_t, z);
  const StochasticMatrix r_y = povm_to_conditional(sic_s, spec.y);
  Rng rng(seed);
  for (int s = 0; s < report.n_states; ++s) {
    const DensityMatrix rho = random_state(spec.dim_t, rng);
    const OutcomeDistribution pz =
        urgleichung(state_to_sic_probs(rho, sic_t), r_z);
    const DensityMatrix rho_s = apply_apparatus(spec, rho);
    const OutcomeDistribution py =
        urgleichung(state_to_sic_probs(rho_s, sic_s), r_y);
    for (int j = 0; j < pz.size(); ++j)
      report.max_gap = std::max(report.max_gap, std::abs(pz.probs[j] - py.probs[j]));
  }
  report.agrees = report.max_gap <= tol;
  return report;
}

}  // namespace mf
