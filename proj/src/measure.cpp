#include "mf/measure.hpp"

#include <cmath>
#include <sstream>

namespace mf {

std::vector<std::string> Povm::labels() const {
  std::vector<std::string> out;
  out.reserve(effects.size());
  for (const auto& e : effects) out.push_back(e.label);
  return out;
}

Povm Povm::from_matrices(std::vector<ComplexMatrix> matrices,
                         std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != matrices.size())
    throw DimensionError("Povm::from_matrices: label count mismatch");
  Povm p;
  p.dim = matrices.empty() ? 0 : static_cast<int>(matrices.front().rows());
  for (size_t i = 0; i < matrices.size(); ++i)
    p.effects.push_back({labels.empty() ? std::to_string(i) : labels[i],
                         std::move(matrices[i])});
  return p;
}

StochasticMatrix::StochasticMatrix(RealMatrix entries)
    : entries_(std::move(entries)) {}

StochasticMatrix StochasticMatrix::identity(int n) {
  return StochasticMatrix(RealMatrix::Identity(n, n));
}

StochasticMatrix StochasticMatrix::deterministic(
    const std::vector<int>& targets, int n_out) {
  RealMatrix m = RealMatrix::Zero(n_out, static_cast<int>(targets.size()));
  for (size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= n_out)
      throw DimensionError("StochasticMatrix::deterministic: target out of range");
    m(targets[i], static_cast<int>(i)) = 1.0;
  }
  return StochasticMatrix(std::move(m));
}

double StochasticMatrix::stochasticity_residual() const {
  double worst = 0.0;
  if (entries_.size() > 0) worst = std::max(worst, -entries_.minCoeff());
  for (Eigen::Index j = 0; j < entries_.cols(); ++j)
    worst = std::max(worst, std::abs(entries_.col(j).sum() - 1.0));
  return worst;
}

StochasticMatrix compose(const StochasticMatrix& second,
                         const StochasticMatrix& first) {
  if (second.n_in() != first.n_out())
    throw DimensionError("compose: inner dimensions differ");
  return StochasticMatrix(second.entries() * first.entries());
}

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (size_t i = 0; i < violations.size(); ++i) {
    const Violation& v = violations[i];
    if (i) os << "; ";
    os << v.invariant << " (residual " << v.magnitude;
    if (v.effect >= 0) os << ", effect " << v.effect;
    if (v.row >= 0) os << ", entry (" << v.row << "," << v.col << ")";
    os << ")";
  }
  return os.str();
}

namespace {

bool square_of(const ComplexMatrix& m, int dim) {
  return m.rows() == dim && m.cols() == dim;
}

// Appends hermiticity / positivity violations for one operator.
void check_psd(const ComplexMatrix& m, int effect, std::vector<Violation>& out) {
  const double herm = hermiticity_residual(m);
  if (herm > kStateTol) {
    out.push_back({"hermitian", herm, effect});
    return;
  }
  const double min_eig = hermitian_eigenvalues(m).minCoeff();
  if (min_eig < -kStateTol) out.push_back({"positive", -min_eig, effect});
}

}  // namespace

ValidationReport validate_povm(const Povm& p) {
  ValidationReport r;
  if (p.dim < 1) {
    r.violations.push_back({"dimension", static_cast<double>(p.dim)});
    return r;
  }
  if (p.effects.empty()) {
    r.violations.push_back({"nonempty", 0.0});
    return r;
  }
  for (int i = 0; i < p.size(); ++i) {
    const ComplexMatrix& e = p[i];
    if (!square_of(e, p.dim)) {
      r.violations.push_back({"shape", static_cast<double>(e.rows()), i});
      return r;
    }
    if (!all_finite(e)) {
      r.violations.push_back({"finite", 0.0, i});
      return r;
    }
  }
  for (int i = 0; i < p.size(); ++i) check_psd(p[i], i, r.violations);

  ComplexMatrix excess = -identity(p.dim);
  for (const auto& e : p.effects) excess += e.matrix;
  Eigen::Index row = 0, col = 0;
  const double worst = excess.cwiseAbs().maxCoeff(&row, &col);
  if (worst > kCompletenessTol)
    r.violations.push_back({"completeness", worst, -1, static_cast<int>(row),
                            static_cast<int>(col)});
  return r;
}

ValidationReport validate_state(const DensityMatrix& rho) {
  ValidationReport r;
  if (rho.dim < 1 || !square_of(rho.matrix, rho.dim)) {
    r.violations.push_back({"shape", static_cast<double>(rho.matrix.rows())});
    return r;
  }
  if (!all_finite(rho.matrix)) {
    r.violations.push_back({"finite", 0.0});
    return r;
  }
  check_psd(rho.matrix, -1, r.violations);
  const double tr_err = std::abs(rho.matrix.trace() - Complex(1.0));
  if (tr_err > kStateTol) r.violations.push_back({"unit trace", tr_err});
  return r;
}

ValidationReport validate_channel(const QuantumChannel& phi) {
  ValidationReport r;
  if (phi.dim_in < 1 || phi.dim_out < 1 || phi.kraus.empty()) {
    r.violations.push_back({"shape", 0.0});
    return r;
  }
  ComplexMatrix sum = ComplexMatrix::Zero(phi.dim_in, phi.dim_in);
  for (size_t i = 0; i < phi.kraus.size(); ++i) {
    const ComplexMatrix& k = phi.kraus[i];
    if (k.rows() != phi.dim_out || k.cols() != phi.dim_in) {
      r.violations.push_back({"shape", static_cast<double>(k.rows()),
                              static_cast<int>(i)});
      return r;
    }
    if (!all_finite(k)) {
      r.violations.push_back({"finite", 0.0, static_cast<int>(i)});
      return r;
    }
    sum += k.adjoint() * k;
  }
  Eigen::Index row = 0, col = 0;
  const double worst =
      (sum - identity(phi.dim_in)).cwiseAbs().maxCoeff(&row, &col);
  if (worst > kCompletenessTol)
    r.violations.push_back({"trace preservation", worst, -1,
                            static_cast<int>(row), static_cast<int>(col)});
  return r;
}

ValidationReport validate_distribution(const OutcomeDistribution& q) {
  ValidationReport r;
  if (q.labels.size() != q.probs.size())
    r.violations.push_back({"label count", 0.0});
  double sum = 0.0;
  for (size_t i = 0; i < q.probs.size(); ++i) {
    if (!std::isfinite(q.probs[i])) {
      r.violations.push_back({"finite", 0.0, static_cast<int>(i)});
      return r;
    }
    if (q.probs[i] < -kProbabilityClamp)
      r.violations.push_back({"nonnegative", -q.probs[i], static_cast<int>(i)});
    sum += q.probs[i];
  }
  if (std::abs(sum - 1.0) > kProbabilityTol)
    r.violations.push_back({"normalized", std::abs(sum - 1.0)});
  return r;
}

DensityMatrix make_state(ComplexMatrix m) {
  DensityMatrix rho{static_cast<int>(m.rows()), std::move(m)};
  const ValidationReport r = validate_state(rho);
  if (!r.ok()) throw DomainError("invalid density matrix: " + r.summary());
  rho.matrix = hermitian_part(rho.matrix);
  return rho;
}

DensityMatrix pure_state(const ComplexVector& psi) {
  const ComplexVector unit = psi.normalized();
  return {static_cast<int>(psi.size()), unit * unit.adjoint()};
}

DensityMatrix maximally_mixed(int dim) {
  return {dim, identity(dim) / static_cast<double>(dim)};
}

std::vector<double> clean_probabilities(std::vector<double> probs) {
  double sum = 0.0;
  for (double& p : probs) {
    if (p < 0.0 && p >= -kProbabilityClamp) p = 0.0;
    sum += p;
  }
  if (sum > 0.0)
    for (double& p : probs) p /= sum;
  return probs;
}

OutcomeDistribution born_probabilities(const DensityMatrix& rho,
                                       const Povm& p) {
  if (rho.dim != p.dim)
    throw DimensionError("born_probabilities: state dimension " +
                         std::to_string(rho.dim) + " vs POVM dimension " +
                         std::to_string(p.dim));
  std::vector<double> probs(p.effects.size());
  for (int j = 0; j < p.size(); ++j)
    probs[j] = trace_product_real(rho.matrix, p[j]);
  return {p.labels(), clean_probabilities(std::move(probs))};
}

Povm post_process(const Povm& p, const StochasticMatrix& lam,
                  std::vector<std::string> labels) {
  if (lam.n_in() != p.size())
    throw DimensionError("post_process: stochastic matrix has " +
                         std::to_string(lam.n_in()) + " inputs but POVM has " +
                         std::to_string(p.size()) + " effects");
  if (!labels.empty() && static_cast<int>(labels.size()) != lam.n_out())
    throw DimensionError("post_process: label count mismatch");
  Povm out;
  out.dim = p.dim;
  for (int x = 0; x < lam.n_out(); ++x) {
    ComplexMatrix e = ComplexMatrix::Zero(p.dim, p.dim);
    for (int z = 0; z < p.size(); ++z)
      if (lam(x, z) != 0.0) e += lam(x, z) * p[z];
    out.effects.push_back(
        {labels.empty() ? std::to_string(x) : labels[x], std::move(e)});
  }
  return out;
}

DensityMatrix apply_channel(const QuantumChannel& phi,
                            const DensityMatrix& rho) {
  if (phi.dim_in != rho.dim)
    throw DimensionError("apply_channel: channel input dimension " +
                         std::to_string(phi.dim_in) + " vs state dimension " +
                         std::to_string(rho.dim));
  ComplexMatrix out = ComplexMatrix::Zero(phi.dim_out, phi.dim_out);
  for (const auto& k : phi.kraus) out += k * rho.matrix * k.adjoint();
  return {phi.dim_out, hermitian_part(out)};
}

ComplexMatrix apply_adjoint(const QuantumChannel& phi, const ComplexMatrix& x) {
  if (x.rows() != phi.dim_out || x.cols() != phi.dim_out)
    throw DimensionError("apply_adjoint: operator dimension mismatch");
  ComplexMatrix out = ComplexMatrix::Zero(phi.dim_in, phi.dim_in);
  for (const auto& k : phi.kraus) out += k.adjoint() * x * k;
  return out;
}

QuantumChannel identity_channel(int dim) { return {dim, dim, {identity(dim)}}; }

QuantumChannel unitary_channel(const ComplexMatrix& u) {
  const int d = static_cast<int>(u.rows());
  return {d, d, {u}};
}

QuantumChannel depolarizing_channel(int dim) {
  QuantumChannel phi{dim, dim, {}};
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      ComplexMatrix k = ComplexMatrix::Zero(dim, dim);
      k(i, j) = scale;
      phi.kraus.push_back(std::move(k));
    }
  return phi;
}

Povm computational_basis(int dim) {
  Povm p;
  p.dim = dim;
  for (int i = 0; i < dim; ++i)
    p.effects.push_back({std::to_string(i), basis_projector(dim, i)});
  return p;
}

Povm trivial_povm(int dim) { return {dim, {{"1", identity(dim)}}}; }

namespace {

ComplexMatrix ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  return g;
}

}  // namespace

DensityMatrix random_state(int dim, Rng& rng) {
  const ComplexMatrix g = ginibre(dim, dim, rng);
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return {dim, hermitian_part(m)};
}

DensityMatrix random_state(int dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_state(dim, rng);
}

DensityMatrix random_pure_state(int dim, Rng& rng) {
  return pure_state(ginibre(dim, 1, rng).col(0));
}

Povm random_povm(int dim, int n_outcomes, Rng& rng) {
  std::vector<ComplexMatrix> a;
  ComplexMatrix s = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < n_outcomes; ++i) {
    const ComplexMatrix g = ginibre(dim, dim, rng);
    a.push_back(g * g.adjoint());
    s += a.back();
  }
  const ComplexMatrix s_inv = psd_inv_sqrt(hermitian_part(s));
  for (auto& e : a) e = hermitian_part(s_inv * e * s_inv);
  return Povm::from_matrices(std::move(a));
}

Povm random_povm(int dim, int n_outcomes, std::uint64_t seed) {
  Rng rng(seed);
  return random_povm(dim, n_outcomes, rng);
}

ComplexMatrix random_unitary(int dim, Rng& rng) {
  const ComplexMatrix g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
  const ComplexMatrix r = qr.matrixQR();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

Povm random_projective_povm(int dim, Rng& rng) {
  const ComplexMatrix u = random_unitary(dim, rng);
  std::vector<ComplexMatrix> effects;
  for (int i = 0; i < dim; ++i) effects.push_back(u.col(i) * u.col(i).adjoint());
  return Povm::from_matrices(std::move(effects));
}

QuantumChannel random_channel(int dim_in, int dim_out, int n_kraus, Rng& rng) {
  QuantumChannel phi{dim_in, dim_out, {}};
  ComplexMatrix s = ComplexMatrix::Zero(dim_in, dim_in);
  for (int i = 0; i < n_kraus; ++i) {
    phi.kraus.push_back(ginibre(dim_out, dim_in, rng));
    s += phi.kraus.back().adjoint() * phi.kraus.back();
  }
  const ComplexMatrix s_inv = psd_inv_sqrt(hermitian_part(s));
  for (auto& k : phi.kraus) k = k * s_inv;
  return phi;
}

StochasticMatrix random_stochastic(int n_out, int n_in, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  RealMatrix m(n_out, n_in);
  for (int j = 0; j < n_in; ++j) {
    for (int i = 0; i < n_out; ++i) m(i, j) = expo(rng);
    m.col(j) /= m.col(j).sum();
  }
  return StochasticMatrix(std::move(m));
}

ComplexMatrix random_hermitian(int dim, Rng& rng) {
  return hermitian_part(ginibre(dim, dim, rng));
}

}  // namespace mf
