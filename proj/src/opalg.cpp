#include "mf/opalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace mf {

ComplexMatrix identity(int dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexMatrix basis_projector(int dim, int index) {
  ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
  p(index, index) = 1.0;
  return p;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index rb = b.rows(), cb = b.cols();
  ComplexMatrix out(a.rows() * rb, a.cols() * cb);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_first,
                            int dim_second, Keep keep) {
  const int n = dim_first * dim_second;
  if (dim_first < 1 || dim_second < 1 || m.rows() != n || m.cols() != n)
    throw DimensionError("partial_trace: operator is " +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected " +
                         std::to_string(n) + "x" + std::to_string(n));
  if (keep == Keep::first) {
    ComplexMatrix r = ComplexMatrix::Zero(dim_first, dim_first);
    for (int i = 0; i < dim_first; ++i)
      for (int j = 0; j < dim_first; ++j)
        for (int b = 0; b < dim_second; ++b)
          r(i, j) += m(i * dim_second + b, j * dim_second + b);
    return r;
  }
  ComplexMatrix r = ComplexMatrix::Zero(dim_second, dim_second);
  for (int i = 0; i < dim_second; ++i)
    for (int j = 0; j < dim_second; ++j)
      for (int a = 0; a < dim_first; ++a)
        r(i, j) += m(a * dim_second + i, a * dim_second + j);
  return r;
}

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_residual(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return max_abs(m - m.adjoint());
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  return 0.5 * (m + m.adjoint());
}

double trace_product_real(const ComplexMatrix& a, const ComplexMatrix& b) {
  // Tr(ab) = sum_ij a_ij b_ji
  return (a.array() * b.transpose().array()).sum().real();
}

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kOffDiagonalTol = 1e-13;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

Eigensystem hermitian_eigensystem(const ComplexMatrix& h) {
  if (h.rows() != h.cols())
    throw DimensionError("hermitian_eigensystem: matrix is not square");
  if (hermiticity_residual(h) > kHermitianTol)
    throw DomainError("hermitian_eigensystem: matrix is not Hermitian");

  const int n = static_cast<int>(h.rows());
  ComplexMatrix a = hermitian_part(h);
  ComplexMatrix v = identity(n);
  const double threshold = kOffDiagonalTol * std::max(1.0, a.norm());

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) < threshold) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r < 1e-300) continue;
        const Complex phase = a(p, q) / r;  // e^{i phi}
        const double app = a(p, p).real(), aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // J = diag(.., e^{-i phi} at q, ..) * R(c, s)
        const Complex jpp = c, jpq = s;
        const Complex jqp = -s * std::conj(phase), jqq = c * std::conj(phase);

        for (int k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
        for (int k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return a(i, i).real() < a(j, j).real();
  });
  Eigensystem es{RealVector(n), ComplexMatrix(n, n)};
  for (int k = 0; k < n; ++k) {
    es.values(k) = a(order[k], order[k]).real();
    es.vectors.col(k) = v.col(order[k]);
  }
  return es;
}

RealVector hermitian_eigenvalues(const ComplexMatrix& h) {
  return hermitian_eigensystem(h).values;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& h) {
  const Eigensystem es = hermitian_eigensystem(h);
  if (es.values.size() > 0 && es.values.minCoeff() < -kPsdRejectTol)
    throw DomainError("psd_sqrt: matrix has eigenvalue " +
                      std::to_string(es.values.minCoeff()) +
                      " below -1e-8");
  const RealVector roots = es.values.cwiseMax(0.0).cwiseSqrt();
  return es.vectors * roots.cast<Complex>().asDiagonal() *
         es.vectors.adjoint();
}

ComplexMatrix psd_inv_sqrt(const ComplexMatrix& h, double cutoff) {
  const Eigensystem es = hermitian_eigensystem(h);
  RealVector inv(es.values.size());
  for (Eigen::Index i = 0; i < inv.size(); ++i)
    inv(i) = es.values(i) > cutoff ? 1.0 / std::sqrt(es.values(i)) : 0.0;
  return es.vectors * inv.cast<Complex>().asDiagonal() * es.vectors.adjoint();
}

ComplexMatrix project_psd(const ComplexMatrix& h) {
  const Eigensystem es = hermitian_eigensystem(hermitian_part(h));
  const RealVector clipped = es.values.cwiseMax(0.0);
  return es.vectors * clipped.cast<Complex>().asDiagonal() *
         es.vectors.adjoint();
}

HermitianBasis::HermitianBasis(int dim) : dim_(dim) {
  if (dim < 1) throw DimensionError("HermitianBasis: dimension must be >= 1");
  elements_.reserve(static_cast<size_t>(dim) * dim);
  elements_.push_back(identity(dim) / std::sqrt(static_cast<double>(dim)));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Complex i_unit(0.0, 1.0);
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      ComplexMatrix sym = ComplexMatrix::Zero(dim, dim);
      sym(j, k) = sym(k, j) = inv_sqrt2;
      elements_.push_back(std::move(sym));
      ComplexMatrix anti = ComplexMatrix::Zero(dim, dim);
      anti(j, k) = -i_unit * inv_sqrt2;
      anti(k, j) = i_unit * inv_sqrt2;
      elements_.push_back(std::move(anti));
    }
  }
  for (int l = 1; l < dim; ++l) {
    ComplexMatrix diag = ComplexMatrix::Zero(dim, dim);
    const double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int j = 0; j < l; ++j) diag(j, j) = norm;
    diag(l, l) = -l * norm;
    elements_.push_back(std::move(diag));
  }
}

RealVector HermitianBasis::coordinates(const ComplexMatrix& h) const {
  if (h.rows() != dim_ || h.cols() != dim_)
    throw DimensionError("HermitianBasis::coordinates: dimension mismatch");
  RealVector c(size());
  for (int i = 0; i < size(); ++i)
    c(i) = trace_product_real(elements_[i], h);
  return c;
}

ComplexMatrix HermitianBasis::reconstruct(const RealVector& coords) const {
  if (coords.size() != size())
    throw DimensionError("HermitianBasis::reconstruct: wrong coordinate count");
  ComplexMatrix h = ComplexMatrix::Zero(dim_, dim_);
  for (int i = 0; i < size(); ++i) h += coords(i) * elements_[i];
  return h;
}

}  // namespace mf
