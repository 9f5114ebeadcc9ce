// Dense complex operator algebra: Kronecker products, partial traces, a
// cyclic Jacobi eigensolver for Hermitian matrices and an orthonormal
// Hermitian operator basis.
#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace mf {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Shapes of operands do not agree.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input violates a numerical precondition (Hermiticity, positivity, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Keep { first, second };

ComplexMatrix identity(int dim);

/// |index><index| in dimension dim.
ComplexMatrix basis_projector(int dim, int index);

/// Kronecker product; row index of the result is i_a * rows(b) + i_b.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced operator on the kept factor of a (dim_first * dim_second)-square
/// operator laid out as first ⊗ second.
ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_first,
                            int dim_second, Keep keep);

bool all_finite(const ComplexMatrix& m);
double max_abs(const ComplexMatrix& m);
double hermiticity_residual(const ComplexMatrix& m);
ComplexMatrix hermitian_part(const ComplexMatrix& m);

/// Real part of Tr(a b) without forming the product.
double trace_product_real(const ComplexMatrix& a, const ComplexMatrix& b);

struct Eigensystem {
  RealVector values;     // ascending
  ComplexMatrix vectors;  // columns are eigenvectors
};

/// Cyclic Jacobi diagonalisation of a Hermitian matrix.
///
/// Each rotation first removes the phase of the pivot element with a diagonal
/// unitary and then annihilates it with a real plane rotation. Sweeps stop
/// when the off-diagonal Frobenius norm drops below 1e-13 (relative to the
/// matrix norm when that exceeds one), or after 100 sweeps.
/// Throws DomainError if h is not Hermitian within 1e-10.
Eigensystem hermitian_eigensystem(const ComplexMatrix& h);

/// Eigenvalues only, ascending.
RealVector hermitian_eigenvalues(const ComplexMatrix& h);

inline constexpr double kPsdClampTol = 1e-10;
inline constexpr double kPsdRejectTol = 1e-8;

/// Principal square root of a positive semidefinite matrix. Negative
/// eigenvalues down to -1e-8 are clamped to zero; anything lower throws.
ComplexMatrix psd_sqrt(const ComplexMatrix& h);

/// Inverse square root restricted to the support (eigenvalues above cutoff).
ComplexMatrix psd_inv_sqrt(const ComplexMatrix& h, double cutoff = 1e-14);

/// Nearest PSD matrix in Frobenius norm (negative eigenvalues set to zero).
ComplexMatrix project_psd(const ComplexMatrix& h);

/// Orthonormal basis of the d×d Hermitian matrices under Tr(A† B): the
/// identity scaled by 1/√d followed by the generalised Gell-Mann matrices
/// (symmetric, antisymmetric, then diagonal), each with unit norm.
class HermitianBasis {
 public:
  explicit HermitianBasis(int dim);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const ComplexMatrix& operator[](int i) const { return elements_[i]; }
  const std::vector<ComplexMatrix>& elements() const { return elements_; }

  /// Real coordinates Tr(B_i h) of a Hermitian matrix.
  RealVector coordinates(const ComplexMatrix& h) const;
  ComplexMatrix reconstruct(const RealVector& coords) const;

 private:
  int dim_;
  std::vector<ComplexMatrix> elements_;
};

}  // namespace mf
