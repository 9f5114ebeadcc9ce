#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "mf/opalg.hpp"
#include "support.hpp"

namespace mf {
namespace {

using testing::pauli_x;
using testing::pauli_z;

TEST(Tensor, IdentityAndProjectors) {
  EXPECT_LT(max_abs(tensor(identity(2), identity(2)) - identity(4)), 1e-15);
  const ComplexMatrix p = basis_projector(2, 0);
  EXPECT_LT(max_abs(tensor(p, p) - basis_projector(4, 0)), 1e-15);
}

TEST(Tensor, PauliXZEntries) {
  const ComplexMatrix t = tensor(pauli_x(), pauli_z());
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 2) = 1;
  expected(1, 3) = -1;
  expected(2, 0) = 1;
  expected(3, 1) = -1;
  EXPECT_LT(max_abs(t - expected), 1e-15);
}

TEST(Tensor, Associative) {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_hermitian(2, rng), b = random_hermitian(3, rng),
                        c = random_hermitian(2, rng);
    EXPECT_LT(max_abs(tensor(tensor(a, b), c) - tensor(a, tensor(b, c))), 1e-12);
  }
}

TEST(PartialTrace, ProductAndIdentity) {
  EXPECT_LT(max_abs(partial_trace(identity(4), 2, 2, Keep::first) - 2.0 * identity(2)), 1e-15);
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_hermitian(2, rng), b = random_hermitian(3, rng);
    EXPECT_LT(max_abs(partial_trace(tensor(a, b), 2, 3, Keep::first) - a * b.trace()), 1e-12);
    EXPECT_LT(max_abs(partial_trace(tensor(a, b), 2, 3, Keep::second) - b * a.trace()), 1e-12);
  }
}

TEST(PartialTrace, BellStateByIndexSummation) {
  ComplexVector bell = ComplexVector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const ComplexMatrix rho = bell * bell.adjoint();

  ComplexMatrix oracle = ComplexMatrix::Zero(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) oracle(i, j) += rho(2 * i + k, 2 * j + k);

  const ComplexMatrix reduced = partial_trace(rho, 2, 2, Keep::first);
  EXPECT_LT(max_abs(reduced - oracle), 1e-15);
  EXPECT_LT(max_abs(reduced - identity(2) / 2.0), 1e-15);
}

TEST(PartialTrace, RejectsWrongShape) {
  EXPECT_THROW(partial_trace(identity(5), 2, 2, Keep::first), DimensionError);
}

TEST(Eigensystem, SmallCases) {
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d.diagonal() << 3, 1, 2;
  const RealVector v = hermitian_eigenvalues(d);
  EXPECT_NEAR(v(0), 1, 1e-14);
  EXPECT_NEAR(v(1), 2, 1e-14);
  EXPECT_NEAR(v(2), 3, 1e-14);

  const RealVector sx = hermitian_eigenvalues(pauli_x());
  EXPECT_NEAR(sx(0), -1, 1e-14);
  EXPECT_NEAR(sx(1), 1, 1e-14);
}

TEST(Eigensystem, ReconstructsAndMatchesEigen) {
  Rng rng(2024);
  for (int dim : {1, 2, 3, 4, 6, 9, 16}) {
    for (int trial = 0; trial < 10; ++trial) {
      const ComplexMatrix h = random_hermitian(dim, rng);
      const Eigensystem es = hermitian_eigensystem(h);
      const ComplexMatrix rebuilt =
          es.vectors * es.values.cast<Complex>().asDiagonal() * es.vectors.adjoint();
      EXPECT_LT(max_abs(h - rebuilt), 1e-9) << "dim " << dim;
      EXPECT_LT(max_abs(es.vectors.adjoint() * es.vectors - identity(dim)), 1e-10);
      for (int i = 1; i < dim; ++i) EXPECT_LE(es.values(i - 1), es.values(i));

      Eigen::SelfAdjointEigenSolver<ComplexMatrix> ref(h);
      EXPECT_LT((ref.eigenvalues() - es.values).cwiseAbs().maxCoeff(), 1e-10);
    }
  }
}

TEST(Eigensystem, DegenerateSpectrum) {
  Rng rng(3);
  const ComplexMatrix u = random_unitary(4, rng);
  ComplexMatrix d = ComplexMatrix::Zero(4, 4);
  d.diagonal() << 1, 1, 1, -2;
  const ComplexMatrix h = u * d * u.adjoint();
  const Eigensystem es = hermitian_eigensystem(h);
  EXPECT_NEAR(es.values(0), -2, 1e-12);
  for (int i = 1; i < 4; ++i) EXPECT_NEAR(es.values(i), 1, 1e-12);
}

TEST(Eigensystem, RejectsNonHermitian) {
  ComplexMatrix m(2, 2);
  m << 0, 1, 0, 0;
  EXPECT_THROW(hermitian_eigensystem(m), DomainError);
}

TEST(PsdSqrt, Examples) {
  EXPECT_LT(max_abs(psd_sqrt(identity(3)) - identity(3)), 1e-14);
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d.diagonal() << 4, 9;
  ComplexMatrix r = ComplexMatrix::Zero(2, 2);
  r.diagonal() << 2, 3;
  EXPECT_LT(max_abs(psd_sqrt(d) - r), 1e-14);

  const ComplexMatrix p = (identity(2) + pauli_x()) / 2.0;
  EXPECT_LT(max_abs(p * p - p), 1e-15);
  EXPECT_LT(max_abs(psd_sqrt(p) - p), 1e-12);
}

TEST(PsdSqrt, SquaresBackAndClamps) {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix g = random_hermitian(3, rng);
    const ComplexMatrix h = g * g;
    const ComplexMatrix s = psd_sqrt(h);
    EXPECT_LT(max_abs(s * s - h), 1e-9);
    EXPECT_GE(hermitian_eigenvalues(s)(0), -1e-12);
  }
  ComplexMatrix nearly = ComplexMatrix::Zero(2, 2);
  nearly.diagonal() << 1, -1e-11;
  EXPECT_NO_THROW(psd_sqrt(nearly));
  nearly(1, 1) = -1e-6;
  EXPECT_THROW(psd_sqrt(nearly), DomainError);
}

TEST(HermitianBasis, OrthonormalAndSpanning) {
  Rng rng(17);
  for (int dim : {1, 2, 3, 4}) {
    const HermitianBasis basis(dim);
    ASSERT_EQ(basis.size(), dim * dim);
    for (int i = 0; i < basis.size(); ++i) {
      EXPECT_LT(hermiticity_residual(basis[i]), 1e-12);
      for (int j = 0; j < basis.size(); ++j) {
        const Complex ip = (basis[i].adjoint() * basis[j]).trace();
        EXPECT_NEAR(std::abs(ip - Complex(i == j ? 1.0 : 0.0)), 0.0, 1e-12);
      }
    }
    for (int trial = 0; trial < 5; ++trial) {
      const ComplexMatrix h = random_hermitian(dim, rng);
      EXPECT_LT(max_abs(basis.reconstruct(basis.coordinates(h)) - h), 1e-10);
    }
  }
}

}  // namespace
}  // namespace mf
