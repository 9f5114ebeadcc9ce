#include <gtest/gtest.h>

#include "mf/dilate.hpp"
#include "mf/sicrep.hpp"
#include "support.hpp"

namespace mf {
namespace {

using testing::trace_oracle;

ComplexMatrix swap_unitary(int d) {
  ComplexMatrix s = ComplexMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) s(j * d + i, i * d + j) = 1;
  return s;
}

DilationSpec product_spec(const DensityMatrix& sigma, const QuantumChannel& phi, const Povm& y,
                          int dim_t) {
  return {sigma.dim, dim_t, sigma, phi, y};
}

TEST(ApplyApparatus, Examples) {
  Rng rng(60);
  const DensityMatrix sigma = random_state(2, rng), rho = random_state(2, rng);
  const Povm y = random_povm(2, 3, rng);

  const DilationSpec ident = product_spec(sigma, identity_channel(4), y, 2);
  EXPECT_LT(max_abs(apply_apparatus(ident, rho).matrix - sigma.matrix), 1e-14);

  const DilationSpec swap = product_spec(sigma, unitary_channel(swap_unitary(2)), y, 2);
  const ComplexMatrix joint = swap_unitary(2) * tensor(sigma.matrix, rho.matrix) *
                              swap_unitary(2).adjoint();
  const ComplexMatrix oracle = partial_trace(joint, 2, 2, Keep::first);
  EXPECT_LT(max_abs(apply_apparatus(swap, rho).matrix - oracle), 1e-14);
  EXPECT_LT(max_abs(apply_apparatus(swap, rho).matrix - rho.matrix), 1e-14);
}

TEST(ApplyApparatus, TracePreservingOnRandomSpecs) {
  Rng rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const DilationSpec spec{3, 2, random_state(3, rng), random_channel(6, 6, 3, rng),
                            random_povm(3, 2, rng)};
    ASSERT_TRUE(validate_spec(spec).ok());
    EXPECT_NEAR(apply_apparatus(spec, random_state(2, rng)).matrix.trace().real(), 1.0, 1e-10);
  }
}

TEST(InducedPovm, IdentityChannelGivesTrivialClass) {
  Rng rng(62);
  const DensityMatrix sigma = random_state(2, rng);
  const Povm y = random_povm(2, 3, rng);
  const Povm z = induced_povm(product_spec(sigma, identity_channel(4), y, 2));
  for (int k = 0; k < 3; ++k)
    EXPECT_LT(max_abs(z[k] - trace_oracle(sigma.matrix, y[k]) * identity(2)), 1e-14);
}

TEST(InducedPovm, SwapTransplantsY) {
  Rng rng(63);
  const Povm y = random_povm(3, 4, rng);
  const Povm z = induced_povm(product_spec(random_state(3, rng), unitary_channel(swap_unitary(3)), y, 3));
  EXPECT_LT(testing::povm_distance(z, y), 1e-13);
  EXPECT_EQ(z.labels(), y.labels());
}

TEST(InducedPovm, CompleteAndConsistentWithApparatus) {
  Rng rng(64);
  for (int trial = 0; trial < 20; ++trial) {
    const DilationSpec spec{2, 3, random_state(2, rng), random_channel(6, 6, 2, rng),
                            random_povm(2, 3, rng)};
    const Povm z = induced_povm(spec);
    EXPECT_TRUE(validate_povm(z).ok());
    for (int s = 0; s < 5; ++s) {
      const DensityMatrix rho = random_state(3, rng);
      const DensityMatrix after = apply_apparatus(spec, rho);
      for (int k = 0; k < z.size(); ++k)
        EXPECT_NEAR(trace_oracle(rho.matrix, z[k]), trace_oracle(after.matrix, spec.y[k]), 1e-9);
    }
  }
}

TEST(IsGeneralizedDilation, IdentityChannelFailsAgainstZBasis) {
  const Povm zb = computational_basis(2);
  const DilationSpec spec = product_spec(maximally_mixed(2), identity_channel(4), zb, 2);
  const DilationCheck c = is_generalized_dilation(zb, zb, spec, 1e-9);
  EXPECT_FALSE(c.holds);
  EXPECT_GE(c.residual, 0.5);
}

TEST(IsGeneralizedDilation, OutcomeCountMismatch) {
  const DilationSpec spec = naimark_construct(computational_basis(2));
  EXPECT_THROW(is_generalized_dilation(spec.y, trivial_povm(2), spec, 1e-9), DimensionError);
}

TEST(Naimark, Examples) {
  const DilationSpec one = naimark_construct(trivial_povm(2));
  EXPECT_EQ(one.dim_s, 1);
  EXPECT_TRUE(is_generalized_dilation(one.y, trivial_povm(2), one, 1e-9).holds);

  const Povm zb = computational_basis(2);
  const DilationSpec z = naimark_construct(zb);
  EXPECT_EQ(z.dim_s, 2);
  EXPECT_LT(is_generalized_dilation(z.y, zb, z, 1e-9).residual, 1e-12);

  const Povm sic = build_sic(2).povm;
  const DilationSpec s = naimark_construct(sic);
  EXPECT_EQ(s.dim_s, 4);
  EXPECT_LT(is_generalized_dilation(s.y, sic, s, 1e-9).residual, 1e-9);
}

TEST(Naimark, StructureOfTheSpec) {
  Rng rng(65);
  const Povm z = random_povm(3, 4, rng);
  const DilationSpec spec = naimark_construct(z);
  EXPECT_TRUE(validate_spec(spec).ok());
  EXPECT_LT(max_abs(spec.sigma.matrix - basis_projector(4, 0)), 1e-15);
  EXPECT_LT(testing::povm_distance(spec.y, computational_basis(4)), 1e-15);
  ASSERT_EQ(spec.phi.kraus.size(), 1u);
  const ComplexMatrix& u = spec.phi.kraus[0];
  EXPECT_LT(max_abs(u.adjoint() * u - identity(12)), 1e-10);
  // Leading block of columns is the isometry Σ_z |z> ⊗ √Z_z.
  for (int k = 0; k < 4; ++k)
    EXPECT_LT(max_abs(u.block(3 * k, 0, 3, 3) - psd_sqrt(z[k])), 1e-12);
}

TEST(Naimark, RandomPovms) {
  Rng rng(66);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + trial % 2;
    const Povm z = random_povm(d, 2 + trial % 4, rng);
    const DilationSpec spec = naimark_construct(z);
    EXPECT_TRUE(is_generalized_dilation(spec.y, z, spec, 1e-9).holds);
  }
}

TEST(Naimark, RankDeficientEffects) {
  const ComplexMatrix zero = ComplexMatrix::Zero(2, 2);
  const Povm z = Povm::from_matrices({basis_projector(2, 0), zero, basis_projector(2, 1)});
  const DilationSpec spec = naimark_construct(z);
  EXPECT_TRUE(is_generalized_dilation(spec.y, z, spec, 1e-9).holds);
}

TEST(VerifyTuned, Examples) {
  Rng rng(67);
  std::vector<TuningPair> pairs;
  std::vector<DilationSpec> specs;
  for (int k = 0; k < 3; ++k) {
    const Povm z = random_povm(2, 3, rng);
    specs.push_back(naimark_construct(z));
    pairs.push_back({"m" + std::to_string(k), specs.back().y, z});
  }
  const TuningCertificate ok = verify_tuned(pairs, specs, 1e-9);
  EXPECT_TRUE(ok.tuned);
  EXPECT_FALSE(ok.vacuous);
  for (const auto& e : ok.entries) EXPECT_LE(e.residual, 1e-9);

  std::swap(pairs[1].z.effects[0], pairs[1].z.effects[2]);
  const TuningCertificate bad = verify_tuned(pairs, specs, 1e-9);
  EXPECT_FALSE(bad.tuned);
  EXPECT_TRUE(bad.entries[0].holds);
  EXPECT_FALSE(bad.entries[1].holds);
  EXPECT_GT(bad.entries[1].residual, 1e-3);

  const TuningCertificate empty = verify_tuned({}, {}, 1e-9);
  EXPECT_TRUE(empty.tuned);
  EXPECT_TRUE(empty.vacuous);

  EXPECT_THROW(verify_tuned(pairs, {specs[0]}, 1e-9), DimensionError);
}

TEST(ProbabilisticTuning, AgreesWithOperatorCheck) {
  Rng rng(68);
  const SicPovm sic2 = build_sic(2), sic3 = build_sic(3);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 2 + trial % 2;
    const Povm z = random_povm(d, 2 + trial % 2, rng);
    const DilationSpec spec = naimark_construct(z);
    const auto& sic_t = d == 2 ? sic2 : sic3;
    const auto& sic_s = spec.dim_s == 2 ? sic2 : sic3;
    const ProbabilisticTuningReport r =
        check_tuning_probabilistic(spec, z, sic_t, sic_s, 50, trial, 1e-8);
    EXPECT_TRUE(r.agrees);
    EXPECT_LT(r.max_gap, 1e-8);
  }
}

TEST(ProbabilisticTuning, CorruptedSpecShowsGap) {
  const Povm zb = computational_basis(2);
  DilationSpec spec = naimark_construct(zb);
  std::swap(spec.y.effects[0], spec.y.effects[1]);
  const SicPovm sic = build_sic(2);
  const ProbabilisticTuningReport r = check_tuning_probabilistic(spec, zb, sic, sic, 50, 1, 1e-8);
  EXPECT_FALSE(r.agrees);
  EXPECT_GT(r.max_gap, 0.1);
  EXPECT_FALSE(is_generalized_dilation(spec.y, zb, spec, 1e-8).holds);
}

TEST(ProbabilisticTuning, NoStatesIsVacuous) {
  const DilationSpec spec = naimark_construct(computational_basis(2));
  const SicPovm sic = build_sic(2);
  EXPECT_TRUE(check_tuning_probabilistic(spec, computational_basis(2), sic, sic, 0, 0, 1e-8).vacuous);
}

}  // namespace
}  // namespace mf
