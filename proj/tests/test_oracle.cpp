// Copyright 2026 The tubal-spectra Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "support.hpp"
#include "tubal/error.hpp"
#include "tubal/oracle.hpp"
#include "tubal/random.hpp"
#include "tubal/spectral.hpp"
#include "tubal/tensor3.hpp"
#include "tubal/tproduct.hpp"
#include "tubal/transform.hpp"
#include "tubal/tsvd.hpp"
#include "tubal/tube.hpp"

namespace tubal {
namespace {

using Eigen::Index;
using testing::rel_err;

TEST(OracleTprod, Examples) {
  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = rng.index(1, 8), s = rng.index(1, 8), n = rng.index(1, 8), p = rng.index(1, 8);
    const Tensor3 a = random_general(m, s, p, rng), b = random_general(s, n, p, rng);
    EXPECT_LE(rel_err(tprod(a, b), oracle::oracle_tprod(a, b)), 1e-12);
    EXPECT_LE(rel_err(oracle::oracle_tprod(a, identity(s, p)), a), 1e-15);
  }
  const Tube x = random_tube(5, rng), y = random_tube(5, rng);
  EXPECT_LE(rel_err(to_tube(oracle::oracle_tprod(tube_tensor(x), tube_tensor(y))), tube_mul(x, y)), 1e-14);
  EXPECT_THROW(oracle::oracle_tprod(random_general(2, 3, 2, rng), random_general(2, 3, 2, rng)), Error);
}

TEST(OracleTranspose, MatchesFastPath) {
  Rng rng(2);
  const Tensor3 a = random_general(3, 5, 4, rng);
  EXPECT_TRUE(oracle::oracle_transpose(a) == transpose(a));
}

TEST(QuadformMatrices, IdentityOneByOneByTwo) {
  const std::vector<Matrix> m = oracle::oracle_quadform_matrices(identity(1, 2));
  ASSERT_EQ(m.size(), 2u);
  EXPECT_LE((m[0] - Matrix::Identity(2, 2)).norm(), 1e-15);
  const Matrix swap{{0.0, 1.0}, {1.0, 0.0}};
  EXPECT_LE((m[1] - swap).norm(), 1e-15);
}

TEST(QuadformMatrices, DepthOneAndRandom) {
  Rng rng(3);
  const Tensor3 a = random_general(4, 4, 1, rng);
  const Matrix slice = a.slice(0);
  EXPECT_LE((oracle::oracle_quadform_matrices(a)[0] - 0.5 * (slice + slice.transpose())).norm(), 1e-14);

  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t n = rng.index(1, 4), p = rng.index(1, 5);
    const Tensor3 b = random_general(n, n, p, rng);
    const auto forms = oracle::oracle_quadform_matrices(b);
    for (int probe = 0; probe < 100; ++probe) {
      const MatSlice x = random_mat(n, p, rng);
      const Vector v = unfold_mat(x);
      const Tube f = quadform(b, x);
      for (std::size_t r = 0; r < p; ++r) {
        EXPECT_NEAR(v.dot(forms[r] * v), f[r], 1e-10);
      }
    }
  }
}

TEST(PsdExact, Examples) {
  const oracle::ExactPsd id = oracle::oracle_psd_exact(identity(1, 2));
  EXPECT_EQ(id.verdict, ExactClass::kNotElementwisePsd);
  ASSERT_TRUE(id.witness.has_value());
  EXPECT_EQ(id.component, 1u);
  EXPECT_EQ(*id.witness, MatSlice(Matrix{{1.0, -1.0}}));
  EXPECT_TRUE(id.witness_verified);
  EXPECT_LE(rel_err(*id.witness_value, Tube({2, -2})), 1e-15);
  EXPECT_NEAR(id.min_eigenvalue, -1.0, 1e-14);

  Rng rng(4);
  const Tensor3 b = random_general(3, 3, 1, rng);
  EXPECT_EQ(oracle::oracle_psd_exact(tprod(transpose(b), b)).verdict, ExactClass::kElementwisePsd);
  const oracle::ExactPsd zero = oracle::oracle_psd_exact(Tensor3(2, 2, 3));
  EXPECT_EQ(zero.verdict, ExactClass::kElementwisePsd);
  EXPECT_FALSE(zero.witness.has_value());
}

TEST(PsdExact, TooLarge) {
  try {
    oracle::oracle_psd_exact(identity(9, 8));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kTooLarge);
  }
  EXPECT_NO_THROW(oracle::oracle_psd_exact(identity(9, 8), kDefaultTol, 72));
}

// (1,1) with p = 2 gives F(x) = (x1 + x2)^2 (1,1).
TEST(PsdExact, ElementwisePsdSurvivesRandomProbes) {
  Tensor3 a(1, 1, 2);
  a.set_tube(0, 0, {1, 1});
  EXPECT_EQ(oracle::oracle_psd_exact(a).verdict, ExactClass::kElementwisePsd);
  Rng rng(5);
  double worst = 0.0;
  for (int probe = 0; probe < 10000; ++probe) {
    worst = std::min(worst, quadform(a, random_mat(1, 2, rng)).vector().minCoeff());
  }
  EXPECT_GE(worst, -1e-12);
}

TEST(PsdExact, WitnessesAlwaysReevaluateNegative) {
  Rng rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const Tensor3 a = random_tsym(rng.index(1, 4), rng.index(1, 4), rng);
    const oracle::ExactPsd exact = oracle::oracle_psd_exact(a);
    if (exact.verdict == ExactClass::kNotElementwisePsd) {
      ASSERT_TRUE(exact.witness.has_value());
      EXPECT_TRUE(exact.witness_verified);
      EXPECT_LT(oracle::oracle_quadform(a, *exact.witness)[exact.component], -kDefaultTol);
    }
  }
}

TEST(Certify, ReportsBothVerdicts) {
  const PsdVerdict v = oracle::certify(identity(1, 2));
  EXPECT_EQ(v.spectral_class, SpectralClass::kPSD);
  EXPECT_EQ(v.exact_class, ExactClass::kNotElementwisePsd);
  EXPECT_EQ(v.witness_component, 1u);
}

TEST(OracleTedCheck, ValidAndIdentity) {
  Rng rng(7);
  const Tensor3 a = random_tsym(5, 4, rng);
  const Report r = oracle::oracle_ted_check(a, ted(a));
  EXPECT_TRUE(r.all_pass());
  for (const Check& c : r.checks()) EXPECT_TRUE(c.pass) << c.name << " " << c.residual;

  const Report id = oracle::oracle_ted_check(identity(3, 4), ted(identity(3, 4)));
  for (const Check& c : id.checks()) EXPECT_EQ(c.residual, 0.0) << c.name;
}

// Swapping two eigenvector columns inside one frequency slice keeps U
// orthogonal but no longer diagonalizes A.
TEST(OracleTedCheck, CorruptedFrequencySliceIsFlagged) {
  Rng rng(8);
  const Tensor3 a = random_tsym(4, 5, rng);
  TedResult t = ted(a);
  FreqSlices fu = to_freq(t.u);
  CMatrix slice = fu.slice(1);
  slice.col(0).swap(slice.col(1));
  fu.set_mirrored(1, slice);
  t.u = from_freq(fu);
  const Report r = oracle::oracle_ted_check(a, t);
  EXPECT_TRUE(r.find("dense_orthogonality")->pass);
  EXPECT_FALSE(r.find("dense_reconstruction")->pass);
  EXPECT_GT(r.find("dense_reconstruction")->residual, 1e-3);
  EXPECT_FALSE(r.invariants_hold());
}

// Negating a column of one spatial frontal slice breaks both.
TEST(OracleTedCheck, CorruptedSpatialSliceIsFlagged) {
  Rng rng(9);
  const Tensor3 a = random_tsym(4, 3, rng);
  TedResult t = ted(a);
  t.u.slice(1).col(0) *= -1.0;
  const Report r = oracle::oracle_ted_check(a, t);
  EXPECT_FALSE(r.find("dense_reconstruction")->pass);
  EXPECT_FALSE(r.find("dense_orthogonality")->pass);
}

TEST(OracleTsvdCheck, ValidAndCorrupted) {
  Rng rng(10);
  const Tensor3 a = random_general(5, 3, 4, rng);
  TsvdResult t = tsvd(a);
  const Report r = oracle::oracle_tsvd_check(a, t);
  for (const Check& c : r.checks()) EXPECT_TRUE(c.pass) << c.name << " " << c.residual;
  t.s.slice(0)(0, 0) += 0.5;
  EXPECT_FALSE(oracle::oracle_tsvd_check(a, t).find("dense_reconstruction")->pass);
}

TEST(OracleInverse, MatchesFastPath) {
  Rng rng(11);
  const Tensor3 a = random_general(3, 3, 4, rng) + 3.0 * identity(3, 4);
  EXPECT_LE(rel_err(t_inverse(a), oracle::oracle_inverse(a)), 1e-12);
}

}  // namespace
}  // namespace tubal
