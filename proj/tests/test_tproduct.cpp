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
#include "tubal/tube.hpp"

namespace tubal {
namespace {

using testing::rel_err;

TEST(Tprod, IdentityAndShapes) {
  Rng rng(1);
  const Tensor3 a = random_general(3, 4, 5, rng);
  EXPECT_LE(rel_err(tprod(a, identity(4, 5)), a), 1e-15);
  EXPECT_LE(rel_err(tprod(identity(3, 5), a), a), 1e-15);
  try {
    tprod(a, random_general(3, 2, 5, rng));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kShapeError);
  }
  EXPECT_THROW(tprod(a, random_general(4, 2, 4, rng)), Error);
}

TEST(Tprod, ScalarTensorsMultiplyAsTubes) {
  Rng rng(2);
  for (std::size_t p = 1; p <= 8; ++p) {
    const Tube a = random_tube(p, rng), b = random_tube(p, rng);
    const Tube got = to_tube(tprod(tube_tensor(a), tube_tensor(b)));
    EXPECT_LE(rel_err(got.vector(), Vector(circ(a) * b.vector())), 1e-13);
  }
}

TEST(Tprod, FastPathMatchesNaiveAndOracle) {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = rng.index(1, 12), s = rng.index(1, 12), n = rng.index(1, 12), p = rng.index(1, 8);
    const Tensor3 a = random_general(m, s, p, rng), b = random_general(s, n, p, rng);
    const Tensor3 want = testing::naive_tprod(a, b);
    EXPECT_LE(rel_err(tprod(a, b), want), 1e-12);
    EXPECT_LE(rel_err(tprod(a, b, ProductPath::kReference), want), 1e-14);
    EXPECT_LE(rel_err(oracle::oracle_tprod(a, b), want), 1e-14);
  }
}

TEST(Tprod, AssociativeAndBilinear) {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t p = rng.index(1, 6);
    const Tensor3 a = random_general(3, 2, p, rng), b = random_general(2, 4, p, rng),
                  b2 = random_general(2, 4, p, rng), c = random_general(4, 3, p, rng);
    EXPECT_LE(rel_err(tprod(tprod(a, b), c), tprod(a, tprod(b, c))), 1e-11);
    EXPECT_LE(rel_err(tprod(a, 2.0 * b + b2), 2.0 * tprod(a, b) + tprod(a, b2)), 1e-11);
  }
}

TEST(TprodMat, EmbeddingAndIdentity) {
  Rng rng(5);
  const Tensor3 a = random_general(4, 3, 5, rng);
  const MatSlice x = random_mat(3, 5, rng);
  EXPECT_EQ(tprod_mat(a, x), to_mat(tprod(a, to_tensor(x))));
  EXPECT_LE(rel_err(oracle::oracle_tprod_mat(a, x).matrix(), tprod_mat(a, x).matrix()), 1e-13);
  EXPECT_LE(rel_err(tprod_mat(identity(3, 5), x).matrix(), x.matrix()), 1e-15);
  EXPECT_THROW(tprod_mat(a, random_mat(4, 5, rng)), Error);
}

TEST(TprodMat, DiagonalTubeTensorActsByTransposeCirc) {
  Rng rng(6);
  const std::size_t n = 3, p = 4;
  const Tube a = random_tube(p, rng);
  Tensor3 d(n, n, p);
  for (std::size_t i = 0; i < n; ++i) d.set_tube(i, i, a);
  const MatSlice x = random_mat(n, p, rng);
  const Matrix want = x.matrix() * circ(a).transpose();
  EXPECT_LE(rel_err(tprod_mat(d, x).matrix(), want), 1e-13);
  EXPECT_LE(rel_err(oracle::oracle_tprod_mat(d, x).matrix(), want), 1e-13);
}

TEST(TInverse, Examples) {
  EXPECT_LE(rel_err(t_inverse(identity(3, 4)), identity(3, 4)), 1e-15);
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = rng.index(1, 6), p = rng.index(1, 6);
    const Tensor3 a = random_general(n, n, p, rng) + 3.0 * identity(n, p);
    const Tensor3 inv = t_inverse(a);
    const double kappa = t_condition_number(a);
    EXPECT_LE(rel_err(tprod(a, inv), identity(n, p)), 1e-8 * kappa);
    EXPECT_LE(rel_err(inv, oracle::oracle_inverse(a)), 1e-8 * kappa);
  }
}

TEST(TInverse, ZeroFrequencySliceIsSingular) {
  // Tube (1,-1) vanishes at frequency 0.
  Tensor3 a(1, 1, 2);
  a.set_tube(0, 0, {1, -1});
  try {
    t_inverse(a);
    FAIL();
  } catch (const SingularError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSingular);
    EXPECT_EQ(e.slice(), 0u);
    EXPECT_LE(e.ratio(), e.cutoff());
  }
}

TEST(TPower, Examples) {
  Rng rng(8);
  const Tensor3 a = random_general(3, 3, 4, rng);
  EXPECT_TRUE(t_power(a, 1) == a);
  EXPECT_LE(rel_err(t_power(identity(3, 4), 5), identity(3, 4)), 1e-15);
  EXPECT_THROW(t_power(random_general(2, 3, 2, rng), 2), Error);

  const Tensor3 s = symmetrize(a);
  const TedResult t = ted(s);
  const Tensor3 d3 = tprod(tprod(t.d, t.d), t.d);
  const Tensor3 want = tprod(tprod(t.u, d3), transpose(t.u));
  EXPECT_LE(rel_err(t_power(s, 3), want), 1e-9);
  EXPECT_TRUE(is_t_symmetric(t_power(s, 3), 1e-12 * t_power(s, 3).max_abs()));
}

TEST(IsOrthogonal, Examples) {
  EXPECT_TRUE(is_orthogonal(identity(3, 4)));
  EXPECT_FALSE(is_orthogonal(2.0 * identity(3, 4)));
  Rng rng(9);
  const TedResult t = ted(random_tsym(4, 5, rng));
  EXPECT_TRUE(is_orthogonal(t.u));
  EXPECT_THROW(is_orthogonal(random_general(2, 3, 2, rng)), Error);
}

TEST(IsOrthogonal, IsometryOnMatrices) {
  Rng rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = rng.index(1, 6), p = rng.index(1, 6);
    const Tensor3 u = random_orthogonal(n, p, rng);
    const MatSlice x = random_mat(n, p, rng);
    EXPECT_NEAR(tprod_mat(u, x).norm(), x.norm(), 1e-10 * x.norm());
  }
}

}  // namespace
}  // namespace tubal
