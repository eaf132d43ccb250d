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
#include "tubal/random.hpp"
#include "tubal/tensor3.hpp"
#include "tubal/tproduct.hpp"

namespace tubal {
namespace {

using Eigen::Index;
using testing::naive_tprod;
using testing::naive_transpose;

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kFormatError;
}

TEST(Bcirc, IdentityIsIdentityMatrix) {
  EXPECT_EQ(bcirc(identity(3, 4)), Matrix::Identity(12, 12));
}

TEST(Bcirc, BlockLayoutAndRoundTrip) {
  Rng rng(1);
  const Tensor3 a = random_general(2, 3, 4, rng);
  const Matrix m = bcirc(a);
  ASSERT_EQ(m.rows(), 8);
  ASSERT_EQ(m.cols(), 12);
  for (Index r = 0; r < 4; ++r) {
    for (Index c = 0; c < 4; ++c) {
      const Matrix block = m.block(2 * r, 3 * c, 2, 3);
      EXPECT_EQ(block, Matrix(a.slice(static_cast<std::size_t>((r - c + 4) % 4))));
    }
  }
  EXPECT_TRUE(bcirc_inv(m, 4) == a);
  Matrix broken = m;
  broken(0, 5) += 1.0;
  EXPECT_EQ(kind_of([&] { bcirc_inv(broken, 4); }), ErrorKind::kNotBlockCirculant);
}

TEST(Bcirc, HomomorphismAndTranspose) {
  Rng rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = rng.index(1, 5), s = rng.index(1, 5), n = rng.index(1, 5), p = rng.index(1, 6);
    const Tensor3 a = random_general(m, s, p, rng), b = random_general(s, n, p, rng);
    EXPECT_LE((bcirc(tprod(a, b)) - bcirc(a) * bcirc(b)).norm(), 1e-12 * bcirc(a).norm() * bcirc(b).norm());
    EXPECT_EQ(bcirc(transpose(a)), Matrix(bcirc(a).transpose()));
  }
}

TEST(Unfold, RoundTripsAndShapes) {
  Rng rng(3);
  const Tensor3 tube = tube_tensor({1, 2, 3});
  const Matrix u = unfold(tube);
  ASSERT_EQ(u.rows(), 3);
  ASSERT_EQ(u.cols(), 1);
  EXPECT_EQ(u(2, 0), 3.0);

  const Tensor3 a = random_general(3, 2, 5, rng);
  EXPECT_TRUE(fold(unfold(a), 5) == a);
  EXPECT_EQ(kind_of([&] { fold(Matrix::Zero(7, 2), 3); }), ErrorKind::kShapeError);

  const MatSlice x = random_mat(3, 4, rng);
  const Vector v = unfold_mat(x);
  ASSERT_EQ(v.size(), 12);
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(v[static_cast<Index>(3 * k + i)], x(i, k));
  }
  EXPECT_EQ(fold_mat(v, 4), x);
  EXPECT_EQ(kind_of([&] { fold_mat(Vector::Zero(7), 3); }), ErrorKind::kShapeError);
}

TEST(Transpose, Definition) {
  Rng rng(4);
  const Tensor3 m = random_general(3, 2, 1, rng);
  EXPECT_EQ(Matrix(transpose(m).slice(0)), Matrix(m.slice(0).transpose()));
  EXPECT_TRUE(transpose(identity(3, 4)) == identity(3, 4));
  for (int trial = 0; trial < 20; ++trial) {
    const Tensor3 a = random_general(rng.index(1, 4), rng.index(1, 4), rng.index(1, 6), rng);
    EXPECT_TRUE(transpose(a) == naive_transpose(a));
    EXPECT_TRUE(transpose(transpose(a)) == a);
  }
}

TEST(Transpose, ReversesProducts) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = rng.index(1, 4), s = rng.index(1, 4), n = rng.index(1, 4), p = rng.index(1, 5);
    const Tensor3 a = random_general(m, s, p, rng), b = random_general(s, n, p, rng);
    EXPECT_LE(testing::rel_err(transpose(tprod(a, b)), tprod(transpose(b), transpose(a))), 1e-12);
  }
}

TEST(Identity, Slices) {
  const Tensor3 i = identity(2, 3);
  EXPECT_EQ(Matrix(i.slice(0)), Matrix::Identity(2, 2));
  EXPECT_EQ(Matrix(i.slice(1)), Matrix::Zero(2, 2));
  EXPECT_EQ(Matrix(i.slice(2)), Matrix::Zero(2, 2));
}

TEST(Predicates, TSymmetry) {
  Rng rng(6);
  const Tensor3 a = random_general(3, 3, 4, rng);
  EXPECT_FALSE(is_t_symmetric(a));
  EXPECT_TRUE(is_t_symmetric(a + transpose(a), 0.0));
  EXPECT_TRUE(is_t_symmetric(identity(3, 4), 0.0));
  EXPECT_EQ(kind_of([&] { is_t_symmetric(random_general(2, 3, 2, rng)); }), ErrorKind::kShapeError);
}

TEST(Predicates, FDiagonalAndStandardForm) {
  Tensor3 s(2, 2, 2);
  s.set_tube(0, 0, {2, 0});
  s.set_tube(1, 1, {1, 0});
  EXPECT_TRUE(is_f_diagonal(s));
  EXPECT_EQ(is_standard_form(s), Tri::kYes);
  s.set_tube(1, 1, {3, 0});
  EXPECT_EQ(is_standard_form(s), Tri::kNo);
  s.set_tube(1, 1, {1, 1});
  EXPECT_EQ(is_standard_form(s), Tri::kIncomparable);
  s(0, 1, 1) = 0.5;
  EXPECT_FALSE(is_f_diagonal(s));

  Rng rng(7);
  EXPECT_TRUE(is_f_diagonal(random_fdiag(3, 5, 4, rng)));
}

TEST(ShiftColumns, CyclicRightShift) {
  MatSlice x(2, 3);
  for (std::size_t k = 0; k < 3; ++k) {
    x(0, k) = static_cast<double>(k + 1);
    x(1, k) = static_cast<double>(10 * (k + 1));
  }
  EXPECT_EQ(shift_columns(x, 0), x);
  const MatSlice one = shift_columns(x, 1);
  EXPECT_EQ(one(0, 0), 3.0);
  EXPECT_EQ(one(0, 1), 1.0);
  EXPECT_EQ(one(0, 2), 2.0);
  EXPECT_EQ(shift_columns(x, 3), x);
  EXPECT_EQ(shift_columns(shift_columns(x, 2), 2), shift_columns(x, 4));

  Rng rng(8);
  const MatSlice y = random_mat(4, 5, rng), z = random_mat(4, 5, rng);
  for (std::size_t k = 0; k < 5; ++k) {
    const double before = (y.matrix().array() * z.matrix().array()).sum();
    const double after =
        (shift_columns(y, k).matrix().array() * shift_columns(z, k).matrix().array()).sum();
    EXPECT_NEAR(after, before, 1e-14);
  }
}

TEST(MatSliceEmbedding, LateralSlicesRoundTrip) {
  Rng rng(9);
  const MatSlice x = random_mat(3, 4, rng);
  const Tensor3 t = to_tensor(x);
  EXPECT_EQ(t.shape(), (Shape{3, 1, 4}));
  EXPECT_EQ(to_mat(t), x);
  const Tensor3 a = random_general(3, 5, 4, rng);
  const MatSlice l = lateral_slice(a, 2);
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(l(i, k), a(i, 2, k));
  }
  EXPECT_EQ(kind_of([&] { lateral_slice(a, 5); }), ErrorKind::kIndexError);
  EXPECT_EQ(to_tube(tube_tensor({4, 5})), Tube({4, 5}));
}

TEST(Tensor3, NaiveProductAgreesWithBcirc) {
  Rng rng(10);
  const Tensor3 a = random_general(3, 4, 5, rng), b = random_general(4, 2, 5, rng);
  EXPECT_LE(testing::rel_err(fold(bcirc(a) * unfold(b), 5), naive_tprod(a, b)), 1e-14);
}

}  // namespace
}  // namespace tubal
