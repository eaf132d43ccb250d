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

#include "tubal/tproduct.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "tubal/error.hpp"
#include "tubal/oracle.hpp"
#include "tubal/parallel.hpp"
#include "tubal/transform.hpp"

namespace tubal {

namespace {

void require_square(const Tensor3& a, const char* op) {
  if (a.rows() != a.cols()) {
    std::ostringstream os;
    os << op << " requires an n x n x p tensor, got " << a.rows() << "x" << a.cols() << "x"
       << a.depth();
    throw Error(ErrorKind::kShapeError, os.str());
  }
}

}  // namespace

Tensor3 tprod(const Tensor3& a, const Tensor3& b, ProductPath path) {
  if (a.cols() != b.rows() || a.depth() != b.depth()) {
    std::ostringstream os;
    os << "T-product shape mismatch: " << a.rows() << "x" << a.cols() << "x" << a.depth()
       << " * " << b.rows() << "x" << b.cols() << "x" << b.depth();
    throw Error(ErrorKind::kShapeError, os.str());
  }
  if (path == ProductPath::kReference) return oracle::oracle_tprod(a, b);
  if (a.depth() == 1) {
    Tensor3 c(a.rows(), b.cols(), 1);
    c.slice(0).noalias() = a.slice(0) * b.slice(0);
    return c;
  }
  return from_freq(slice_product(to_freq(a), to_freq(b)));
}

MatSlice tprod_mat(const Tensor3& a, const MatSlice& x, ProductPath path) {
  if (a.cols() != x.rows() || a.depth() != x.cols()) {
    std::ostringstream os;
    os << "T-product shape mismatch: " << a.rows() << "x" << a.cols() << "x" << a.depth()
       << " * matrix " << x.rows() << "x" << x.cols();
    throw Error(ErrorKind::kShapeError, os.str());
  }
  return to_mat(tprod(a, to_tensor(x), path));
}

Tensor3 t_inverse(const Tensor3& a, double cutoff) {
  require_square(a, "t_inverse");
  const FreqSlices f = to_freq(a);
  const std::size_t p = a.depth();
  const std::size_t count = FreqSlices::independent(p);
  std::vector<CMatrix> inverses(count);
  std::vector<double> ratios(count);
  parallel_for(count, a.rows() * a.rows() * a.rows(), [&](std::size_t k) {
    Eigen::JacobiSVD<CMatrix> svd(f.slice(k));
    const auto& sv = svd.singularValues();
    const double largest = sv.size() > 0 ? sv[0] : 0.0;
    const double smallest = sv.size() > 0 ? sv[sv.size() - 1] : 0.0;
    ratios[k] = largest > 0.0 ? smallest / largest : 0.0;
    if (ratios[k] > cutoff) inverses[k] = f.slice(k).fullPivLu().inverse();
  });
  for (std::size_t k = 0; k < count; ++k) {
    if (ratios[k] <= cutoff) throw SingularError(k, ratios[k], cutoff);
  }
  FreqSlices out(a.rows(), a.cols(), p);
  for (std::size_t k = 0; k < count; ++k) out.set_mirrored(k, inverses[k]);
  return from_freq(out);
}

double t_condition_number(const Tensor3& a) {
  const FreqSlices f = to_freq(a);
  double worst = 0.0;
  for (std::size_t k = 0; k < FreqSlices::independent(a.depth()); ++k) {
    Eigen::JacobiSVD<CMatrix> svd(f.slice(k));
    const auto& sv = svd.singularValues();
    const double smallest = sv[sv.size() - 1];
    if (smallest == 0.0) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, sv[0] / smallest);
  }
  return worst;
}

Tensor3 t_power(const Tensor3& a, std::size_t k) {
  require_square(a, "t_power");
  if (k == 0) throw Error(ErrorKind::kShapeError, "t_power exponent must be >= 1");
  Tensor3 result = a;
  for (std::size_t i = 1; i < k; ++i) result = tprod(result, a);
  return result;
}

bool is_orthogonal(const Tensor3& u, double tol) {
  require_square(u, "is_orthogonal");
  const Tensor3 gram = tprod(transpose(u), u) - identity(u.rows(), u.depth());
  return gram.norm() <= tol * std::sqrt(static_cast<double>(u.rows() * u.depth()));
}

}  // namespace tubal
