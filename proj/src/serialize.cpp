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

#include "tubal/serialize.hpp"

namespace tubal::json {

Json document(const char* command) {
  Json doc;
  doc["schema"] = kSchema;
  doc["command"] = command;
  return doc;
}

Json tube(const Tube& t) {
  Json out = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) out.push_back(t[i]);
  return out;
}

Json matrix(const MatSlice& x) {
  Json out = Json::array();
  for (std::size_t i = 0; i < x.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < x.cols(); ++k) row.push_back(x(i, k));
    out.push_back(std::move(row));
  }
  return out;
}

Json shape(const Shape& s) { return Json::array({s.m, s.n, s.p}); }

Json report(const Report& r) {
  Json out = Json::array();
  for (const Check& c : r.checks()) {
    Json entry;
    entry["check"] = c.name;
    entry["residual"] = c.residual;
    entry["threshold"] = c.threshold;
    entry["pass"] = c.pass;
    entry["kind"] = c.kind == CheckKind::kInvariant ? "invariant" : "claim";
    out.push_back(std::move(entry));
  }
  return out;
}

namespace {

Json columns(const Matrix& values) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < values.cols(); ++k) {
    Json col = Json::array();
    for (Eigen::Index j = 0; j < values.rows(); ++j) col.push_back(values(j, k));
    out.push_back(std::move(col));
  }
  return out;
}

Json tubes(const std::vector<Tube>& list) {
  Json out = Json::array();
  for (const Tube& t : list) out.push_back(tube(t));
  return out;
}

Json numbers(const std::vector<double>& values) {
  Json out = Json::array();
  for (double v : values) out.push_back(v);
  return out;
}

}  // namespace

Json ted(const TedResult& t) {
  Json doc = document("ted");
  doc["shape"] = shape(t.u.shape());
  doc["eigentuples"] = tubes(t.eigentuples);
  doc["largest"] = tube(t.eigentuples.front());
  doc["smallest"] = tube(t.eigentuples.back());
  doc["frequency_eigenvalues"] = columns(t.frequency_eigenvalues);
  Json residuals;
  residuals["reconstruction"] = t.residuals.reconstruction;
  residuals["orthogonality"] = t.residuals.orthogonality;
  residuals["f_diagonal"] = t.residuals.f_diagonal;
  residuals["d_symmetry"] = t.residuals.d_symmetry;
  residuals["eigenpair"] = numbers(t.residuals.eigenpair);
  doc["residuals"] = std::move(residuals);
  return doc;
}

Json tsvd(const TsvdResult& t) {
  Json doc = document("tsvd");
  doc["shape"] = Json::array({t.u.rows(), t.v.rows(), t.u.depth()});
  doc["singular_tuples"] = tubes(t.singular_tuples);
  doc["frequency_singular_values"] = columns(t.frequency_singular_values);
  Json residuals;
  residuals["reconstruction"] = t.residuals.reconstruction;
  residuals["u_orthogonality"] = t.residuals.u_orthogonality;
  residuals["v_orthogonality"] = t.residuals.v_orthogonality;
  residuals["f_diagonal"] = t.residuals.f_diagonal;
  residuals["forward"] = numbers(t.residuals.forward);
  residuals["adjoint"] = numbers(t.residuals.adjoint);
  doc["residuals"] = std::move(residuals);
  return doc;
}

Json psd(const PsdVerdict& v) {
  Json doc = document("psd");
  doc["spectral_class"] = to_string(v.spectral_class);
  doc["smallest_eigentuple"] = tube(v.smallest_eigentuple);
  doc["min_entry"] = v.min_entry;
  if (v.exact_class) {
    doc["exact_class"] = to_string(*v.exact_class);
    const bool spectral_ok = v.spectral_class != SpectralClass::kNotPsdByCriterion;
    const bool exact_ok = *v.exact_class == ExactClass::kElementwisePsd;
    doc["verdicts_agree"] = spectral_ok == exact_ok;
  }
  if (v.witness) {
    Json w;
    w["matrix"] = matrix(*v.witness);
    w["component"] = *v.witness_component;
    w["value"] = tube(*v.witness_value);
    doc["witness"] = std::move(w);
  }
  return doc;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace tubal::json
