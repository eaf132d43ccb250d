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

#ifndef TUBAL_SERIALIZE_HPP_
#define TUBAL_SERIALIZE_HPP_

#include <json.hpp>

#include "tubal/oracle.hpp"
#include "tubal/report.hpp"
#include "tubal/spectral.hpp"
#include "tubal/tensor3.hpp"
#include "tubal/tsvd.hpp"

// JSON documents written by the CLI. Every document carries
// "schema": "tubal-spectra/1". Key order is fixed (nlohmann::ordered_json)
// and no field depends on timing or scheduling, so equal inputs give equal
// bytes.
namespace tubal::json {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "tubal-spectra/1";

Json document(const char* command);

Json tube(const Tube& t);
Json matrix(const MatSlice& x);
Json shape(const Shape& s);
// [{check, residual, threshold, pass, kind}, ...]
Json report(const Report& r);

// Shapes, eigentuples, frequency spectrum and residuals. Factor tensors are
// attached by the caller under "factors".
Json ted(const TedResult& t);
Json tsvd(const TsvdResult& t);
Json psd(const PsdVerdict& v);

// Serializes with 2-space indentation and a trailing newline.
std::string dump(const Json& doc);

}  // namespace tubal::json

#endif  // TUBAL_SERIALIZE_HPP_
