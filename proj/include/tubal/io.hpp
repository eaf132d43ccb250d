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

#ifndef TUBAL_IO_HPP_
#define TUBAL_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "tubal/tensor3.hpp"
#include "tubal/types.hpp"

// Plain-text formats. Numbers are written with 17 significant digits using
// the C locale, so every value re-reads to the identical double.
//
//   TUBE 1\np\nv1 ... vp\n
//   MAT 1\nn p\n + n lines of p values
//   T3 1\nm n p\n + p frontal slices of m lines of n values, blank line
//   between slices
//
// Readers accept any whitespace layout with the right token count and
// throw FormatError otherwise.
namespace tubal::io {

std::string format_double(double v);

std::string format_tube(const Tube& t);
std::string format_mat(const MatSlice& x);
std::string format_tensor(const Tensor3& a);

Tube parse_tube(std::string_view text);
MatSlice parse_mat(std::string_view text);
Tensor3 parse_tensor(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace tubal::io

#endif  // TUBAL_IO_HPP_
