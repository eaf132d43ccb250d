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

#include "tubal/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "tubal/error.hpp"

namespace tubal::io {

namespace {

[[noreturn]] void format_error(const std::string& what) {
  throw Error(ErrorKind::kFormatError, what);
}

class Tokens {
 public:
  explicit Tokens(std::string_view text) : text_(text) {}

  std::string_view next() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
    if (pos_ >= text_.size()) format_error("unexpected end of input");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void expect(std::string_view word) {
    std::string_view got = next();
    if (got != word) {
      format_error("expected '" + std::string(word) + "', got '" + std::string(got) + "'");
    }
  }

  std::size_t dimension() {
    std::string_view tok = next();
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value == 0) {
      format_error("invalid dimension '" + std::string(tok) + "'");
    }
    return value;
  }

  double number() {
    std::string_view tok = next();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      format_error("invalid number '" + std::string(tok) + "'");
    }
    return value;
  }

  void finish() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
    if (pos_ != text_.size()) format_error("trailing data after the last value");
  }

 private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void append_row(std::string& out, const auto& row, std::size_t count) {
  for (std::size_t c = 0; c < count; ++c) {
    if (c > 0) out += ' ';
    out += format_double(row(c));
  }
  out += '\n';
}

}  // namespace

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 17);
  return std::string(buf.data(), ptr);
}

std::string format_tube(const Tube& t) {
  std::string out = "TUBE 1\n" + std::to_string(t.size()) + "\n";
  append_row(out, [&](std::size_t i) { return t[i]; }, t.size());
  return out;
}

std::string format_mat(const MatSlice& x) {
  std::string out = "MAT 1\n" + std::to_string(x.rows()) + " " + std::to_string(x.cols()) + "\n";
  for (std::size_t i = 0; i < x.rows(); ++i) {
    append_row(out, [&](std::size_t k) { return x(i, k); }, x.cols());
  }
  return out;
}

std::string format_tensor(const Tensor3& a) {
  std::string out = "T3 1\n" + std::to_string(a.rows()) + " " + std::to_string(a.cols()) + " " +
                    std::to_string(a.depth()) + "\n";
  for (std::size_t k = 0; k < a.depth(); ++k) {
    if (k > 0) out += '\n';
    for (std::size_t i = 0; i < a.rows(); ++i) {
      append_row(out, [&](std::size_t j) { return a(i, j, k); }, a.cols());
    }
  }
  return out;
}

Tube parse_tube(std::string_view text) {
  Tokens tok(text);
  tok.expect("TUBE");
  tok.expect("1");
  const std::size_t p = tok.dimension();
  Tube t(p);
  for (std::size_t i = 0; i < p; ++i) t[i] = tok.number();
  tok.finish();
  return t;
}

MatSlice parse_mat(std::string_view text) {
  Tokens tok(text);
  tok.expect("MAT");
  tok.expect("1");
  const std::size_t n = tok.dimension();
  const std::size_t p = tok.dimension();
  MatSlice x(n, p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < p; ++k) x(i, k) = tok.number();
  }
  tok.finish();
  return x;
}

Tensor3 parse_tensor(std::string_view text) {
  Tokens tok(text);
  tok.expect("T3");
  tok.expect("1");
  const std::size_t m = tok.dimension();
  const std::size_t n = tok.dimension();
  const std::size_t p = tok.dimension();
  Tensor3 a(m, n, p);
  for (std::size_t k = 0; k < p; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j, k) = tok.number();
    }
  }
  tok.finish();
  return a;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) format_error("cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) format_error("cannot write '" + path.string() + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) format_error("failed writing '" + path.string() + "'");
}

}  // namespace tubal::io
