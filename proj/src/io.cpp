// Copyright 2026 The majsep Authors
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

#include "majsep/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "majsep/error.hpp"

namespace majsep {

namespace {

using KeyValues = std::map<std::string, std::vector<std::string>>;

[[noreturn]] void parse_error(const std::string& msg) {
  throw Error(ErrorCode::Parse, msg);
}

bool looks_like_json(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{';
  }
  return false;
}

// Splits "key: v v v" sections; a section runs until the next key.
KeyValues split_keywords(std::string_view text) {
  KeyValues out;
  std::string current;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      const auto colon = tok.find(':');
      if (colon != std::string::npos) {
        current = tok.substr(0, colon);
        if (current.empty()) {
          parse_error("line " + std::to_string(line_no) + ": empty key");
        }
        if (out.count(current) != 0) {
          parse_error("line " + std::to_string(line_no) + ": duplicate key '" +
                      current + "'");
        }
        out[current];
        tok.erase(0, colon + 1);
        if (tok.empty()) continue;
      }
      if (current.empty()) {
        parse_error("line " + std::to_string(line_no) + ": value '" + tok +
                    "' before any key");
      }
      out[current].push_back(tok);
    }
  }
  return out;
}

double to_real(const std::string& tok, const std::string& key) {
  double v = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    parse_error("key '" + key + "': '" + tok + "' is not a number");
  }
  return v;
}

std::size_t to_count(const std::string& tok, const std::string& key) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    parse_error("key '" + key + "': '" + tok + "' is not a non-negative integer");
  }
  return v;
}

const std::vector<std::string>& require(const KeyValues& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) parse_error("missing key '" + key + "'");
  return it->second;
}

struct RawMatrix {
  std::vector<std::size_t> dims;
  std::size_t split = 0;
  std::vector<double> re;
  std::vector<double> im;
};

RawMatrix raw_from_keywords(std::string_view text) {
  const KeyValues kv = split_keywords(text);
  for (const auto& [key, _] : kv) {
    if (key != "dims" && key != "split" && key != "re" && key != "im") {
      parse_error("unknown key '" + key + "'");
    }
  }
  RawMatrix raw;
  for (const auto& t : require(kv, "dims")) raw.dims.push_back(to_count(t, "dims"));
  const auto& split = require(kv, "split");
  if (split.size() != 1) parse_error("key 'split' takes exactly one value");
  raw.split = to_count(split.front(), "split");
  for (const auto& t : require(kv, "re")) raw.re.push_back(to_real(t, "re"));
  for (const auto& t : require(kv, "im")) raw.im.push_back(to_real(t, "im"));
  return raw;
}

RawMatrix raw_from_json(std::string_view text) {
  RawMatrix raw;
  try {
    const auto j = nlohmann::json::parse(text);
    for (const char* key : {"dims", "split", "re", "im"}) {
      if (!j.contains(key)) parse_error(std::string("missing key '") + key + "'");
    }
    raw.dims = j.at("dims").get<std::vector<std::size_t>>();
    raw.split = j.at("split").get<std::size_t>();
    raw.re = j.at("re").get<std::vector<double>>();
    raw.im = j.at("im").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("malformed JSON matrix file: ") + e.what());
  }
  return raw;
}

DensityMatrix build(const RawMatrix& raw) {
  if (raw.dims.empty()) parse_error("'dims' is empty");
  std::size_t n = 1;
  for (auto d : raw.dims) {
    if (d == 0) parse_error("'dims' entries must be positive");
    n *= d;
  }
  if (raw.split < 1 || raw.split >= raw.dims.size()) {
    parse_error("'split' must satisfy 1 <= split < " + std::to_string(raw.dims.size()));
  }
  if (raw.re.size() != n * n || raw.im.size() != n * n) {
    parse_error("'re' and 'im' need " + std::to_string(n * n) + " values each, got " +
                std::to_string(raw.re.size()) + " and " + std::to_string(raw.im.size()));
  }
  std::vector<Complex> entries(n * n);
  for (std::size_t i = 0; i < n * n; ++i) entries[i] = {raw.re[i], raw.im[i]};
  ComplexMatrix m;
  try {
    m = ComplexMatrix(n, std::move(entries));
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidState, e.what());
  }
  return DensityMatrix(std::move(m), raw.dims, raw.split);
}

std::string real17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

DensityMatrix parse_matrix_file(std::string_view text) {
  return build(looks_like_json(text) ? raw_from_json(text) : raw_from_keywords(text));
}

DensityMatrix load_matrix_file(const std::filesystem::path& path) {
  return parse_matrix_file(read_text_file(path));
}

std::string format_matrix_file(const DensityMatrix& rho,
                               const std::vector<std::string>& header) {
  std::ostringstream os;
  for (const auto& h : header) os << "# " << h << '\n';
  os << "dims:";
  for (auto d : rho.dims()) os << ' ' << d;
  os << "\nsplit: " << rho.split() << '\n';
  const std::size_t n = rho.dim();
  for (int part = 0; part < 2; ++part) {
    os << (part == 0 ? "re:" : "im:") << '\n';
    for (std::size_t i = 0; i < n; ++i) {
      os << ' ';
      for (std::size_t j = 0; j < n; ++j) {
        const Complex z = rho.matrix()(i, j);
        os << ' ' << real17(part == 0 ? z.real() : z.imag());
      }
      os << '\n';
    }
  }
  return os.str();
}

SpectraFile parse_spectra_file(std::string_view text) {
  SpectraFile out;
  if (looks_like_json(text)) {
    try {
      const auto j = nlohmann::json::parse(text);
      if (!j.contains("r") || !j.contains("s")) parse_error("spectra file needs 'r' and 's'");
      out.r = j.at("r").get<std::vector<double>>();
      out.s = j.at("s").get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
      parse_error(std::string("malformed JSON spectra file: ") + e.what());
    }
  } else {
    const KeyValues kv = split_keywords(text);
    for (const auto& [key, _] : kv) {
      if (key != "r" && key != "s") parse_error("unknown key '" + key + "'");
    }
    for (const auto& t : require(kv, "r")) out.r.push_back(to_real(t, "r"));
    for (const auto& t : require(kv, "s")) out.s.push_back(to_real(t, "s"));
  }
  if (out.r.empty() || out.s.empty()) parse_error("'r' and 's' must be non-empty");
  return out;
}

SpectraFile load_spectra_file(const std::filesystem::path& path) {
  return parse_spectra_file(read_text_file(path));
}

}  // namespace majsep
