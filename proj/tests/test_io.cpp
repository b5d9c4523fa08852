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

#include <doctest.h>

#include <json.hpp>
#include <string>

#include "majsep/criteria.hpp"
#include "majsep/error.hpp"
#include "majsep/io.hpp"

using namespace majsep;

namespace {

const std::string kFixtures = MAJSEP_FIXTURE_DIR;

ErrorCode parse_code(const std::string& text) {
  try {
    parse_matrix_file(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error for: " << text);
  return ErrorCode::Io;
}

ErrorCode load_code(const std::string& name) {
  try {
    load_matrix_file(kFixtures + "/" + name);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error for " << name);
  return ErrorCode::Io;
}

const char* kMixedQubits =
    "dims: 2 2\nsplit: 1\n"
    "re: 0.25 0 0 0  0 0.25 0 0  0 0 0.25 0  0 0 0 0.25\n"
    "im: 0 0 0 0  0 0 0 0  0 0 0 0  0 0 0 0\n";

}  // namespace

TEST_SUITE("io") {

TEST_CASE("keyword format basics") {
  const auto rho = parse_matrix_file(kMixedQubits);
  CHECK(rho.dims() == std::vector<std::size_t>{2, 2});
  CHECK(rho.split() == 1);
  CHECK(max_abs_diff(rho.matrix(), ComplexMatrix::identity(4) * 0.25) == 0.0);

  // Comments, blank lines, values on the key line or below, and "+" signs.
  const auto commented = parse_matrix_file(
      "# header\n\n  dims: 2   2 # trailing\nsplit:1\nre:\n+0.25 0 0 0\n0 0.25 0 0\n"
      "0 0 0.25 0\n0 0 0 2.5e-1\nim: 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0");
  CHECK(max_abs_diff(commented.matrix(), rho.matrix()) == 0.0);
}

TEST_CASE("complex entries and multipartite dims") {
  const auto rho = parse_matrix_file(
      "dims: 2 1 2\nsplit: 2\n"
      "re: 0.5 0 0 0  0 0 0 0  0 0 0 0  0 0 0 0.5\n"
      "im: 0 0 0 -0.5  0 0 0 0  0 0 0 0  0.5 0 0 0\n");
  CHECK(rho.dim_a() == 2);
  CHECK(rho.dim_b() == 2);
  CHECK(rho.matrix()(0, 3) == Complex(0.0, -0.5));
  CHECK(analyze(rho).verdict == Verdict::ProvenInseparable);
}

TEST_CASE("JSON format") {
  const auto rho = parse_matrix_file(R"({"dims":[2,2],"split":1,
      "re":[0.25,0,0,0, 0,0.25,0,0, 0,0,0.25,0, 0,0,0,0.25],
      "im":[0,0,0,0, 0,0,0,0, 0,0,0,0, 0,0,0,0], "label": "ignored"})");
  CHECK(max_abs_diff(rho.matrix(), ComplexMatrix::identity(4) * 0.25) == 0.0);
  CHECK(parse_code(R"({"dims":[2,2],"split":1,"re":[1,0,0,0]})") == ErrorCode::Parse);
  CHECK(parse_code(R"({"dims":[2,2],"split":"one","re":[],"im":[]})") == ErrorCode::Parse);
  CHECK(parse_code("{ not json") == ErrorCode::Parse);
}

TEST_CASE("format round trip is exact") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const std::size_t da = 1 + seed % 3;
    const std::size_t db = 2 + seed % 2;
    const auto rho = random_density_matrix({da, db}, 1, 1 + seed % (da * db), seed);
    const std::string text = format_matrix_file(rho, {"seed " + std::to_string(seed)});
    CHECK(text.rfind("# seed ", 0) == 0);
    const auto back = parse_matrix_file(text);
    CHECK(back.dims() == rho.dims());
    CHECK(back.split() == rho.split());
    CHECK(max_abs_diff(back.matrix(), rho.matrix()) == 0.0);
    CHECK(format_matrix_file(back) == format_matrix_file(rho));
  }
  const auto cat = cat_mixed_state(3, 2, 0.3);
  CHECK(parse_matrix_file(format_matrix_file(cat)).split() == 2);
}

TEST_CASE("structural errors are parse errors") {
  const std::string im16 = "im: 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n";
  const std::string re16 = "re: 0.25 0 0 0 0 0.25 0 0 0 0 0.25 0 0 0 0 0.25\n";
  CHECK(parse_code("split: 1\n" + re16 + im16) == ErrorCode::Parse);
  CHECK(parse_code("dims: 2 2\nsplit: 1\n" + re16) == ErrorCode::Parse);
  CHECK(parse_code("dims: 2 2\nsplit: 0\n" + re16 + im16) == ErrorCode::Parse);
  CHECK(parse_code("dims: 2 2\nsplit: 2\n" + re16 + im16) == ErrorCode::Parse);
  CHECK(parse_code("dims: 2 2\nsplit: 1 1\n" + re16 + im16) == ErrorCode::Parse);
  CHECK(parse_code("dims: 2 0\nsplit: 1\n" + re16 + im16) == ErrorCode::Parse);
  CHECK(parse_code("dims: 2 -2\nsplit: 1\n" + re16 + im16) == ErrorCode::Parse);
  CHECK(parse_code("dims: 2 2\nsplit: 1\nre: 0.25 x\n" + im16) == ErrorCode::Parse);
  CHECK(parse_code("dims: 2 2\nsplit: 1\nre: 1 0 0\n" + im16) == ErrorCode::Parse);
  CHECK(parse_code("0.5\ndims: 2 2\nsplit: 1\n" + re16 + im16) == ErrorCode::Parse);
  CHECK(parse_code("dims: 2 2\ndims: 2 2\nsplit: 1\n" + re16 + im16) == ErrorCode::Parse);
  CHECK(parse_code("dims: 2 2\nsplit: 1\nfoo: 3\n" + re16 + im16) == ErrorCode::Parse);
  CHECK(parse_code("") == ErrorCode::Parse);
}

TEST_CASE("invariant violations are invalid states") {
  const std::string im16 = "im: 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n";
  CHECK(parse_code("dims: 2 2\nsplit: 1\nre: 0.25 0 0 0 0 0.25 0 0 0 0 0.25 0 0 0 0 nan\n" + im16) ==
        ErrorCode::InvalidState);
  CHECK(parse_code("dims: 2 2\nsplit: 1\nre: 0.5 0 0 0 0 0.5 0 0 0 0 0.5 0 0 0 0 0.5\n" + im16) ==
        ErrorCode::InvalidState);
  CHECK(load_code("not_hermitian.txt") == ErrorCode::InvalidState);
  CHECK(load_code("negative.txt") == ErrorCode::InvalidState);
}

TEST_CASE("fixtures") {
  CHECK(load_code("bad_dims.txt") == ErrorCode::Parse);
  CHECK(load_code("bad_split.txt") == ErrorCode::Parse);
  CHECK(load_code("unknown_key.txt") == ErrorCode::Parse);
  CHECK(load_code("missing.txt") == ErrorCode::Io);

  const auto bell = load_matrix_file(kFixtures + "/bell.txt");
  CHECK(max_abs_diff(bell.matrix(), werner_state(2, 1.0).matrix()) <= 1e-15);
  const auto [rho, sigma] = isospectral_pair();
  CHECK(max_abs_diff(load_matrix_file(kFixtures + "/iso_rho.txt").matrix(), rho.matrix()) == 0.0);
  CHECK(max_abs_diff(load_matrix_file(kFixtures + "/iso_sigma.json").matrix(), sigma.matrix()) ==
        0.0);
  CHECK(analyze(load_matrix_file(kFixtures + "/mixed_qutrits.txt")).verdict ==
        Verdict::ConsistentWithSeparability);
}

TEST_CASE("spectra files") {
  const auto q = load_spectra_file(kFixtures + "/spectra_qubits.txt");
  CHECK(q.r == std::vector<double>{0.5, 0.5});
  CHECK(q.s == std::vector<double>{0.75, 0.25});
  const auto t = load_spectra_file(kFixtures + "/spectra_trivial.json");
  CHECK(t.r == std::vector<double>{1.0});
  auto code = [](const std::string& text) {
    try {
      parse_spectra_file(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Io;
  };
  CHECK(code("r: 1\n") == ErrorCode::Parse);
  CHECK(code("r: 1\ns:\n") == ErrorCode::Parse);
  CHECK(code("r: 1\ns: 1\nt: 1\n") == ErrorCode::Parse);
  CHECK(code("r: one\ns: 1\n") == ErrorCode::Parse);
  CHECK(code(R"({"r": [1]})") == ErrorCode::Parse);
  CHECK(code(R"({"r": "x", "s": [1]})") == ErrorCode::Parse);
}

TEST_CASE("read_text_file") {
  CHECK(read_text_file(kFixtures + "/spectra_qubits.txt") == "r: 0.5 0.5\ns: 0.75 0.25\n");
  CHECK_THROWS_AS(read_text_file(kFixtures + "/nope"), Error);
}

}  // TEST_SUITE
