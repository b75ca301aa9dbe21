// Copyright 2026 The readk Authors.
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

#include <filesystem>

#include "readk/abp_io.hpp"
#include "readk/random_instances.hpp"

namespace {

using namespace readk;

TEST(AbpIo, ParsesDocumentedExample) {
  const auto a = parse_abp(R"({
    "field_prime": 101, "num_vars": 2, "width": 2,
    "layers": [
      {"var": 0, "matrix": [[[0, 1], [1]]]},
      {"var": 1, "matrix": [[[1]], [[0, 1]]]},
      {"var": null, "matrix": [[[-3]]]}
    ]})");
  EXPECT_EQ(a.num_layers(), 3u);
  EXPECT_EQ(a.width(), 2u);
  EXPECT_EQ(a.degree(), 1u);
  EXPECT_EQ(a.layers()[2].matrix(0, 0), UniPoly::constant(98));
  EXPECT_EQ(abp_evaluate(a, std::vector<Elem>{2, 5}), 98u * 7 % 101);
}

TEST(AbpIo, SyntaxErrorCarriesPosition) {
  try {
    parse_abp("{\n  \"field_prime\": 101,\n  \"num_vars\": ]\n}");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GT(e.column(), 0u);
  }
}

TEST(AbpIo, SemanticErrorsNameThePath) {
  auto message = [](const char* text) {
    try {
      parse_abp(text);
    } catch (const FormatError& e) {
      return std::string(e.what());
    } catch (const std::exception& e) {
      return std::string("other: ") + e.what();
    }
    return std::string("accepted");
  };
  EXPECT_NE(message(R"({"field_prime": 91, "num_vars": 1,
      "layers": [{"var": 0, "matrix": [[[1]]]}]})").find("field_prime"),
            std::string::npos);
  EXPECT_NE(message(R"({"field_prime": 7, "num_vars": 1,
      "layers": [{"var": 0, "matrix": [[[1], "x"]]}]})")
                .find("layers[0].matrix[0][1]"),
            std::string::npos);
  EXPECT_NE(message(R"({"field_prime": 7, "num_vars": 1,
      "layers": [{"var": 2, "matrix": [[[1]]]}]})").find("layers[0]"),
            std::string::npos);
  EXPECT_NE(message(R"({"field_prime": 7, "num_vars": 1})").find("layers"),
            std::string::npos);
}

TEST(AbpIo, RandomRoundTrip) {
  const PrimeField f(101);
  Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_read_k_abp(f, rng, 1 + rng() % 5, 1 + rng() % 3,
                                     1 + rng() % 3, 1 + rng() % 2);
    const std::string text = serialize_abp(a);
    const auto b = parse_abp(text);
    EXPECT_EQ(a, b);
    EXPECT_EQ(serialize_abp(b), text);
  }
}

TEST(AbpIo, FixturesRoundTrip) {
  std::size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(READK_FIXTURE_DIR)) {
    if (entry.path().extension() != ".json") continue;
    ++seen;
    const auto a = load_abp(entry.path().string());
    const auto b = parse_abp(serialize_abp(a));
    EXPECT_EQ(a, b) << entry.path();
  }
  EXPECT_GE(seen, 10u);
}

TEST(AbpIo, MissingFileNamesThePath) {
  try {
    load_abp("/nonexistent/prog.json");
    FAIL();
  } catch (const std::exception& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/prog.json"),
              std::string::npos);
  }
}

}  // namespace
