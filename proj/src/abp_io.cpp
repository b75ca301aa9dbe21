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

#include "readk/abp_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace readk {
namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw FormatError(where + ": " + what);
}

std::int64_t as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<std::int64_t>();
}

std::size_t as_count(const json& j, const std::string& where) {
  const std::int64_t v = as_int(j, where);
  if (v < 0) fail(where, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

UniMatrix parse_matrix(const json& j, const PrimeField& F,
                       const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a nonempty list of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) {
    fail(where + "[0]", "expected a nonempty row");
  }
  const std::size_t cols = j[0].size();
  UniMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rw = where + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != cols) {
      fail(rw, "rows must all have " + std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const std::string ew = rw + "[" + std::to_string(c) + "]";
      const json& e = j[r][c];
      if (!e.is_array()) fail(ew, "expected a coefficient list");
      std::vector<Elem> coeffs;
      for (std::size_t i = 0; i < e.size(); ++i) {
        coeffs.push_back(F.reduce(as_int(e[i], ew + "[" + std::to_string(i) + "]")));
      }
      m(r, c) = UniPoly(std::move(coeffs));
    }
  }
  return m;
}

// Line and column (1-based) of a byte offset.
std::pair<std::size_t, std::size_t> locate(std::string_view text,
                                           std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

ObliviousAbp parse_abp(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is one past the offending character.
    const auto [line, col] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
    throw FormatError("line " + std::to_string(line) + ", column " +
                          std::to_string(col) + ": malformed JSON",
                      line, col);
  }
  if (!doc.is_object()) fail("document", "expected an object");
  for (const char* key : {"field_prime", "num_vars", "layers"}) {
    if (!doc.contains(key)) fail("document", std::string("missing \"") + key + "\"");
  }
  const std::int64_t p = as_int(doc["field_prime"], "field_prime");
  if (p < 2 || p >= (std::int64_t{1} << 31) ||
      !is_prime(static_cast<std::uint64_t>(p))) {
    fail("field_prime", "expected a prime below 2^31");
  }
  const PrimeField F(static_cast<std::uint32_t>(p));
  const std::size_t n = as_count(doc["num_vars"], "num_vars");
  const json& jl = doc["layers"];
  if (!jl.is_array()) fail("layers", "expected a list");
  std::vector<Layer> layers;
  for (std::size_t i = 0; i < jl.size(); ++i) {
    const std::string where = "layers[" + std::to_string(i) + "]";
    const json& l = jl[i];
    if (!l.is_object()) fail(where, "expected an object");
    if (!l.contains("var")) fail(where, "missing \"var\"");
    if (!l.contains("matrix")) fail(where, "missing \"matrix\"");
    Layer layer;
    if (!l["var"].is_null()) {
      layer.var = as_count(l["var"], where + ".var");
      if (*layer.var >= n) fail(where + ".var", "variable index out of range");
    }
    layer.matrix = parse_matrix(l["matrix"], F, where + ".matrix");
    if (l.contains("padding")) {
      if (!l["padding"].is_boolean()) fail(where + ".padding", "expected a boolean");
      layer.padding = l["padding"].get<bool>();
    }
    layers.push_back(std::move(layer));
  }
  std::optional<std::size_t> width, degree;
  if (doc.contains("width")) width = as_count(doc["width"], "width");
  if (doc.contains("degree")) degree = as_count(doc["degree"], "degree");
  try {
    return ObliviousAbp(F, n, std::move(layers), width, degree);
  } catch (const AbpError& e) {
    throw FormatError(std::string("invalid program: ") + e.what());
  }
}

ObliviousAbp load_abp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_abp(ss.str());
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what(), e.line(), e.column());
  }
}

std::string serialize_abp(const ObliviousAbp& a) {
  std::ostringstream os;
  os << "{\n  \"field_prime\": " << a.field().prime()
     << ",\n  \"num_vars\": " << a.num_vars() << ",\n  \"width\": " << a.width()
     << ",\n  \"degree\": " << a.degree() << ",\n  \"layers\": [";
  for (std::size_t i = 0; i < a.num_layers(); ++i) {
    const Layer& l = a.layers()[i];
    json jl = json::object();
    jl["var"] = l.var ? json(*l.var) : json(nullptr);
    json m = json::array();
    for (std::size_t r = 0; r < l.matrix.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < l.matrix.cols(); ++c) {
        row.push_back(l.matrix(r, c).coeffs);
      }
      m.push_back(std::move(row));
    }
    jl["matrix"] = std::move(m);
    if (l.padding) jl["padding"] = true;
    os << (i ? ",\n    " : "\n    ") << jl.dump();
  }
  os << "\n  ]\n}\n";
  return os.str();
}

void save_abp(const std::string& path, const ObliviousAbp& a) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << serialize_abp(a);
}

}  // namespace readk
