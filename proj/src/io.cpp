// Copyright 2026 The spdgeom Authors
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

#include "spdgeom/io.hpp"

#include "spdgeom/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace spdgeom
{

namespace
{

using nlohmann::json;

json parse_json(const std::string & text)
{
  try {
    return json::parse(text);
  } catch (const json::parse_error & e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

double number_at(const json & v)
{
  if (!v.is_number()) {
    throw ParseError("matrix entry is not a number: " + v.dump());
  }
  const double x = v.get<double>();
  if (!std::isfinite(x)) {
    throw ParseError("matrix entry is not finite");
  }
  return x;
}

Matrix grid_from_json(const json & rows, long expected_n)
{
  if (!rows.is_array() || rows.empty()) {
    throw ParseError("matrix data must be a non-empty array of rows");
  }
  const Index n = static_cast<Index>(rows.size());
  if (expected_n >= 0 && expected_n != n) {
    std::ostringstream os;
    os << "matrix declares n = " << expected_n << " but has " << n << " rows";
    throw ParseError(os.str());
  }
  Matrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    const json & row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n) {
      std::ostringstream os;
      os << "matrix is not square: row " << i << " has "
         << (row.is_array() ? row.size() : 0) << " entries, expected " << n;
      throw ParseError(os.str());
    }
    for (Index j = 0; j < n; ++j) {
      m(i, j) = number_at(row[static_cast<std::size_t>(j)]);
    }
  }
  return m;
}

Matrix matrix_from_json(const json & doc)
{
  if (doc.is_array()) {
    return grid_from_json(doc, -1);
  }
  if (!doc.is_object() || !doc.contains("data")) {
    throw ParseError("matrix JSON must be {\"n\": int, \"data\": [[...]]} or an array of rows");
  }
  long n = -1;
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer()) {
      throw ParseError("matrix field \"n\" must be an integer");
    }
    n = doc["n"].get<long>();
  }
  return grid_from_json(doc["data"], n);
}

std::string trim(const std::string & s)
{
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) {
    return "";
  }
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string & field)
{
  const std::string t = trim(field);
  if (t.empty()) {
    throw ParseError("empty CSV field");
  }
  char * end = nullptr;
  const double x = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size() || !std::isfinite(x)) {
    throw ParseError("invalid number in CSV: '" + t + "'");
  }
  return x;
}

Matrix matrix_from_csv(const std::string & text)
{
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) {
      continue;
    }
    std::vector<double> row;
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      row.push_back(parse_double(field));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw ParseError("CSV matrix is empty");
  }
  const Index n = static_cast<Index>(rows.size());
  Matrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    const auto & row = rows[static_cast<std::size_t>(i)];
    if (static_cast<Index>(row.size()) != n) {
      std::ostringstream os;
      os << "matrix is not square: row " << i << " has " << row.size() << " entries, expected "
         << n;
      throw ParseError(os.str());
    }
    for (Index j = 0; j < n; ++j) {
      m(i, j) = row[static_cast<std::size_t>(j)];
    }
  }
  return m;
}

bool ends_with(const std::string & s, const std::string & suffix)
{
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::vector<Index> parse_sizes(const std::string & list, const std::string & spec)
{
  std::vector<Index> sizes;
  std::istringstream in(list);
  std::string field;
  while (std::getline(in, field, ',')) {
    const std::string t = trim(field);
    char * end = nullptr;
    const long v = std::strtol(t.c_str(), &end, 10);
    if (t.empty() || end != t.c_str() + t.size() || v < 1) {
      throw ParseError("invalid block size '" + t + "' in subspace spec '" + spec + "'");
    }
    sizes.push_back(static_cast<Index>(v));
  }
  if (sizes.empty()) {
    throw ParseError("subspace spec '" + spec + "' lists no block sizes");
  }
  return sizes;
}

void check_dim(const Subspace & e, Index n, const std::string & spec)
{
  if (n > 0 && e.ambient_dim() != n) {
    std::ostringstream os;
    os << "subspace '" << spec << "' has ambient dimension " << e.ambient_dim()
       << " but the matrix is " << n << "x" << n;
    throw DomainError(os.str());
  }
}

}  // namespace

Matrix parse_matrix(const std::string & text, MatrixFormat format)
{
  return format == MatrixFormat::kCsv ? matrix_from_csv(text) : matrix_from_json(parse_json(text));
}

std::string read_file(const std::string & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open file '" + path + "'");
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Matrix load_matrix(const std::string & arg)
{
  const std::string t = trim(arg);
  if (!t.empty() && (t.front() == '[' || t.front() == '{')) {
    return parse_matrix(t, MatrixFormat::kJson);
  }
  const MatrixFormat format = ends_with(t, ".csv") ? MatrixFormat::kCsv : MatrixFormat::kJson;
  return parse_matrix(read_file(t), format);
}

double max_asymmetry(const Matrix & m)
{
  return (m - m.transpose()).cwiseAbs().maxCoeff();
}

SymMatrix require_symmetric(
  const Matrix & m, const std::string & name, std::vector<std::string> & warnings)
{
  const double asym = max_asymmetry(m);
  if (asym > 1e-9 * m.norm()) {
    std::ostringstream os;
    os.precision(17);
    os << name << " is not symmetric: max asymmetry " << asym;
    throw ParseError(os.str());
  }
  if (asym > 0.0) {
    std::ostringstream os;
    os.precision(17);
    os << name << " symmetrized (max asymmetry " << asym << ")";
    warnings.push_back(os.str());
  }
  return SymMatrix(m);
}

std::string write_matrix_json(const Matrix & m)
{
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) {
      row.push_back(m(i, j));
    }
    rows.push_back(std::move(row));
  }
  return json{{"n", m.rows()}, {"data", std::move(rows)}}.dump();
}

std::string write_matrix_csv(const Matrix & m)
{
  std::string out;
  char buf[32];
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
      out += buf;
      out += j + 1 < m.cols() ? "," : "\n";
    }
  }
  return out;
}

Subspace parse_subspace(const std::string & text)
{
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("generators") || !doc["generators"].is_array()) {
    throw ParseError("subspace JSON must be {\"n\": int, \"generators\": [[[...]]]}");
  }
  long n = -1;
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer()) {
      throw ParseError("subspace field \"n\" must be an integer");
    }
    n = doc["n"].get<long>();
  }
  std::vector<SymMatrix> gens;
  for (const json & g : doc["generators"]) {
    const Matrix m = grid_from_json(g, n);
    const double asym = max_asymmetry(m);
    if (asym > 1e-9 * std::max(1.0, m.norm())) {
      std::ostringstream os;
      os << "subspace generator is not symmetric: max asymmetry " << asym;
      throw ParseError(os.str());
    }
    gens.emplace_back(m);
  }
  if (gens.empty()) {
    throw ParseError("subspace has no generators");
  }
  try {
    return build_subspace(gens);
  } catch (const DomainError & e) {
    throw ParseError(e.what());
  }
}

Subspace subspace_from_spec(const std::string & spec, Index n)
{
  if (spec == "diag") {
    if (n < 1) {
      throw ParseError("subspace spec 'diag' needs a matrix dimension");
    }
    return diagonal_subspace(n);
  }
  if (spec.rfind("block:", 0) == 0) {
    Subspace e = block_diagonal_subspace(BlockPartition(parse_sizes(spec.substr(6), spec)));
    check_dim(e, n, spec);
    return e;
  }
  if (spec.rfind("antiblock:", 0) == 0) {
    const std::vector<Index> sizes = parse_sizes(spec.substr(10), spec);
    if (sizes.size() != 2) {
      throw ParseError("subspace spec '" + spec + "' needs exactly two block sizes");
    }
    Subspace e = block_antidiagonal_subspace(sizes[0], sizes[1]);
    check_dim(e, n, spec);
    return e;
  }
  if (spec.rfind("file:", 0) == 0) {
    Subspace e = parse_subspace(read_file(spec.substr(5)));
    check_dim(e, n, spec);
    return e;
  }
  throw ParseError(
    "unknown subspace spec '" + spec + "' (expected diag, block:..., antiblock:p,q or file:PATH)");
}

std::uint64_t fnv1a(const std::string & bytes, std::uint64_t seed)
{
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace spdgeom
