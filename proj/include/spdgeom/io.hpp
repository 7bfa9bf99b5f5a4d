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

#ifndef SPDGEOM__IO_HPP_
#define SPDGEOM__IO_HPP_

#include "spdgeom/matfun.hpp"
#include "spdgeom/subspace.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace spdgeom
{

enum class MatrixFormat
{
  kJson,
  kCsv,
};

/// Parses an n x n grid. JSON accepts {"n": n, "data": [[...], ...]} or a bare
/// array of rows; CSV is plain comma-separated rows without a header.
/// Throws ParseError on malformed or non-square input.
Matrix parse_matrix(const std::string & text, MatrixFormat format);

/// Resolves a CLI matrix argument. Text starting with '[' or '{' is an inline
/// JSON literal; anything else is a path, read as CSV when it ends in ".csv".
Matrix load_matrix(const std::string & arg);

/// Reads the raw bytes of a file. Throws ParseError if it cannot be opened.
std::string read_file(const std::string & path);

/// Largest |m_ij - m_ji|.
double max_asymmetry(const Matrix & m);

/// Symmetrizes m when its asymmetry is at most 1e-9 |m|_F, appending a
/// warning if any asymmetry was removed. Throws ParseError otherwise.
SymMatrix require_symmetric(
  const Matrix & m, const std::string & name, std::vector<std::string> & warnings);

/// {"n": n, "data": [[...], ...]} with round-trip exact numbers.
std::string write_matrix_json(const Matrix & m);
/// Rows of 17 significant digits.
std::string write_matrix_csv(const Matrix & m);

/// Parses {"n": n, "generators": [[[...]...], ...]}.
Subspace parse_subspace(const std::string & text);

/// Subspace from a CLI spec: "diag", "block:p1,p2,...", "antiblock:p,q" or
/// "file:PATH". n is the ambient dimension for "diag"; the other specs carry
/// their own and must agree with n when n > 0.
Subspace subspace_from_spec(const std::string & spec, Index n);

/// 64-bit FNV-1a hash.
std::uint64_t fnv1a(const std::string & bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace spdgeom

#endif  // SPDGEOM__IO_HPP_
