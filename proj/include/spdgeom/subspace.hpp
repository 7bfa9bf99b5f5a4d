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

#ifndef SPDGEOM__SUBSPACE_HPP_
#define SPDGEOM__SUBSPACE_HPP_

#include "spdgeom/matfun.hpp"

#include <optional>
#include <vector>

namespace spdgeom
{

/// Linear subspace of Sym(n) with a basis orthonormal for <A, B> = Tr(AB).
class Subspace
{
public:
  Index ambient_dim() const {return n_;}
  std::size_t dim() const {return basis_.size();}
  const std::vector<SymMatrix> & basis() const {return basis_;}

private:
  Subspace(Index n, std::vector<SymMatrix> basis) : n_(n), basis_(std::move(basis)) {}

  friend Subspace build_subspace(const std::vector<SymMatrix> & generators);
  friend std::optional<Subspace> orthogonal_complement(const Subspace & e);

  Index n_;
  std::vector<SymMatrix> basis_;
};

/// Modified Gram-Schmidt (with one re-orthogonalization pass) under the trace
/// inner product. Generators whose residual is at most 1e-10 times the largest
/// generator norm are dropped. Throws DomainError if every generator is zero
/// or the dimensions disagree.
Subspace build_subspace(const std::vector<SymMatrix> & generators);

/// Orthogonal projection onto E for the trace inner product.
SymMatrix project_trace(const Subspace & e, const SymMatrix & y);

/// y - P_E(y).
SymMatrix project_out(const Subspace & e, const SymMatrix & y);

/// E^perp inside Sym(n); std::nullopt when E is all of Sym(n).
std::optional<Subspace> orthogonal_complement(const Subspace & e);

/// {e_i e_i^T} followed by {(e_i e_j^T + e_j e_i^T)/sqrt(2), i < j}.
std::vector<SymMatrix> standard_sym_basis(Index n);

/// Sizes of consecutive diagonal blocks.
class BlockPartition
{
public:
  /// Throws DomainError on an empty list or a non-positive size.
  explicit BlockPartition(std::vector<Index> sizes);

  const std::vector<Index> & sizes() const {return sizes_;}
  std::size_t count() const {return sizes_.size();}
  Index total() const;
  /// Block index of row/column i.
  std::size_t block_of(Index i) const;

private:
  std::vector<Index> sizes_;
};

Subspace diagonal_subspace(Index n);
Subspace full_sym_subspace(Index n);
/// Block-diagonal symmetric matrices for the given partition.
Subspace block_diagonal_subspace(const BlockPartition & p);
/// Symmetric matrices whose diagonal blocks vanish.
Subspace zero_diagonal_blocks_subspace(const BlockPartition & p);
/// Two-block anti-diagonal matrices [[0, C], [C^T, 0]] with C of size p x q.
Subspace block_antidiagonal_subspace(Index p, Index q);
/// span{diag(1, -1)} in Sym(2).
Subspace sl2_subspace();

struct LtsWitness
{
  SymMatrix x;
  SymMatrix y;
  SymMatrix z;
  /// Component of [x, [y, z]] orthogonal to E.
  SymMatrix residual_direction;
  double residual;
};

struct LtsReport
{
  bool is_lts;
  /// [B_i, [B_j, B_k]] in E for all basis triples.
  bool triple_ok;
  /// [X, [X, Y]] in E, checked on the basis and its polarizations.
  bool double_bracket_ok;
  double max_triple_residual;
  double max_double_residual;
  std::optional<LtsWitness> witness;
};

inline constexpr double kDefaultLtsTol = 1e-9;

/// Lie triple system test. Residuals are |(I - P_E)[.,[.,.]]|_F divided by
/// max(1, product of the basis norms).
LtsReport lts_check(const Subspace & e, double tol = kDefaultLtsTol);

/// Runs lts_check on the zero-diagonal-block subspace for num_blocks equal
/// blocks of block_size. Throws PreconditionError when num_blocks < 3.
LtsReport multi_block_zero_diag_counterexample(int num_blocks, int block_size = 1);

}  // namespace spdgeom

#endif  // SPDGEOM__SUBSPACE_HPP_
