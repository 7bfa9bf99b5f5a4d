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

#include "spdgeom/subspace.hpp"

#include "spdgeom/dexp.hpp"
#include "spdgeom/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace spdgeom
{

namespace
{

// Removes the components of v along the (orthonormal) basis, twice.
void orthogonalize(Matrix & v, const std::vector<SymMatrix> & basis)
{
  for (int pass = 0; pass < 2; ++pass) {
    for (const SymMatrix & b : basis) {
      v -= v.cwiseProduct(b.matrix()).sum() * b.matrix();
    }
  }
}

}  // namespace

Subspace build_subspace(const std::vector<SymMatrix> & generators)
{
  if (generators.empty()) {
    throw DomainError("empty subspace: no generators");
  }
  const Index n = generators.front().dim();
  double max_norm = 0.0;
  for (const SymMatrix & g : generators) {
    if (g.dim() != n) {
      throw DomainError("subspace generators have mismatched dimensions");
    }
    max_norm = std::max(max_norm, g.norm());
  }
  if (!(max_norm > 1e-12)) {
    throw DomainError("empty subspace: all generators are numerically zero");
  }

  std::vector<SymMatrix> basis;
  for (const SymMatrix & g : generators) {
    Matrix v = g.matrix();
    orthogonalize(v, basis);
    const double r = v.norm();
    if (r > 1e-10 * max_norm) {
      basis.emplace_back(v / r);
    }
  }
  return Subspace(n, std::move(basis));
}

SymMatrix project_trace(const Subspace & e, const SymMatrix & y)
{
  Matrix p = Matrix::Zero(e.ambient_dim(), e.ambient_dim());
  for (const SymMatrix & b : e.basis()) {
    p += trace_product(y, b) * b.matrix();
  }
  return SymMatrix(p);
}

SymMatrix project_out(const Subspace & e, const SymMatrix & y)
{
  return y - project_trace(e, y);
}

std::vector<SymMatrix> standard_sym_basis(Index n)
{
  std::vector<SymMatrix> out;
  out.reserve(static_cast<std::size_t>(n * (n + 1) / 2));
  for (Index i = 0; i < n; ++i) {
    Matrix m = Matrix::Zero(n, n);
    m(i, i) = 1.0;
    out.emplace_back(m);
  }
  const double s = 1.0 / std::sqrt(2.0);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      Matrix m = Matrix::Zero(n, n);
      m(i, j) = s;
      m(j, i) = s;
      out.emplace_back(m);
    }
  }
  return out;
}

std::optional<Subspace> orthogonal_complement(const Subspace & e)
{
  const Index n = e.ambient_dim();
  const std::size_t full = static_cast<std::size_t>(n * (n + 1) / 2);
  if (e.dim() >= full) {
    return std::nullopt;
  }

  // Pivoted Gram-Schmidt: repeatedly take the standard basis element with the
  // largest residual against the current span.
  std::vector<SymMatrix> span = e.basis();
  std::vector<SymMatrix> complement;
  std::vector<Matrix> residuals;
  for (const SymMatrix & s : standard_sym_basis(n)) {
    Matrix v = s.matrix();
    orthogonalize(v, span);
    residuals.push_back(std::move(v));
  }
  while (span.size() < full) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < residuals.size(); ++i) {
      if (residuals[i].norm() > residuals[best].norm()) {
        best = i;
      }
    }
    Matrix v = residuals[best];
    orthogonalize(v, span);
    SymMatrix b(v / v.norm());
    for (Matrix & r : residuals) {
      r -= r.cwiseProduct(b.matrix()).sum() * b.matrix();
    }
    span.push_back(b);
    complement.push_back(std::move(b));
  }
  return Subspace(n, std::move(complement));
}

BlockPartition::BlockPartition(std::vector<Index> sizes)
: sizes_(std::move(sizes))
{
  if (sizes_.empty()) {
    throw DomainError("block partition needs at least one block");
  }
  for (Index s : sizes_) {
    if (s < 1) {
      throw DomainError("block sizes must be positive");
    }
  }
}

Index BlockPartition::total() const
{
  return std::accumulate(sizes_.begin(), sizes_.end(), Index{0});
}

std::size_t BlockPartition::block_of(Index i) const
{
  Index end = 0;
  for (std::size_t b = 0; b < sizes_.size(); ++b) {
    end += sizes_[b];
    if (i < end) {
      return b;
    }
  }
  throw DomainError("index outside the block partition");
}

namespace
{

// Standard basis elements of Sym(n) whose (i, j) position satisfies keep(i, j).
template<typename Keep>
Subspace standard_subset(Index n, Keep keep)
{
  std::vector<SymMatrix> gens;
  for (const SymMatrix & s : standard_sym_basis(n)) {
    Index i = 0;
    Index j = 0;
    s.matrix().cwiseAbs().maxCoeff(&i, &j);
    if (keep(i, j)) {
      gens.push_back(s);
    }
  }
  return build_subspace(gens);
}

}  // namespace

Subspace diagonal_subspace(Index n)
{
  return standard_subset(n, [](Index i, Index j) {return i == j;});
}

Subspace full_sym_subspace(Index n)
{
  return build_subspace(standard_sym_basis(n));
}

Subspace block_diagonal_subspace(const BlockPartition & p)
{
  return standard_subset(
    p.total(), [&p](Index i, Index j) {return p.block_of(i) == p.block_of(j);});
}

Subspace zero_diagonal_blocks_subspace(const BlockPartition & p)
{
  if (p.count() < 2) {
    throw DomainError("zero-diagonal-block subspace needs at least two blocks");
  }
  return standard_subset(
    p.total(), [&p](Index i, Index j) {return p.block_of(i) != p.block_of(j);});
}

Subspace block_antidiagonal_subspace(Index p, Index q)
{
  return zero_diagonal_blocks_subspace(BlockPartition({p, q}));
}

Subspace sl2_subspace()
{
  Vector d(2);
  d << 1.0, -1.0;
  return build_subspace({SymMatrix::diagonal(d)});
}

LtsReport lts_check(const Subspace & e, double tol)
{
  if (!(tol > 0.0)) {
    throw PreconditionError("lts_check tolerance must be positive");
  }
  const auto & b = e.basis();
  const std::size_t k = b.size();

  // [B_j, B_k] for all pairs; antisymmetric in (j, k).
  std::vector<Matrix> brackets(k * k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t l = 0; l < k; ++l) {
      brackets[j * k + l] = ad(b[j].matrix(), b[l].matrix());
    }
  }

  auto outside = [&e](const Matrix & m) {return project_out(e, SymMatrix(m));};

  LtsReport report{true, true, true, 0.0, 0.0, std::nullopt};

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = j + 1; l < k; ++l) {
        const SymMatrix off = outside(ad(b[i].matrix(), brackets[j * k + l]));
        const double scale = std::max(1.0, b[i].norm() * b[j].norm() * b[l].norm());
        const double r = off.norm() / scale;
        if (r > report.max_triple_residual) {
          report.max_triple_residual = r;
          if (r > tol) {
            report.witness = LtsWitness{b[i], b[j], b[l], off, r};
          }
        }
      }
    }
  }
  report.triple_ok = report.max_triple_residual <= tol;

  // [X, [X, Y]] is quadratic in X: check X = B_i and the polarized
  // combinations [B_i, [B_m, Y]] + [B_m, [B_i, Y]] for i < m.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t m = i; m < k; ++m) {
      for (std::size_t j = 0; j < k; ++j) {
        Matrix v = ad(b[i].matrix(), brackets[m * k + j]);
        if (m != i) {
          v += ad(b[m].matrix(), brackets[i * k + j]);
        }
        const SymMatrix off = outside(v);
        const double scale = std::max(1.0, b[i].norm() * b[m].norm() * b[j].norm());
        const double r = off.norm() / scale;
        if (r > report.max_double_residual) {
          report.max_double_residual = r;
          if (r > tol && !report.witness) {
            report.witness = LtsWitness{b[i], b[m], b[j], off, r};
          }
        }
      }
    }
  }
  report.double_bracket_ok = report.max_double_residual <= tol;
  report.is_lts = report.triple_ok && report.double_bracket_ok;
  return report;
}

LtsReport multi_block_zero_diag_counterexample(int num_blocks, int block_size)
{
  if (num_blocks < 3) {
    throw PreconditionError("the zero-diagonal-block counterexample needs at least three blocks");
  }
  if (block_size < 1) {
    throw PreconditionError("block size must be positive");
  }
  const BlockPartition p(std::vector<Index>(static_cast<std::size_t>(num_blocks), block_size));
  return lts_check(zero_diagonal_blocks_subspace(p), kDefaultLtsTol);
}

}  // namespace spdgeom
