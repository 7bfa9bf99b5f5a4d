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

#include "spdgeom/errors.hpp"
#include "spdgeom/subspace.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"

namespace spdgeom
{
namespace
{

using test::diag2;
using test::max_abs;
using test::offdiag2;
using test::sym2;

Matrix gram(const Subspace & e)
{
  const auto & b = e.basis();
  Matrix g(b.size(), b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      g(i, j) = trace_product(b[i], b[j]);
    }
  }
  return g;
}

// Conjugating every element by an orthogonal q preserves the LTS property.
Subspace conjugate(const Subspace & e, const Matrix & q)
{
  std::vector<SymMatrix> gens;
  for (const SymMatrix & b : e.basis()) {
    gens.push_back(congruence(q, b));
  }
  return build_subspace(gens);
}

// Random basis of the same span: each generator is a random combination.
Subspace remix(const Subspace & e, test::Rng & rng)
{
  const auto & b = e.basis();
  std::vector<SymMatrix> gens;
  for (std::size_t i = 0; i < b.size(); ++i) {
    SymMatrix g = SymMatrix::zero(e.ambient_dim());
    for (const SymMatrix & v : b) {
      g += test::uniform(rng, -1.0, 1.0) * v;
    }
    gens.push_back(g);
  }
  return build_subspace(gens);
}

TEST(BuildSubspace, Examples)
{
  const Subspace d = build_subspace({diag2(1, 0), diag2(1, 1)});
  EXPECT_EQ(d.dim(), 2u);
  EXPECT_LE(max_abs(gram(d) - Matrix::Identity(2, 2)), 1e-15);
  EXPECT_LE(project_out(d, diag2(3, -7)).norm(), 1e-15);

  test::Rng rng(1);
  const SymMatrix a = test::random_sym(rng, 3);
  EXPECT_EQ(build_subspace({a, 2.0 * a}).dim(), 1u);

  const Subspace o = build_subspace({offdiag2()});
  ASSERT_EQ(o.dim(), 1u);
  EXPECT_LE(max_abs(o.basis()[0].matrix().cwiseAbs() - offdiag2().matrix() / std::sqrt(2.0)), 1e-15);
}

TEST(BuildSubspace, Errors)
{
  EXPECT_THROW(build_subspace({}), DomainError);
  EXPECT_THROW(build_subspace({SymMatrix::zero(2)}), DomainError);
  EXPECT_THROW(build_subspace({SymMatrix::identity(2), SymMatrix::identity(3)}), DomainError);
}

TEST(ProjectTrace, Examples)
{
  const Subspace d = diagonal_subspace(2);
  EXPECT_LE(max_abs(project_trace(d, diag2(3, 4)).matrix() - diag2(3, 4).matrix()), 1e-15);
  EXPECT_LE(max_abs(project_trace(d, sym2(2, 1, 2)).matrix() - diag2(2, 2).matrix()), 1e-15);
  EXPECT_LE(max_abs(project_trace(block_antidiagonal_subspace(1, 1), diag2(1, 5)).matrix()), 0.0);
}

TEST(ProjectTrace, IdempotentAndSelfAdjoint)
{
  test::Rng rng(2);
  for (int s = 0; s < 100; ++s) {
    const Index n = 2 + s % 4;
    std::vector<SymMatrix> gens;
    for (int k = 0; k < 1 + s % 4; ++k) {
      gens.push_back(test::random_sym(rng, n));
    }
    const Subspace e = build_subspace(gens);
    const SymMatrix a = test::random_sym(rng, n);
    const SymMatrix b = test::random_sym(rng, n);
    const SymMatrix pa = project_trace(e, a);
    ASSERT_LE((project_trace(e, pa) - pa).norm(), 1e-12);
    ASSERT_NEAR(trace_product(pa, b), trace_product(a, project_trace(e, b)), 1e-10);
  }
}

TEST(Complement, Examples)
{
  const auto f = orthogonal_complement(diagonal_subspace(2));
  ASSERT_TRUE(f.has_value());
  ASSERT_EQ(f->dim(), 1u);
  EXPECT_LE(max_abs(f->basis()[0].matrix().cwiseAbs() - offdiag2().matrix() / std::sqrt(2.0)), 1e-15);

  EXPECT_FALSE(orthogonal_complement(full_sym_subspace(2)).has_value());

  const BlockPartition p({2, 3});
  const auto f2 = orthogonal_complement(block_diagonal_subspace(p));
  ASSERT_TRUE(f2.has_value());
  const Subspace e3 = zero_diagonal_blocks_subspace(p);
  ASSERT_EQ(f2->dim(), e3.dim());
  test::Rng rng(3);
  const SymMatrix y = test::random_sym(rng, 5);
  EXPECT_LE((project_trace(*f2, y) - project_trace(e3, y)).norm(), 1e-14);
}

TEST(Complement, ProjectionsSumToIdentity)
{
  test::Rng rng(4);
  for (int s = 0; s < 100; ++s) {
    const Index n = 2 + s % 4;
    std::vector<SymMatrix> gens;
    for (int k = 0; k < 1 + s % 5; ++k) {
      gens.push_back(test::random_sym(rng, n));
    }
    const Subspace e = build_subspace(gens);
    const auto f = orthogonal_complement(e);
    if (e.dim() == static_cast<std::size_t>(n * (n + 1) / 2)) {
      ASSERT_FALSE(f.has_value());
      continue;
    }
    ASSERT_TRUE(f.has_value());
    ASSERT_EQ(e.dim() + f->dim(), static_cast<std::size_t>(n * (n + 1) / 2));
    const SymMatrix y = test::random_sym(rng, n);
    ASSERT_LE((project_trace(e, y) + project_trace(*f, y) - y).norm(), 1e-10);
  }
}

TEST(BlockPartition, Basics)
{
  const BlockPartition p({2, 1, 3});
  EXPECT_EQ(p.count(), 3u);
  EXPECT_EQ(p.total(), 6);
  EXPECT_EQ(p.block_of(0), 0u);
  EXPECT_EQ(p.block_of(2), 1u);
  EXPECT_EQ(p.block_of(5), 2u);
  EXPECT_THROW(p.block_of(6), DomainError);
  EXPECT_THROW(BlockPartition({}), DomainError);
  EXPECT_THROW(BlockPartition({2, 0}), DomainError);
}

TEST(BuiltinSubspaces, Dimensions)
{
  EXPECT_EQ(diagonal_subspace(4).dim(), 4u);
  EXPECT_EQ(full_sym_subspace(4).dim(), 10u);
  EXPECT_EQ(block_diagonal_subspace(BlockPartition({2, 2})).dim(), 6u);
  EXPECT_EQ(block_antidiagonal_subspace(2, 3).dim(), 6u);
  EXPECT_EQ(sl2_subspace().dim(), 1u);
  EXPECT_THROW(zero_diagonal_blocks_subspace(BlockPartition({3})), DomainError);
}

TEST(LtsCheck, Examples)
{
  EXPECT_TRUE(lts_check(diagonal_subspace(3)).is_lts);
  EXPECT_TRUE(lts_check(block_antidiagonal_subspace(1, 1)).is_lts);
  EXPECT_TRUE(lts_check(block_diagonal_subspace(BlockPartition({1, 2}))).is_lts);
  EXPECT_TRUE(lts_check(block_antidiagonal_subspace(2, 3)).is_lts);
  EXPECT_TRUE(lts_check(full_sym_subspace(3)).is_lts);
  EXPECT_TRUE(lts_check(sl2_subspace()).is_lts);
}

TEST(LtsCheck, WitnessForNonLts)
{
  // With Y = offdiag / sqrt 2, [Y, [X, Y]] = diag(-1, 1) for X = diag(1, 0);
  // its part outside E is diag(0, 1), of norm 1.
  const Subspace e = build_subspace({diag2(1, 0), offdiag2()});
  const LtsReport r = lts_check(e);
  EXPECT_FALSE(r.is_lts);
  EXPECT_FALSE(r.triple_ok);
  EXPECT_FALSE(r.double_bracket_ok);
  ASSERT_TRUE(r.witness.has_value());
  const Matrix dir = r.witness->residual_direction.matrix();
  EXPECT_NEAR(dir(0, 0), 0.0, 1e-14);
  EXPECT_NEAR(dir(0, 1), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(dir(1, 1)), 1.0, 1e-14);
  EXPECT_NEAR(r.witness->residual, 1.0, 1e-12);
  EXPECT_LE(project_trace(e, r.witness->residual_direction).norm(), 1e-14);
}

TEST(LtsCheck, RejectsNonPositiveTolerance)
{
  EXPECT_THROW(lts_check(diagonal_subspace(2), 0.0), PreconditionError);
}

TEST(LtsCheck, ZeroDiagonalBlocksCounterexample)
{
  const LtsReport three = multi_block_zero_diag_counterexample(3);
  EXPECT_FALSE(three.is_lts);
  ASSERT_TRUE(three.witness.has_value());
  EXPECT_GT(three.witness->residual, 1e-9);
  EXPECT_FALSE(multi_block_zero_diag_counterexample(4).is_lts);
  EXPECT_FALSE(multi_block_zero_diag_counterexample(3, 2).is_lts);
  EXPECT_TRUE(lts_check(zero_diagonal_blocks_subspace(BlockPartition({1, 1}))).is_lts);
  EXPECT_THROW(multi_block_zero_diag_counterexample(2), PreconditionError);
}

TEST(LtsCheck, BasisIndependent)
{
  test::Rng rng(5);
  const std::vector<Subspace> known{
    diagonal_subspace(3), block_antidiagonal_subspace(1, 2),
    block_diagonal_subspace(BlockPartition({2, 2})), block_antidiagonal_subspace(2, 2)};
  for (const Subspace & e : known) {
    for (int s = 0; s < 5; ++s) {
      ASSERT_TRUE(lts_check(remix(e, rng)).is_lts);
      ASSERT_TRUE(lts_check(conjugate(e, test::random_orthogonal(rng, e.ambient_dim()))).is_lts);
    }
  }
}

TEST(LtsCheck, DoubleBracketAgreesWithTripleTest)
{
  test::Rng rng(6);
  int lts_count = 0;
  for (int s = 0; s < 100; ++s) {
    const Index n = 2 + s % 4;
    Subspace e = diagonal_subspace(n);
    if (s % 2 == 0) {
      std::vector<SymMatrix> gens;
      for (int k = 0; k < 1 + s % 4; ++k) {
        gens.push_back(test::random_sym(rng, n));
      }
      e = build_subspace(gens);
    } else {
      const Subspace base = (s % 4 == 1) ? diagonal_subspace(n) :
        block_antidiagonal_subspace(1, n - 1);
      e = conjugate(base, test::random_orthogonal(rng, n));
    }
    const LtsReport r = lts_check(e);
    ASSERT_EQ(r.triple_ok, r.double_bracket_ok) << "sample " << s;
    lts_count += r.is_lts ? 1 : 0;
  }
  // Both verdicts occur in the sample.
  EXPECT_GT(lts_count, 10);
  EXPECT_LT(lts_count, 90);
}

}  // namespace
}  // namespace spdgeom
