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
#include "spdgeom/matfun.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"

namespace spdgeom
{
namespace
{

using test::diag2;
using test::mat2;
using test::max_abs;
using test::sym2;

const double kLn3 = std::log(3.0);

TEST(SymMatrix, SymmetrizesAndRejectsNonSquare)
{
  const SymMatrix s(mat2(1.0, 2.0, 0.0, 3.0));
  EXPECT_DOUBLE_EQ(s(0, 1), 1.0);
  EXPECT_DOUBLE_EQ(s(1, 0), 1.0);
  EXPECT_THROW(SymMatrix(Matrix(2, 3)), DomainError);
  EXPECT_THROW(SymMatrix(Matrix(0, 0)), DomainError);
}

TEST(SymEigen, DiagonalInput)
{
  const EigenDecomposition eig = sym_eigen(diag2(3.0, 1.0));
  EXPECT_DOUBLE_EQ(eig.lambda(0), 3.0);
  EXPECT_DOUBLE_EQ(eig.lambda(1), 1.0);
  EXPECT_LE(max_abs(eig.q.cwiseAbs() - Matrix::Identity(2, 2)), 1e-15);
}

TEST(SymEigen, TwoByTwoClosedForm)
{
  const EigenDecomposition eig = sym_eigen(sym2(2.0, 1.0, 2.0));
  EXPECT_NEAR(eig.lambda(0), 3.0, 1e-14);
  EXPECT_NEAR(eig.lambda(1), 1.0, 1e-14);
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(eig.q(0, 0)), r, 1e-14);
  EXPECT_NEAR(eig.q(0, 0), eig.q(1, 0), 1e-14);
  EXPECT_NEAR(eig.q(0, 1), -eig.q(1, 1), 1e-14);
}

TEST(SymEigen, IdentityAnyDimension)
{
  for (Index n : {1, 3, 7}) {
    const EigenDecomposition eig = sym_eigen(SymMatrix::identity(n));
    EXPECT_LE((eig.lambda - Vector::Ones(n)).cwiseAbs().maxCoeff(), 0.0);
  }
}

TEST(SymEigen, SignConventionAndOrdering)
{
  test::Rng rng(11);
  const EigenDecomposition eig = sym_eigen(test::random_sym(rng, 6));
  for (Index k = 0; k < 6; ++k) {
    if (k > 0) {
      EXPECT_GE(eig.lambda(k - 1), eig.lambda(k));
    }
    Index arg = 0;
    eig.q.col(k).cwiseAbs().maxCoeff(&arg);
    EXPECT_GT(eig.q(arg, k), 0.0);
  }
}

TEST(SymEigen, RandomReconstructionAgainstOracle)
{
  test::Rng rng(1);
  for (int s = 0; s < 1000; ++s) {
    const Index n = 2 + s % 7;
    const SymMatrix a = test::random_sym(rng, n);
    const EigenDecomposition eig = sym_eigen(a);
    const Matrix rebuilt = eig.q * eig.lambda.asDiagonal() * eig.q.transpose();
    ASSERT_LE((rebuilt - a.matrix()).norm(), 1e-10 * n * a.norm());
    ASSERT_LE((eig.q.transpose() * eig.q - Matrix::Identity(n, n)).norm(), 1e-12 * n);
    ASSERT_LE((eig.lambda - test::oracle_eigenvalues(a.matrix())).norm(), 1e-12 * n * a.norm());
  }
}

TEST(SymEigen, DegenerateClusterReconstructs)
{
  test::Rng rng(2);
  const Matrix q = test::random_orthogonal(rng, 5);
  Vector l(5);
  l << 2.0, 2.0, 2.0, 1.0, 1.0;
  const SymMatrix a(q * l.asDiagonal() * q.transpose());
  const EigenDecomposition eig = sym_eigen(a);
  EXPECT_LE((eig.compose(eig.lambda).matrix() - a.matrix()).norm(), 1e-13);
}

TEST(SymEigen, ZeroMatrix)
{
  const EigenDecomposition eig = sym_eigen(SymMatrix::zero(3));
  EXPECT_EQ(eig.lambda.cwiseAbs().maxCoeff(), 0.0);
}

TEST(SymApply, Examples)
{
  const SymMatrix r = sym_apply(diag2(1.0, 4.0), [](double l) {return std::sqrt(l);});
  EXPECT_LE(max_abs(r.matrix() - diag2(1.0, 2.0).matrix()), 1e-15);

  const SymMatrix lg = sym_apply(sym2(2.0, 1.0, 2.0), [](double l) {return std::log(l);});
  EXPECT_LE(max_abs(lg.matrix() - 0.5 * kLn3 * Matrix::Ones(2, 2)), 1e-14);

  const SymMatrix ex = sym_apply(SymMatrix::zero(2), [](double l) {return std::exp(l);});
  EXPECT_LE(max_abs(ex.matrix() - Matrix::Identity(2, 2)), 0.0);
}

TEST(SymApply, IdentityFunction)
{
  test::Rng rng(3);
  for (int s = 0; s < 200; ++s) {
    const SymMatrix a = test::random_sym(rng, 2 + s % 7);
    ASSERT_LE(max_abs(sym_apply(a, [](double l) {return l;}).matrix() - a.matrix()), 1e-12);
  }
}

TEST(SymApply, UndefinedValueIsDomainError)
{
  EXPECT_THROW(sym_apply(diag2(1.0, -1.0), [](double l) {return std::log(l);}), DomainError);
  try {
    sym_apply(diag2(1.0, -2.5), [](double l) {return std::sqrt(l);});
    FAIL();
  } catch (const DomainError & e) {
    EXPECT_NE(std::string(e.what()).find("-2.5"), std::string::npos);
  }
}

TEST(SpdMatrix, Validation)
{
  EXPECT_NO_THROW(SpdMatrix(sym2(2.0, 1.0, 2.0)));
  EXPECT_THROW(SpdMatrix(diag2(1.0, 0.0)), DomainError);
  EXPECT_THROW(SpdMatrix(diag2(1.0, -1.0)), DomainError);
  EXPECT_THROW(SpdMatrix(diag2(1.0, 1e-13)), DomainError);
  EXPECT_NO_THROW(SpdMatrix(diag2(1.0, 1e-11)));
  EXPECT_TRUE(is_spd(diag2(2.0, 3.0)));
  EXPECT_FALSE(is_spd(diag2(2.0, -3.0)));
}

TEST(SpdExpLog, Examples)
{
  EXPECT_LE(max_abs(spd_exp(SymMatrix::zero(3)).matrix() - Matrix::Identity(3, 3)), 0.0);
  const SymMatrix l = spd_log(SpdMatrix(diag2(std::exp(1.0), 1.0)));
  EXPECT_LE(max_abs(l.matrix() - diag2(1.0, 0.0).matrix()), 1e-15);

  const double a = 0.7;
  const SpdMatrix e = spd_exp(a * test::offdiag2());
  EXPECT_LE(max_abs(e.matrix() - mat2(std::cosh(a), std::sinh(a), std::sinh(a), std::cosh(a))),
    1e-15);
}

TEST(SpdExpLog, AgreesWithOracleAndRoundTrips)
{
  test::Rng rng(4);
  for (int s = 0; s < 300; ++s) {
    const Index n = 2 + s % 7;
    const SymMatrix a = test::random_sym(rng, n, 2.0);
    const SpdMatrix x = spd_exp(a);
    ASSERT_LE((x.matrix() - test::oracle_expm(a.matrix())).norm(), 1e-12 * x.sym().norm());
    const SymMatrix back = spd_log(x);
    ASSERT_LE((back - a).norm(), 1e-9 * std::max(1.0, a.norm()));

    const SpdMatrix y = test::random_spd(rng, n, 1e4);
    const SymMatrix ly = spd_log(y);
    ASSERT_LE((ly.matrix() - test::oracle_logm(y.matrix())).norm(), 1e-10 * std::max(1.0, ly.norm()));
    ASSERT_LE((spd_exp(ly).matrix() - y.matrix()).norm(), 1e-9 * y.sym().norm());
  }
}

TEST(SpdSqrt, Examples)
{
  const SpdMatrix r = spd_sqrt(SpdMatrix(diag2(4.0, 9.0)));
  EXPECT_LE(max_abs(r.matrix() - diag2(2.0, 3.0).matrix()), 1e-15);
  EXPECT_LE(max_abs(spd_sqrt(SpdMatrix::identity(3)).matrix() - Matrix::Identity(3, 3)), 0.0);

  const EigenDecomposition eig = sym_eigen(spd_sqrt(SpdMatrix(sym2(2.0, 1.0, 2.0))));
  EXPECT_NEAR(eig.lambda(0), std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(eig.lambda(1), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(eig.q(0, 0)), 1.0 / std::sqrt(2.0), 1e-14);
}

TEST(SpdSqrt, RootsAndPowersAgreeWithOracle)
{
  test::Rng rng(5);
  for (int s = 0; s < 100; ++s) {
    const Index n = 2 + s % 6;
    const SpdMatrix x = test::random_spd(rng, n, 1e3);
    const double scale = x.sym().norm();
    const Matrix r = spd_sqrt(x).matrix();
    ASSERT_LE((r - test::oracle_sqrtm(x.matrix())).norm(), 1e-11 * std::sqrt(scale) * n);
    ASSERT_LE((r * r - x.matrix()).norm(), 1e-11 * scale);
    const Matrix ir = spd_inv_sqrt(x).matrix();
    ASSERT_LE((ir * x.matrix() * ir - Matrix::Identity(n, n)).norm(), 1e-9);
    ASSERT_LE((spd_inv(x).matrix() * x.matrix() - Matrix::Identity(n, n)).norm(), 1e-9);
    ASSERT_LE((spd_pow(x, 0.5).matrix() - r).norm(), 1e-12 * std::sqrt(scale) * n);
    const SpdRoots roots = spd_roots(x);
    ASSERT_LE((roots.half - r).norm(), 1e-12 * std::sqrt(scale) * n);
    ASSERT_LE((roots.inv_half - ir).norm(), 1e-12 * ir.norm());
  }
}

TEST(SpdMatrix, FromSpectrumValidates)
{
  Vector v(2);
  v << 1.0, -1.0;
  EXPECT_THROW(SpdMatrix::from_spectrum(Matrix::Identity(2, 2), v), DomainError);
}

TEST(TraceProduct, MatchesTraceOfProduct)
{
  test::Rng rng(6);
  const SymMatrix a = test::random_sym(rng, 4);
  const SymMatrix b = test::random_sym(rng, 4);
  EXPECT_NEAR(trace_product(a, b), (a.matrix() * b.matrix()).trace(), 1e-14);
}

}  // namespace
}  // namespace spdgeom
