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

#ifndef SPDGEOM__MATFUN_HPP_
#define SPDGEOM__MATFUN_HPP_

#include <Eigen/Core>

#include <functional>

namespace spdgeom
{

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Relative eigenvalue floor for SPD validation: lambda_min > kSpdTol * max(1, lambda_max).
inline constexpr double kSpdTol = 1e-12;
/// Cyclic Jacobi stops once the off-diagonal Frobenius norm is below kJacobiTol * |A|_F.
inline constexpr double kJacobiTol = 1e-14;
inline constexpr int kJacobiMaxSweeps = 50;

/// Dense real symmetric matrix. The constructor symmetrizes its argument as
/// (A + A^T) / 2, so exactly symmetric inputs are stored unchanged.
class SymMatrix
{
public:
  explicit SymMatrix(const Matrix & m);

  static SymMatrix zero(Index n);
  static SymMatrix identity(Index n);
  static SymMatrix diagonal(const Vector & d);

  Index dim() const {return m_.rows();}
  const Matrix & matrix() const {return m_;}
  double operator()(Index i, Index j) const {return m_(i, j);}

  /// Frobenius norm.
  double norm() const {return m_.norm();}

  SymMatrix & operator+=(const SymMatrix & o);
  SymMatrix & operator-=(const SymMatrix & o);
  SymMatrix & operator*=(double s);

  friend SymMatrix operator+(SymMatrix a, const SymMatrix & b) {return a += b;}
  friend SymMatrix operator-(SymMatrix a, const SymMatrix & b) {return a -= b;}
  friend SymMatrix operator*(SymMatrix a, double s) {return a *= s;}
  friend SymMatrix operator*(double s, SymMatrix a) {return a *= s;}
  friend SymMatrix operator-(SymMatrix a) {return a *= -1.0;}

private:
  Matrix m_;
};

/// Frobenius (trace) inner product Tr(A B) of two symmetric matrices.
double trace_product(const SymMatrix & a, const SymMatrix & b);

/// Orthonormal eigenbasis (columns of q) and eigenvalues in descending order.
struct EigenDecomposition
{
  Matrix q;
  Vector lambda;

  /// q * diag(values) * q^T.
  SymMatrix compose(const Vector & values) const;
};

/// Cyclic Jacobi eigensolver. Throws NumericalFailure when the off-diagonal
/// mass has not dropped below tolerance after kJacobiMaxSweeps sweeps.
EigenDecomposition sym_eigen(const SymMatrix & a);

using ScalarFunction = std::function<double (double)>;

/// Spectral calculus q * diag(phi(lambda_i)) * q^T. Throws DomainError if phi
/// is not finite at some eigenvalue.
SymMatrix sym_apply(const SymMatrix & a, const ScalarFunction & phi);
SymMatrix sym_apply(const EigenDecomposition & eig, const ScalarFunction & phi);

/// A validated symmetric positive-definite matrix.
class SpdMatrix
{
public:
  /// Throws DomainError unless every eigenvalue exceeds kSpdTol * max(1, lambda_max).
  explicit SpdMatrix(SymMatrix s);
  explicit SpdMatrix(const Matrix & m) : SpdMatrix(SymMatrix(m)) {}

  static SpdMatrix identity(Index n);
  /// Builds q * diag(values) * q^T after validating the supplied spectrum.
  static SpdMatrix from_spectrum(const Matrix & q, const Vector & values);

  Index dim() const {return s_.dim();}
  double operator()(Index i, Index j) const {return s_(i, j);}
  const SymMatrix & sym() const {return s_;}
  const Matrix & matrix() const {return s_.matrix();}
  operator const SymMatrix &() const {return s_;}  // NOLINT(google-explicit-constructor)

private:
  struct Trusted {};
  SpdMatrix(SymMatrix s, Trusted) : s_(std::move(s)) {}

  SymMatrix s_;
};

/// True when the spectrum passes the SPD threshold.
bool is_spd(const SymMatrix & a, double tol = kSpdTol);

SpdMatrix spd_exp(const SymMatrix & a);
SymMatrix spd_log(const SpdMatrix & x);
SpdMatrix spd_sqrt(const SpdMatrix & x);
SpdMatrix spd_inv_sqrt(const SpdMatrix & x);
SpdMatrix spd_inv(const SpdMatrix & x);
/// x^t for real t.
SpdMatrix spd_pow(const SpdMatrix & x, double t);

/// x^{1/2} and x^{-1/2} from a single eigendecomposition.
struct SpdRoots
{
  Matrix half;
  Matrix inv_half;
};
SpdRoots spd_roots(const SpdMatrix & x);

/// a * s * a^T for a general square a, symmetrized.
SymMatrix congruence(const Matrix & a, const SymMatrix & s);

}  // namespace spdgeom

#endif  // SPDGEOM__MATFUN_HPP_
