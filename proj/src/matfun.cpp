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

#include "spdgeom/matfun.hpp"

#include "spdgeom/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

namespace spdgeom
{

SymMatrix::SymMatrix(const Matrix & m)
{
  if (m.rows() != m.cols() || m.rows() < 1) {
    std::ostringstream os;
    os << "symmetric matrix must be square with n >= 1, got " << m.rows() << "x" << m.cols();
    throw DomainError(os.str());
  }
  m_ = 0.5 * (m + m.transpose());
}

SymMatrix SymMatrix::zero(Index n)
{
  return SymMatrix(Matrix::Zero(n, n));
}

SymMatrix SymMatrix::identity(Index n)
{
  return SymMatrix(Matrix::Identity(n, n));
}

SymMatrix SymMatrix::diagonal(const Vector & d)
{
  return SymMatrix(Matrix(d.asDiagonal()));
}

SymMatrix & SymMatrix::operator+=(const SymMatrix & o)
{
  m_ += o.m_;
  return *this;
}

SymMatrix & SymMatrix::operator-=(const SymMatrix & o)
{
  m_ -= o.m_;
  return *this;
}

SymMatrix & SymMatrix::operator*=(double s)
{
  m_ *= s;
  return *this;
}

double trace_product(const SymMatrix & a, const SymMatrix & b)
{
  // Tr(AB) = sum_ij A_ij B_ji = sum_ij A_ij B_ij for symmetric B.
  return a.matrix().cwiseProduct(b.matrix()).sum();
}

SymMatrix EigenDecomposition::compose(const Vector & values) const
{
  return SymMatrix(q * values.asDiagonal() * q.transpose());
}

namespace
{

double off_diagonal_norm(const Matrix & m)
{
  double s = 0.0;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (i != j) {
        s += m(i, j) * m(i, j);
      }
    }
  }
  return std::sqrt(s);
}

// One Jacobi rotation annihilating m(p, q); accumulates the rotation into v.
void rotate(Matrix & m, Matrix & v, Index p, Index q)
{
  const double apq = m(p, q);
  const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(1.0, theta));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Index n = m.rows();

  for (Index k = 0; k < n; ++k) {
    const double mkp = m(k, p);
    const double mkq = m(k, q);
    m(k, p) = c * mkp - s * mkq;
    m(k, q) = s * mkp + c * mkq;
  }
  for (Index k = 0; k < n; ++k) {
    const double mpk = m(p, k);
    const double mqk = m(q, k);
    m(p, k) = c * mpk - s * mqk;
    m(q, k) = s * mpk + c * mqk;
  }
  m(p, q) = 0.0;
  m(q, p) = 0.0;

  for (Index k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

EigenDecomposition sym_eigen(const SymMatrix & a)
{
  const Index n = a.dim();
  Matrix m = a.matrix();
  Matrix v = Matrix::Identity(n, n);
  const double scale = m.norm();

  if (scale > 0.0) {
    int sweeps = 0;
    double off = off_diagonal_norm(m);
    while (off > kJacobiTol * scale) {
      if (sweeps == kJacobiMaxSweeps) {
        std::ostringstream os;
        os << "Jacobi eigensolver did not converge after " << kJacobiMaxSweeps
           << " sweeps (off-diagonal residual " << off << ")";
        throw NumericalFailure(os.str(), off, sweeps);
      }
      for (Index p = 0; p + 1 < n; ++p) {
        for (Index q = p + 1; q < n; ++q) {
          if (m(p, q) != 0.0) {
            rotate(m, v, p, q);
          }
        }
      }
      ++sweeps;
      off = off_diagonal_norm(m);
    }
  }

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(
    order.begin(), order.end(), [&m](Index i, Index j) {return m(i, i) > m(j, j);});

  EigenDecomposition out{Matrix(n, n), Vector(n)};
  for (Index k = 0; k < n; ++k) {
    const Index src = order[static_cast<std::size_t>(k)];
    out.lambda(k) = m(src, src);
    out.q.col(k) = v.col(src);
    // Fix the column sign: the entry of largest magnitude is positive.
    Index arg = 0;
    out.q.col(k).cwiseAbs().maxCoeff(&arg);
    if (out.q(arg, k) < 0.0) {
      out.q.col(k) *= -1.0;
    }
  }
  return out;
}

SymMatrix sym_apply(const EigenDecomposition & eig, const ScalarFunction & phi)
{
  Vector values(eig.lambda.size());
  for (Index i = 0; i < eig.lambda.size(); ++i) {
    values(i) = phi(eig.lambda(i));
    if (!std::isfinite(values(i))) {
      std::ostringstream os;
      os.precision(17);
      os << "matrix function undefined at eigenvalue " << eig.lambda(i);
      throw DomainError(os.str());
    }
  }
  return eig.compose(values);
}

SymMatrix sym_apply(const SymMatrix & a, const ScalarFunction & phi)
{
  return sym_apply(sym_eigen(a), phi);
}

namespace
{

void validate_spectrum(const Vector & values, double tol)
{
  const double lmax = values.maxCoeff();
  const double lmin = values.minCoeff();
  if (!(lmin > tol * std::max(1.0, lmax))) {
    std::ostringstream os;
    os.precision(17);
    os << "matrix is not symmetric positive-definite: smallest eigenvalue " << lmin
       << " (largest " << lmax << ")";
    throw DomainError(os.str());
  }
}

}  // namespace

SpdMatrix::SpdMatrix(SymMatrix s)
: s_(std::move(s))
{
  validate_spectrum(sym_eigen(s_).lambda, kSpdTol);
}

SpdMatrix SpdMatrix::identity(Index n)
{
  return SpdMatrix(SymMatrix::identity(n), Trusted{});
}

SpdMatrix SpdMatrix::from_spectrum(const Matrix & q, const Vector & values)
{
  validate_spectrum(values, kSpdTol);
  return SpdMatrix(SymMatrix(q * values.asDiagonal() * q.transpose()), Trusted{});
}

bool is_spd(const SymMatrix & a, double tol)
{
  const Vector lambda = sym_eigen(a).lambda;
  return lambda.minCoeff() > tol * std::max(1.0, lambda.maxCoeff());
}

namespace
{

SpdMatrix spectral_spd(const EigenDecomposition & eig, double (*phi)(double))
{
  return SpdMatrix::from_spectrum(eig.q, eig.lambda.unaryExpr(phi));
}

}  // namespace

SpdMatrix spd_exp(const SymMatrix & a)
{
  return spectral_spd(sym_eigen(a), [](double l) {return std::exp(l);});
}

SymMatrix spd_log(const SpdMatrix & x)
{
  return sym_apply(x.sym(), [](double l) {return std::log(l);});
}

SpdMatrix spd_sqrt(const SpdMatrix & x)
{
  return spectral_spd(sym_eigen(x), [](double l) {return std::sqrt(l);});
}

SpdMatrix spd_inv_sqrt(const SpdMatrix & x)
{
  return spectral_spd(sym_eigen(x), [](double l) {return 1.0 / std::sqrt(l);});
}

SpdMatrix spd_inv(const SpdMatrix & x)
{
  return spectral_spd(sym_eigen(x), [](double l) {return 1.0 / l;});
}

SpdMatrix spd_pow(const SpdMatrix & x, double t)
{
  const EigenDecomposition eig = sym_eigen(x);
  return SpdMatrix::from_spectrum(eig.q, eig.lambda.unaryExpr([t](double l) {return std::pow(l, t);}));
}

SpdRoots spd_roots(const SpdMatrix & x)
{
  const EigenDecomposition eig = sym_eigen(x);
  const Vector s = eig.lambda.array().sqrt();
  return {eig.compose(s).matrix(), eig.compose(s.cwiseInverse()).matrix()};
}

SymMatrix congruence(const Matrix & a, const SymMatrix & s)
{
  return SymMatrix(a * s.matrix() * a.transpose());
}

}  // namespace spdgeom
