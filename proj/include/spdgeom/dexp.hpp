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

#ifndef SPDGEOM__DEXP_HPP_
#define SPDGEOM__DEXP_HPP_

#include "spdgeom/matfun.hpp"

namespace spdgeom
{

/// Commutator [x, y] = x y - y x.
Matrix ad(const Matrix & x, const Matrix & y);
Matrix ad(const SymMatrix & x, const Matrix & y);

/// phi(ad(X)) for a symmetric X, evaluated in the eigenbasis of X: the
/// eigenvectors of ad(X) are e_i e_j^T with eigenvalues lambda_i - lambda_j, so
/// phi(ad X) scales the (i, j) entry of Q^T Y Q by phi(lambda_i - lambda_j).
///
/// phi is only called at nonzero differences; differences below rounding level
/// use value_at_zero, which must be the continuous extension of phi at 0.
class AdFunctionOperator
{
public:
  AdFunctionOperator(const SymMatrix & base, ScalarFunction phi, double value_at_zero);
  AdFunctionOperator(EigenDecomposition base_eigen, ScalarFunction phi, double value_at_zero);

  /// Image of a symmetric argument. Throws DomainError if the image is not
  /// symmetric (phi not even on the occurring differences) or if phi is not
  /// finite at some difference.
  SymMatrix apply(const SymMatrix & y) const;
  /// Image of an arbitrary square matrix; no symmetry requirement.
  Matrix apply_general(const Matrix & y) const;

  const EigenDecomposition & eigen() const {return eig_;}

private:
  EigenDecomposition eig_;
  Matrix weights_;
};

SymMatrix ad_function_apply(const AdFunctionOperator & op, const SymMatrix & y);

/// tau_X = sinh(ad(X/2)) / ad(X/2). Every eigenvalue is >= 1.
SymMatrix tau(const SymMatrix & x, const SymMatrix & y);
/// tau_X^{-1} = ad(X/2) / sinh(ad(X/2)).
SymMatrix tau_inv(const SymMatrix & x, const SymMatrix & y);

/// d_X exp(Y) = exp(X/2) tau_X(Y) exp(X/2).
SymMatrix dexp_apply(const SymMatrix & x, const SymMatrix & y);
/// d_X exp(Y) = exp(X) ((1 - e^{-ad X}) / ad X)(Y), the left-translated form.
/// Returned unsymmetrized so callers can inspect it.
Matrix dexp_apply_left(const SymMatrix & x, const SymMatrix & y);
/// (d_X exp)^{-1}(Z) = tau_X^{-1}(exp(-X/2) Z exp(-X/2)).
SymMatrix dexp_inv_apply(const SymMatrix & x, const SymMatrix & z);

/// W(X) = ad(X) coth(ad(X/2)) (Y), the velocity of t -> log(exp(tY) f exp(tY)).
SymMatrix conjugation_flow_field(const SymMatrix & x, const SymMatrix & y);

inline constexpr int kDefaultFlowSteps = 100;

/// Classical fourth-order Runge-Kutta integration of dX/dt = W(X) from X(0) = x0
/// over [0, t] with a fixed number of steps.
SymMatrix integrate_conjugation_flow(
  const SymMatrix & x0, const SymMatrix & y, double t,
  int steps = kDefaultFlowSteps);

}  // namespace spdgeom

#endif  // SPDGEOM__DEXP_HPP_
