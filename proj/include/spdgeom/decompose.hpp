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

#ifndef SPDGEOM__DECOMPOSE_HPP_
#define SPDGEOM__DECOMPOSE_HPP_

#include "spdgeom/matfun.hpp"
#include "spdgeom/subspace.hpp"

#include <optional>

namespace spdgeom
{

enum class ProjectionMethod
{
  /// Gradient step preconditioned by the Riemannian Hessian restricted to E.
  kNewton,
  /// Plain Riemannian gradient step.
  kGradient,
};

struct ProjectionOptions
{
  /// Stop once |P_E log(y^{-1/2} x y^{-1/2})|_F <= tol.
  double tol = 1e-11;
  int max_iter = 500;
  /// Initial step length of each iteration; halved while the distance grows.
  double step = 1.0;
  /// Skip the Lie-triple-system precondition. Results are then only
  /// stationary points and carry unique = false unless E passes the check.
  bool unchecked = false;
  /// Starting point in exp(E); defaults to exp(P_E log x).
  std::optional<SpdMatrix> init;
  ProjectionMethod method = ProjectionMethod::kNewton;
};

struct ProjectionResult
{
  SpdMatrix pi;
  int iterations;
  double residual;
  /// E passed the Lie-triple-system check, so pi is the unique closest point.
  bool unique;
};

/// Closest point of exp(E) to x for the affine-invariant distance.
///
/// Iterates on exp(E). The tangent space of exp(E) at y is y^{1/2} E y^{1/2};
/// in whitened coordinates, with L = log(y^{-1/2} x y^{-1/2}), the gradient of
/// y -> dist(x, y)^2 / 2 is -P_E(L) and its Hessian is P_E W_L P_E with
/// W_L = ad(L/2) coth(ad(L/2)) (eigenvalues >= 1). Each iteration moves
///
///   y <- y^{1/2} exp(s u) y^{1/2},
///
/// where u = P_E(L) for kGradient and u solves P_E W_L(u) = P_E(L) in E for
/// kNewton. s starts at opts.step and is halved while the distance to x
/// increases; when the change in distance is below rounding level the step
/// is accepted if it lowers the residual |P_E(L)|_F, which vanishes exactly
/// at the projection.
///
/// Throws PreconditionError for a non-LTS subspace unless opts.unchecked is
/// set, and NumericalFailure when max_iter is exhausted.
ProjectionResult geodesic_project(
  const SpdMatrix & x, const Subspace & e, const ProjectionOptions & opts = {});

/// x = e f e with e = pi(x)^{1/2} in exp(E) and f in exp(E^perp).
struct MostowFactors
{
  SpdMatrix e;
  SpdMatrix f;
  SpdMatrix pi;
  int iterations;
  /// |P_E log f|_F.
  double residual;
  bool unique;
};

MostowFactors mostow_spd(
  const SpdMatrix & x, const Subspace & e, const ProjectionOptions & opts = {});

/// g = k f e with k orthogonal, f in exp(E^perp), e in exp(E).
struct GlFactors
{
  Matrix k;
  SpdMatrix f;
  SpdMatrix e;
  int iterations;
  double residual;
  bool unique;
};

/// Throws IllConditionedError when the smallest singular value of g is at
/// most 1e-10 times the largest.
GlFactors mostow_gl(const Matrix & g, const Subspace & e, const ProjectionOptions & opts = {});

/// The geodesically convex submanifold x^{1/2} exp(E) x^{1/2}.
class TranslatedSubmanifold
{
public:
  TranslatedSubmanifold(const SpdMatrix & x, Subspace e);

  const SpdMatrix & anchor() const {return x_;}
  const Subspace & subspace() const {return e_;}

  /// |(I - P_E) log(x^{-1/2} y x^{-1/2})|_F; zero exactly on the submanifold.
  double membership_residual(const SpdMatrix & y) const;
  /// x^{1/2} exp(u) x^{1/2}; u is projected onto E first.
  SpdMatrix point(const SymMatrix & u) const;

private:
  SpdMatrix x_;
  Subspace e_;
  SpdRoots roots_;
};

TranslatedSubmanifold translate_convex_submanifold(const SpdMatrix & x, const Subspace & e);

}  // namespace spdgeom

#endif  // SPDGEOM__DECOMPOSE_HPP_
