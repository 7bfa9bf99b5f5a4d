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

#ifndef SPDGEOM__MANIFOLD_HPP_
#define SPDGEOM__MANIFOLD_HPP_

#include "spdgeom/matfun.hpp"

namespace spdgeom
{

/// A tangent vector at `base`, represented by its ambient symmetric matrix.
struct TangentVector
{
  SpdMatrix base;
  SymMatrix vec;
};

/// Geodesic t -> x^{1/2} exp(t log(x^{-1/2} y x^{-1/2})) x^{1/2}; t = 0 at x, t = 1 at y.
struct GeodesicSegment
{
  SpdMatrix x;
  SpdMatrix y;
};

/// Affine-invariant metric <u, v>_x = Tr(x^{-1} u x^{-1} v).
double metric(const SpdMatrix & x, const SymMatrix & u, const SymMatrix & v);

/// Point at parameter t on the geodesic; any real t is allowed.
SpdMatrix geodesic(const GeodesicSegment & seg, double t);

/// Initial velocity x^{1/2} log(x^{-1/2} y x^{-1/2}) x^{1/2} of the geodesic from x to y.
TangentVector riem_log(const SpdMatrix & x, const SpdMatrix & y);

/// x^{1/2} exp(x^{-1/2} V x^{-1/2}) x^{1/2}. Throws PreconditionError if v is
/// not based at x.
SpdMatrix riem_exp(const SpdMatrix & x, const TangentVector & v);

/// Riemannian distance |log(x^{-1/2} y x^{-1/2})|_F.
double distance(const SpdMatrix & x, const SpdMatrix & y);

/// g x g^T. Throws IllConditionedError when |det g| <= 1e-12.
SpdMatrix congruence_action(const Matrix & g, const SpdMatrix & x);

/// Geodesic symmetry s_x(y) = x y^{-1} x.
SpdMatrix geodesic_symmetry(const SpdMatrix & x, const SpdMatrix & y);

/// Angle in [0, pi] at `vertex` between the geodesics to p and to q.
/// Throws DomainError if p or q coincides with the vertex.
double riemannian_angle(const SpdMatrix & vertex, const SpdMatrix & p, const SpdMatrix & q);

/// c^2 - a^2 - b^2 + 2ab cos(angle ACB) for the geodesic triangle ABC, with
/// a, b, c the side lengths opposite A, B, C. Non-negative in SPD(n).
double al_kashi_slack(const SpdMatrix & a, const SpdMatrix & b, const SpdMatrix & c);

/// Curvature tensor at the identity, R_{X,Y} Z = [[X, Y], Z].
SymMatrix curvature_tensor_id(const SymMatrix & x, const SymMatrix & y, const SymMatrix & z);

/// Sectional curvature of the plane spanned by X, Y at the identity.
/// Throws DomainError if X and Y are numerically dependent.
double sectional_curvature_id(const SymMatrix & x, const SymMatrix & y);

}  // namespace spdgeom

#endif  // SPDGEOM__MANIFOLD_HPP_
