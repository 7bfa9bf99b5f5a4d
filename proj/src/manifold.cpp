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

#include "spdgeom/manifold.hpp"

#include "spdgeom/dexp.hpp"
#include "spdgeom/errors.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace spdgeom
{

namespace
{

constexpr double kCoincident = 1e-12;

}  // namespace

double metric(const SpdMatrix & x, const SymMatrix & u, const SymMatrix & v)
{
  const SpdRoots w = spd_roots(x);
  return trace_product(congruence(w.inv_half, u), congruence(w.inv_half, v));
}

SpdMatrix geodesic(const GeodesicSegment & seg, double t)
{
  const SpdRoots w = spd_roots(seg.x);
  const EigenDecomposition rel = sym_eigen(congruence(w.inv_half, seg.y));
  const SymMatrix moved = sym_apply(rel, [t](double l) {return std::pow(l, t);});
  return SpdMatrix(congruence(w.half, moved));
}

TangentVector riem_log(const SpdMatrix & x, const SpdMatrix & y)
{
  const SpdRoots w = spd_roots(x);
  const SymMatrix rel_log =
    sym_apply(congruence(w.inv_half, y), [](double l) {return std::log(l);});
  return {x, congruence(w.half, rel_log)};
}

SpdMatrix riem_exp(const SpdMatrix & x, const TangentVector & v)
{
  if ((v.base.matrix() - x.matrix()).norm() > 1e-12 * std::max(1.0, x.sym().norm())) {
    throw PreconditionError("tangent vector is not based at the given point");
  }
  const SpdRoots w = spd_roots(x);
  const SpdMatrix moved = spd_exp(congruence(w.inv_half, v.vec));
  return SpdMatrix(congruence(w.half, moved));
}

double distance(const SpdMatrix & x, const SpdMatrix & y)
{
  const SpdRoots w = spd_roots(x);
  const Vector lambda = sym_eigen(congruence(w.inv_half, y)).lambda;
  double s = 0.0;
  for (Index i = 0; i < lambda.size(); ++i) {
    if (!(lambda(i) > 0.0)) {
      throw DomainError("relative matrix lost positive-definiteness in distance");
    }
    const double l = std::log(lambda(i));
    s += l * l;
  }
  return std::sqrt(s);
}

SpdMatrix congruence_action(const Matrix & g, const SpdMatrix & x)
{
  if (g.rows() != x.dim() || g.cols() != x.dim()) {
    throw DomainError("congruence action: dimension mismatch");
  }
  const double det = g.determinant();
  if (!(std::abs(det) > 1e-12)) {
    std::ostringstream os;
    os << "congruence action needs an invertible matrix, |det g| = " << std::abs(det);
    throw IllConditionedError(os.str());
  }
  return SpdMatrix(congruence(g, x));
}

SpdMatrix geodesic_symmetry(const SpdMatrix & x, const SpdMatrix & y)
{
  return SpdMatrix(congruence(x.matrix(), spd_inv(y)));
}

double riemannian_angle(const SpdMatrix & vertex, const SpdMatrix & p, const SpdMatrix & q)
{
  if (distance(vertex, p) <= kCoincident || distance(vertex, q) <= kCoincident) {
    throw DomainError("angle undefined: an endpoint coincides with the vertex");
  }
  const SymMatrix u = riem_log(vertex, p).vec;
  const SymMatrix v = riem_log(vertex, q).vec;
  const double uv = metric(vertex, u, v);
  const double uu = metric(vertex, u, u);
  const double vv = metric(vertex, v, v);
  const double c = std::clamp(uv / std::sqrt(uu * vv), -1.0, 1.0);
  return std::acos(c);
}

double al_kashi_slack(const SpdMatrix & a, const SpdMatrix & b, const SpdMatrix & c)
{
  const double side_a = distance(b, c);
  const double side_b = distance(a, c);
  const double side_c = distance(a, b);
  if (side_a <= kCoincident || side_b <= kCoincident || side_c <= kCoincident) {
    throw DomainError("degenerate triangle: two vertices coincide");
  }
  const double angle_c = riemannian_angle(c, a, b);
  return side_c * side_c - side_a * side_a - side_b * side_b +
         2.0 * side_a * side_b * std::cos(angle_c);
}

SymMatrix curvature_tensor_id(const SymMatrix & x, const SymMatrix & y, const SymMatrix & z)
{
  const Matrix r = ad(ad(x, y.matrix()), z.matrix());
  const double scale = std::max(1.0, x.norm() * y.norm() * z.norm());
  if ((r - r.transpose()).norm() > 1e-10 * scale) {
    throw Error("curvature tensor of symmetric arguments came out asymmetric");
  }
  return SymMatrix(r);
}

double sectional_curvature_id(const SymMatrix & x, const SymMatrix & y)
{
  const double xx = trace_product(x, x);
  const double yy = trace_product(y, y);
  const double xy = trace_product(x, y);
  const double gram = xx * yy - xy * xy;
  if (!(gram > 1e-12 * xx * yy)) {
    throw DomainError("sectional curvature undefined: X and Y are linearly dependent");
  }
  const SymMatrix r = curvature_tensor_id(x, y, x);
  return trace_product(r, y) / gram;
}

}  // namespace spdgeom
