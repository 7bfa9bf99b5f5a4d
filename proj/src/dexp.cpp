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

#include "spdgeom/dexp.hpp"

#include "spdgeom/errors.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

namespace spdgeom
{

Matrix ad(const Matrix & x, const Matrix & y)
{
  return x * y - y * x;
}

Matrix ad(const SymMatrix & x, const Matrix & y)
{
  return ad(x.matrix(), y);
}

AdFunctionOperator::AdFunctionOperator(
  const SymMatrix & base, ScalarFunction phi, double value_at_zero)
: AdFunctionOperator(sym_eigen(base), std::move(phi), value_at_zero)
{
}

AdFunctionOperator::AdFunctionOperator(
  EigenDecomposition base_eigen, ScalarFunction phi, double value_at_zero)
: eig_(std::move(base_eigen))
{
  const Index n = eig_.lambda.size();
  // Eigenvalue gaps below this are rounding noise and count as zero.
  const double zero_gap = 64.0 * std::numeric_limits<double>::epsilon() *
    std::max(1.0, eig_.lambda.cwiseAbs().maxCoeff());
  weights_.resize(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const double u = eig_.lambda(i) - eig_.lambda(j);
      const double w = std::abs(u) <= zero_gap ? value_at_zero : phi(u);
      if (!std::isfinite(w)) {
        std::ostringstream os;
        os.precision(17);
        os << "ad-function undefined at eigenvalue difference " << u;
        throw DomainError(os.str());
      }
      weights_(i, j) = w;
    }
  }
}

Matrix AdFunctionOperator::apply_general(const Matrix & y) const
{
  const Matrix & q = eig_.q;
  const Matrix in_basis = q.transpose() * y * q;
  return q * weights_.cwiseProduct(in_basis) * q.transpose();
}

SymMatrix AdFunctionOperator::apply(const SymMatrix & y) const
{
  const Matrix r = apply_general(y.matrix());
  const double asym = (r - r.transpose()).norm();
  if (asym > 1e-12 * std::max(1.0, r.norm())) {
    std::ostringstream os;
    os << "ad-function image of a symmetric matrix is not symmetric (asymmetry " << asym
       << "); the scalar function is not even";
    throw DomainError(os.str());
  }
  return SymMatrix(r);
}

SymMatrix ad_function_apply(const AdFunctionOperator & op, const SymMatrix & y)
{
  return op.apply(y);
}

namespace
{

// sinh(u/2) / (u/2)
double sinhc_half(double u)
{
  return std::sinh(0.5 * u) / (0.5 * u);
}

// (u/2) / sinh(u/2)
double inv_sinhc_half(double u)
{
  return (0.5 * u) / std::sinh(0.5 * u);
}

// (1 - e^{-u}) / u
double left_dexp_weight(double u)
{
  return -std::expm1(-u) / u;
}

// u coth(u/2)
double flow_weight(double u)
{
  return u / std::tanh(0.5 * u);
}

Matrix half_exp(const EigenDecomposition & eig, double sign)
{
  return eig.compose((0.5 * sign * eig.lambda).array().exp().matrix()).matrix();
}

}  // namespace

SymMatrix tau(const SymMatrix & x, const SymMatrix & y)
{
  return AdFunctionOperator(x, sinhc_half, 1.0).apply(y);
}

SymMatrix tau_inv(const SymMatrix & x, const SymMatrix & y)
{
  return AdFunctionOperator(x, inv_sinhc_half, 1.0).apply(y);
}

SymMatrix dexp_apply(const SymMatrix & x, const SymMatrix & y)
{
  const AdFunctionOperator op(sym_eigen(x), sinhc_half, 1.0);
  const Matrix e = half_exp(op.eigen(), 1.0);
  return SymMatrix(e * op.apply(y).matrix() * e);
}

Matrix dexp_apply_left(const SymMatrix & x, const SymMatrix & y)
{
  const AdFunctionOperator op(sym_eigen(x), left_dexp_weight, 1.0);
  const Matrix ex = op.eigen().compose(op.eigen().lambda.array().exp().matrix()).matrix();
  return ex * op.apply_general(y.matrix());
}

SymMatrix dexp_inv_apply(const SymMatrix & x, const SymMatrix & z)
{
  const AdFunctionOperator op(sym_eigen(x), inv_sinhc_half, 1.0);
  const Matrix e = half_exp(op.eigen(), -1.0);
  return op.apply(SymMatrix(e * z.matrix() * e));
}

SymMatrix conjugation_flow_field(const SymMatrix & x, const SymMatrix & y)
{
  return AdFunctionOperator(x, flow_weight, 2.0).apply(y);
}

SymMatrix integrate_conjugation_flow(
  const SymMatrix & x0, const SymMatrix & y, double t, int steps)
{
  if (steps < 1) {
    throw PreconditionError("conjugation flow needs at least one step");
  }
  const double h = t / steps;
  SymMatrix x = x0;
  for (int k = 0; k < steps; ++k) {
    const SymMatrix k1 = conjugation_flow_field(x, y);
    const SymMatrix k2 = conjugation_flow_field(x + (0.5 * h) * k1, y);
    const SymMatrix k3 = conjugation_flow_field(x + (0.5 * h) * k2, y);
    const SymMatrix k4 = conjugation_flow_field(x + h * k3, y);
    x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return x;
}

}  // namespace spdgeom
