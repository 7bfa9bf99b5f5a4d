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

#include "spdgeom/decompose.hpp"

#include "spdgeom/dexp.hpp"
#include "spdgeom/errors.hpp"

#include <Eigen/Cholesky>

#include <cmath>
#include <sstream>
#include <utility>

namespace spdgeom
{

namespace
{

// Line search gives up below this step length.
constexpr double kMinStep = 1e-10;

struct Iterate
{
  SpdMatrix y;
  SpdRoots roots;
  EigenDecomposition rel_log;  // eigendecomposition of L = log(y^{-1/2} x y^{-1/2})
  SymMatrix gradient;  // P_E(L)
  double dist;
};

Iterate evaluate(const SpdMatrix & x, const Subspace & e, SpdMatrix y)
{
  SpdRoots roots = spd_roots(y);
  const EigenDecomposition rel = sym_eigen(congruence(roots.inv_half, x));
  if (!(rel.lambda.minCoeff() > 0.0)) {
    throw DomainError("relative matrix lost positive-definiteness during projection");
  }
  EigenDecomposition rel_log{rel.q, rel.lambda.array().log()};
  SymMatrix gradient = project_trace(e, rel_log.compose(rel_log.lambda));
  const double dist = rel_log.lambda.norm();
  return {std::move(y), std::move(roots), std::move(rel_log), std::move(gradient), dist};
}

// Solves P_E W_L(u) = P_E(L) for u in E, W_L = ad(L/2) coth(ad(L/2)).
SymMatrix newton_direction(const Subspace & e, const Iterate & cur)
{
  const AdFunctionOperator hessian(
    cur.rel_log, [](double d) {return 0.5 * d / std::tanh(0.5 * d);}, 1.0);
  const auto & basis = e.basis();
  const Index k = static_cast<Index>(basis.size());
  Eigen::MatrixXd h(k, k);
  Eigen::VectorXd rhs(k);
  for (Index c = 0; c < k; ++c) {
    const SymMatrix image = hessian.apply(basis[static_cast<std::size_t>(c)]);
    for (Index a = 0; a < k; ++a) {
      h(a, c) = trace_product(basis[static_cast<std::size_t>(a)], image);
    }
    rhs(c) = trace_product(basis[static_cast<std::size_t>(c)], cur.gradient);
  }
  const Eigen::MatrixXd hs = 0.5 * (h + h.transpose());
  const Eigen::VectorXd coef = hs.ldlt().solve(rhs);
  Matrix u = Matrix::Zero(e.ambient_dim(), e.ambient_dim());
  for (Index a = 0; a < k; ++a) {
    u += coef(a) * basis[static_cast<std::size_t>(a)].matrix();
  }
  return SymMatrix(u);
}

// exp(P_E log m): pulls a point back onto exp(E).
SpdMatrix retract(const Subspace & e, const SymMatrix & m)
{
  const EigenDecomposition eig = sym_eigen(m);
  if (!(eig.lambda.minCoeff() > 0.0)) {
    throw DomainError("projection iterate lost positive-definiteness");
  }
  return spd_exp(project_trace(e, eig.compose(eig.lambda.array().log())));
}

void check_options(const ProjectionOptions & opts)
{
  if (!(opts.tol > 0.0) || opts.max_iter < 0 || !(opts.step > 0.0)) {
    throw PreconditionError("projection options need tol > 0, max_iter >= 0 and step > 0");
  }
}

bool check_subspace(const SpdMatrix & x, const Subspace & e, const ProjectionOptions & opts)
{
  if (e.ambient_dim() != x.dim()) {
    throw DomainError("subspace and matrix dimensions differ");
  }
  const LtsReport lts = lts_check(e);
  if (!lts.is_lts && !opts.unchecked) {
    std::ostringstream os;
    os << "subspace is not a Lie triple system (residual " << lts.max_triple_residual
       << "); the projection is only defined for Lie triple systems";
    throw PreconditionError(os.str());
  }
  return lts.is_lts;
}

}  // namespace

ProjectionResult geodesic_project(
  const SpdMatrix & x, const Subspace & e, const ProjectionOptions & opts)
{
  check_options(opts);
  const bool unique = check_subspace(x, e, opts);

  SpdMatrix start = SpdMatrix::identity(x.dim());
  if (opts.init) {
    if (opts.init->dim() != x.dim()) {
      throw DomainError("initial point has the wrong dimension");
    }
    const SymMatrix log_init = spd_log(*opts.init);
    if (project_out(e, log_init).norm() > 1e-8 * std::max(1.0, log_init.norm())) {
      throw PreconditionError("initial point of the projection is not in exp(E)");
    }
    start = *opts.init;
  } else {
    start = spd_exp(project_trace(e, spd_log(x)));
  }

  Iterate cur = evaluate(x, e, std::move(start));
  for (int it = 0;; ++it) {
    const double residual = cur.gradient.norm();
    if (residual <= opts.tol) {
      return {std::move(cur.y), it, residual, unique};
    }
    if (it == opts.max_iter) {
      std::ostringstream os;
      os << "geodesic projection did not converge in " << opts.max_iter
         << " iterations (residual " << residual << ")";
      throw NumericalFailure(os.str(), residual, it);
    }

    const SymMatrix direction = opts.method == ProjectionMethod::kNewton ?
      newton_direction(e, cur) : cur.gradient;
    // Changes in distance below this are rounding noise.
    const double noise = 1e-12 * std::max(1.0, cur.dist);
    double s = opts.step;
    for (;;) {
      const SpdMatrix stepped = spd_exp(s * direction);
      Iterate next = evaluate(x, e, retract(e, congruence(cur.roots.half, stepped)));
      const bool decrease = next.dist < cur.dist - noise;
      const bool flat = next.dist <= cur.dist + noise && next.gradient.norm() < residual;
      if (decrease || flat) {
        cur = std::move(next);
        break;
      }
      s *= 0.5;
      if (s < kMinStep) {
        std::ostringstream os;
        os << "geodesic projection line search failed after " << it
           << " iterations (residual " << residual << ")";
        throw NumericalFailure(os.str(), residual, it);
      }
    }
  }
}

MostowFactors mostow_spd(const SpdMatrix & x, const Subspace & e, const ProjectionOptions & opts)
{
  ProjectionResult proj = geodesic_project(x, e, opts);
  const EigenDecomposition eig = sym_eigen(proj.pi);
  const Vector root = eig.lambda.array().sqrt();
  SpdMatrix e_factor = SpdMatrix::from_spectrum(eig.q, root);
  const Matrix e_inv = eig.compose(root.cwiseInverse()).matrix();
  SpdMatrix f = SpdMatrix(congruence(e_inv, x));
  const double residual = project_trace(e, spd_log(f)).norm();
  return {std::move(e_factor), std::move(f), std::move(proj.pi), proj.iterations, residual,
    proj.unique};
}

GlFactors mostow_gl(const Matrix & g, const Subspace & e, const ProjectionOptions & opts)
{
  if (g.rows() != g.cols() || g.rows() != e.ambient_dim()) {
    throw DomainError("GL factorization: matrix must be square and match the subspace");
  }
  const SymMatrix gram(g.transpose() * g);
  const Vector sq = sym_eigen(gram).lambda;
  const double smax = std::sqrt(std::max(sq.maxCoeff(), 0.0));
  const double smin = std::sqrt(std::max(sq.minCoeff(), 0.0));
  if (!(smin > 1e-10 * smax)) {
    std::ostringstream os;
    os << "matrix is numerically singular (singular values " << smin << " / " << smax << ")";
    throw IllConditionedError(os.str());
  }

  MostowFactors m = mostow_spd(SpdMatrix(gram), e, opts);
  // g^T g = e f^2 e, so f is the square root of the exp(F) factor.
  SpdMatrix f = spd_sqrt(m.f);
  const Matrix k = g * spd_inv(m.e).matrix() * spd_inv(f).matrix();
  return {k, std::move(f), std::move(m.e), m.iterations, m.residual, m.unique};
}

TranslatedSubmanifold::TranslatedSubmanifold(const SpdMatrix & x, Subspace e)
: x_(x), e_(std::move(e)), roots_(spd_roots(x))
{
  if (e_.ambient_dim() != x_.dim()) {
    throw DomainError("subspace and anchor dimensions differ");
  }
}

double TranslatedSubmanifold::membership_residual(const SpdMatrix & y) const
{
  const SymMatrix rel = congruence(roots_.inv_half, y);
  const SymMatrix rel_log = sym_apply(rel, [](double l) {return std::log(l);});
  return project_out(e_, rel_log).norm();
}

SpdMatrix TranslatedSubmanifold::point(const SymMatrix & u) const
{
  return SpdMatrix(congruence(roots_.half, spd_exp(project_trace(e_, u))));
}

TranslatedSubmanifold translate_convex_submanifold(const SpdMatrix & x, const Subspace & e)
{
  return TranslatedSubmanifold(x, e);
}

}  // namespace spdgeom
