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

#include "spdgeom/applications.hpp"

#include "spdgeom/errors.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace spdgeom
{

namespace
{

constexpr double kStructureTol = 1e-10;

void require_dim(const SymMatrix & m, Index n, const char * what)
{
  if (m.dim() != n) {
    std::ostringstream os;
    os << what << " has dimension " << m.dim() << ", partition expects " << n;
    throw DomainError(os.str());
  }
}

void require_block_diagonal(const SymMatrix & m, const BlockPartition & p, const char * what)
{
  const double off = block_offdiagonal_part(m, p).norm();
  if (off > kStructureTol * std::max(1.0, m.norm())) {
    std::ostringstream os;
    os << what << " is not block-diagonal (off-block norm " << off << ")";
    throw PreconditionError(os.str());
  }
}

void require_block_antidiagonal(const SymMatrix & m, const BlockPartition & p, const char * what)
{
  const double in = block_diagonal_part(m, p).norm();
  if (in > kStructureTol * std::max(1.0, m.norm())) {
    std::ostringstream os;
    os << what << " is not block-anti-diagonal (diagonal-block norm " << in << ")";
    throw PreconditionError(os.str());
  }
}

// Internal invariants: a violation means a numerical bug, not bad input.
void check_structure(double violation, double scale, const std::string & what)
{
  if (violation > 1e-9 * std::max(1.0, scale)) {
    std::ostringstream os;
    os << what << " (violation " << violation << ")";
    throw NumericalFailure(os.str(), violation);
  }
}

struct CoshSinh
{
  SymMatrix cosh;
  SymMatrix sinh;
};

CoshSinh cosh_sinh(const SymMatrix & a)
{
  const EigenDecomposition eig = sym_eigen(a);
  return {
    eig.compose(eig.lambda.unaryExpr([](double l) {return std::cosh(l);})),
    eig.compose(eig.lambda.unaryExpr([](double l) {return std::sinh(l);}))};
}

}  // namespace

TwoBlockPartition::TwoBlockPartition(Index p, Index q)
: p_(p), q_(q)
{
  if (p < 1 || q < 1) {
    throw DomainError("two-block partition needs positive block sizes");
  }
}

SymMatrix block_diagonal_part(const SymMatrix & m, const BlockPartition & p)
{
  require_dim(m, p.total(), "matrix");
  Matrix out = m.matrix();
  for (Index i = 0; i < out.rows(); ++i) {
    for (Index j = 0; j < out.cols(); ++j) {
      if (p.block_of(i) != p.block_of(j)) {
        out(i, j) = 0.0;
      }
    }
  }
  return SymMatrix(out);
}

SymMatrix block_offdiagonal_part(const SymMatrix & m, const BlockPartition & p)
{
  return m - block_diagonal_part(m, p);
}

Correlation correlation_normalize(const SpdMatrix & cov)
{
  const Index n = cov.dim();
  const Vector d = cov.matrix().diagonal();
  const Vector inv_root = d.array().rsqrt();
  Matrix corr = inv_root.asDiagonal() * cov.matrix() * inv_root.asDiagonal();
  corr.diagonal().setOnes();
  return {SpdMatrix(SymMatrix(corr)), SpdMatrix::from_spectrum(Matrix::Identity(n, n), d)};
}

DiagProjectionReport diag_projection_compare(const SpdMatrix & cov, const ProjectionOptions & opts)
{
  const Index n = cov.dim();
  ProjectionResult proj = geodesic_project(cov, diagonal_subspace(n), opts);
  SpdMatrix diag_cov =
    SpdMatrix::from_spectrum(Matrix::Identity(n, n), cov.matrix().diagonal());
  const double gap = (proj.pi.matrix() - diag_cov.matrix()).norm();
  const bool equal = gap <= 1e-8 * cov.sym().norm();

  // e^v = pi^{-1/2} cov pi^{-1/2}.
  const SpdRoots roots = spd_roots(proj.pi);
  const Matrix ev = congruence(roots.inv_half, cov).matrix();
  const double lemma = (Matrix(ev.diagonal().asDiagonal()) - Matrix::Identity(n, n)).norm();
  return {std::move(proj.pi), std::move(diag_cov), equal, gap, lemma, proj.iterations,
    proj.residual};
}

DadFactors dad_decompose(
  const SpdMatrix & sigma, const BlockPartition & p, const ProjectionOptions & opts)
{
  if (p.count() != 2) {
    std::ostringstream os;
    os << "DAD decomposition needs exactly two blocks, got " << p.count();
    throw PreconditionError(os.str());
  }
  if (p.total() != sigma.dim()) {
    throw DomainError("block partition does not match the matrix dimension");
  }
  const MostowFactors m = mostow_spd(sigma, block_diagonal_subspace(p), opts);
  SymMatrix d = 0.5 * spd_log(m.pi);
  SymMatrix a = spd_log(m.f);
  check_structure(
    block_diagonal_part(a, p).norm(), a.norm(), "DAD factor A has nonzero diagonal blocks");
  return {std::move(d), std::move(a), m.iterations, m.residual};
}

AdaFactors ada_decompose(
  const SpdMatrix & sigma, const TwoBlockPartition & p, const ProjectionOptions & opts)
{
  if (p.total() != sigma.dim()) {
    throw DomainError("block partition does not match the matrix dimension");
  }
  const MostowFactors m =
    mostow_spd(sigma, block_antidiagonal_subspace(p.first(), p.second()), opts);
  SymMatrix a = 0.5 * spd_log(m.pi);
  SymMatrix d = spd_log(m.f);
  check_structure(
    block_offdiagonal_part(d, p.partition()).norm(), d.norm(),
    "ADA factor D is not block-diagonal");
  return {std::move(a), std::move(d), m.iterations, m.residual};
}

BlockSplit cosh_sinh_split(const SymMatrix & d, const SymMatrix & a, const TwoBlockPartition & p)
{
  const BlockPartition part = p.partition();
  require_dim(d, p.total(), "D");
  require_dim(a, p.total(), "A");
  require_block_diagonal(d, part, "D");
  require_block_antidiagonal(a, part, "A");

  const CoshSinh cs = cosh_sinh(a);
  check_structure(
    block_offdiagonal_part(cs.cosh, part).norm(), cs.cosh.norm(), "cosh A is not block-diagonal");
  check_structure(
    block_diagonal_part(cs.sinh, part).norm(), cs.sinh.norm(),
    "sinh A is not block-anti-diagonal");

  const Matrix ed = spd_exp(d).matrix();
  return {congruence(ed, cs.cosh), congruence(ed, cs.sinh)};
}

BlockSplit ada_sum_split(
  const SymMatrix & a_prime, const SymMatrix & d_prime, const TwoBlockPartition & p)
{
  const BlockPartition part = p.partition();
  require_dim(a_prime, p.total(), "A'");
  require_dim(d_prime, p.total(), "D'");
  require_block_antidiagonal(a_prime, part, "A'");
  require_block_diagonal(d_prime, part, "D'");

  const CoshSinh cs = cosh_sinh(a_prime);
  const Matrix ed = spd_exp(d_prime).matrix();
  const Matrix & c = cs.cosh.matrix();
  const Matrix & s = cs.sinh.matrix();
  SymMatrix d_part(c * ed * c + s * ed * s);
  SymMatrix a_part(s * ed * c + c * ed * s);
  check_structure(
    block_offdiagonal_part(d_part, part).norm(), d_part.norm(),
    "block-diagonal summand has off-block entries");
  check_structure(
    block_diagonal_part(a_part, part).norm(), a_part.norm(),
    "block-anti-diagonal summand has diagonal-block entries");
  return {std::move(d_part), std::move(a_part)};
}

namespace
{

double det2(const Matrix & m)
{
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

}  // namespace

Sl2Factors sl2_decompose(const Matrix & g, const ProjectionOptions & opts)
{
  if (g.rows() != 2 || g.cols() != 2) {
    throw PreconditionError("SL(2) decomposition needs a 2x2 matrix");
  }
  const double det = det2(g);
  if (!(std::abs(det - 1.0) <= 1e-9)) {
    std::ostringstream os;
    os.precision(17);
    os << "matrix is not in SL(2): det = " << det;
    throw PreconditionError(os.str());
  }
  GlFactors gl = mostow_gl(g, sl2_subspace(), opts);
  const double det_k = det2(gl.k);
  if (!(det_k > 0.0)) {
    throw NumericalFailure("orthogonal SL(2) factor has negative determinant", det_k);
  }
  const double beta = spd_log(gl.f).matrix()(0, 1);
  const double alpha = spd_log(gl.e).matrix()(0, 0);
  return {std::move(gl.k), beta, alpha, std::move(gl.f), std::move(gl.e)};
}

}  // namespace spdgeom
