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

#ifndef SPDGEOM__APPLICATIONS_HPP_
#define SPDGEOM__APPLICATIONS_HPP_

#include "spdgeom/decompose.hpp"
#include "spdgeom/matfun.hpp"
#include "spdgeom/subspace.hpp"

namespace spdgeom
{

/// A partition into exactly two diagonal blocks of sizes p and q. The
/// block-anti-diagonal subspace is a Lie triple system only in this case.
class TwoBlockPartition
{
public:
  TwoBlockPartition(Index p, Index q);

  Index first() const {return p_;}
  Index second() const {return q_;}
  Index total() const {return p_ + q_;}
  BlockPartition partition() const {return BlockPartition({p_, q_});}

private:
  Index p_;
  Index q_;
};

/// Entries of m inside the diagonal blocks (everything else zeroed).
SymMatrix block_diagonal_part(const SymMatrix & m, const BlockPartition & p);
/// Entries of m outside the diagonal blocks.
SymMatrix block_offdiagonal_part(const SymMatrix & m, const BlockPartition & p);

struct Correlation
{
  SpdMatrix corr;
  /// Diagonal part of the covariance.
  SpdMatrix d;
};

/// corr = d^{-1/2} cov d^{-1/2} with d = diag(cov); corr has unit diagonal.
Correlation correlation_normalize(const SpdMatrix & cov);

struct DiagProjectionReport
{
  /// Geodesic projection onto positive diagonal matrices.
  SpdMatrix pi;
  /// Entrywise diagonal of the covariance.
  SpdMatrix diag_cov;
  bool equal;
  /// |pi - diag(cov)|_F.
  double gap;
  /// |diag(e^v) - I|_F with v = log(pi^{-1/2} cov pi^{-1/2}); zero iff equal.
  double lemma_residual;
  int iterations;
  double residual;
};

/// Compares the geodesic projection onto diagonal matrices with diag(cov).
/// equal holds when |pi - diag(cov)|_F <= 1e-8 |cov|_F.
DiagProjectionReport diag_projection_compare(
  const SpdMatrix & cov, const ProjectionOptions & opts = {});

/// Sigma = exp D exp A exp D, D block-diagonal, A block-anti-diagonal.
struct DadFactors
{
  SymMatrix d;
  SymMatrix a;
  int iterations;
  double residual;
};

/// Throws PreconditionError unless the partition has exactly two blocks.
DadFactors dad_decompose(
  const SpdMatrix & sigma, const BlockPartition & p, const ProjectionOptions & opts = {});

/// Sigma = exp A' exp D' exp A', A' block-anti-diagonal, D' block-diagonal.
struct AdaFactors
{
  SymMatrix a;
  SymMatrix d;
  int iterations;
  double residual;
};

AdaFactors ada_decompose(
  const SpdMatrix & sigma, const TwoBlockPartition & p, const ProjectionOptions & opts = {});

/// Block-diagonal and block-anti-diagonal summands of Sigma.
struct BlockSplit
{
  SymMatrix d_part;
  SymMatrix a_part;
};

/// exp D cosh A exp D  +  exp D sinh A exp D. Throws PreconditionError if D
/// is not block-diagonal or A is not block-anti-diagonal.
BlockSplit cosh_sinh_split(const SymMatrix & d, const SymMatrix & a, const TwoBlockPartition & p);

/// (cosh A' e^{D'} cosh A' + sinh A' e^{D'} sinh A')
///   + (sinh A' e^{D'} cosh A' + cosh A' e^{D'} sinh A').
BlockSplit ada_sum_split(
  const SymMatrix & a_prime, const SymMatrix & d_prime, const TwoBlockPartition & p);

/// g = k f e in SL(2, R) with k in SO(2), f = [[cosh b, sinh b], [sinh b, cosh b]]
/// and e = diag(e^a, e^{-a}).
struct Sl2Factors
{
  Matrix k;
  double beta;
  double alpha;
  SpdMatrix f;
  SpdMatrix e;
};

/// Throws PreconditionError unless g is 2x2 with |det g - 1| <= 1e-9.
Sl2Factors sl2_decompose(const Matrix & g, const ProjectionOptions & opts = {});

}  // namespace spdgeom

#endif  // SPDGEOM__APPLICATIONS_HPP_
