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

#ifndef SPDGEOM__ERRORS_HPP_
#define SPDGEOM__ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace spdgeom
{

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input files or arguments (CLI exit code 2).
class ParseError : public Error
{
public:
  using Error::Error;
};

/// An input lies outside the domain of an operation: a non-SPD matrix, the
/// log of a non-positive eigenvalue, a degenerate triangle (exit code 3).
class DomainError : public Error
{
public:
  using Error::Error;
};

/// A documented precondition does not hold, e.g. a subspace that is not a
/// Lie triple system in strict mode (exit code 3).
class PreconditionError : public DomainError
{
public:
  using DomainError::DomainError;
};

/// Near-singular matrices where an invertible one is required (exit code 3).
class IllConditionedError : public DomainError
{
public:
  using DomainError::DomainError;
};

/// An iterative method ran out of iterations (exit code 4).
class NumericalFailure : public Error
{
public:
  NumericalFailure(const std::string & what, double residual, int iterations = -1)
  : Error(what), residual_(residual), iterations_(iterations)
  {
  }

  double residual() const noexcept {return residual_;}
  int iterations() const noexcept {return iterations_;}

private:
  double residual_;
  int iterations_;
};

}  // namespace spdgeom

#endif  // SPDGEOM__ERRORS_HPP_
