// Copyright 2026 The subrec Authors
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

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace subrec {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

// Relative Frobenius tolerance used by every structural check unless the
// caller supplies another one.
inline constexpr double kDefaultTolerance = 1e-9;

/// Real spectrum in nonincreasing order.
struct Spectrum {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  double sum() const noexcept;
};

/// Sorts `values` into nonincreasing order.
Spectrum make_spectrum(std::vector<double> values);

struct Eigensystem {
  Spectrum spectrum;
  ComplexMatrix vectors;  // column j belongs to spectrum.values[j]
};

/// Eigendecomposition M = Q diag(lambda) Q^dagger of a Hermitian matrix.
///
/// Eigenvalues come back nonincreasing. Ties keep the solver's column order,
/// and an exactly diagonal input yields (a stable permutation of) the
/// standard basis, so outputs are reproducible. Throws NotHermitian when
/// ||M - M^dagger||_F > tol * ||M||_F.
Eigensystem hermitian_eig(const ComplexMatrix& m,
                          double tol = kDefaultTolerance);

/// Ordered spectrum of a Hermitian matrix.
Spectrum spectrum_of(const ComplexMatrix& m, double tol = kDefaultTolerance);

/// Partial isometry V = G S^+ from a known positive polar factor S.
///
/// Requires G^dagger G = S^2 within tol * max(1, ||S^2||_F); otherwise throws
/// FactorMismatch. The pseudo-inverse drops eigenvalues of S at or below
/// tol * max(1, lambda_max(S)).
ComplexMatrix polar_isometry_on_support(const ComplexMatrix& g,
                                        const ComplexMatrix& s,
                                        double tol = kDefaultTolerance);

/// Extends a square partial isometry to a unitary of the same size.
///
/// The complements of the initial space range(V^dagger V) and the final
/// space range(V V^dagger) are orthonormalized by Gram-Schmidt over the
/// standard basis in index order, then paired in that order.
ComplexMatrix complete_to_unitary(const ComplexMatrix& v, Index dim,
                                  double tol = kDefaultTolerance);

/// Trace over the second factor; composite index is a * d_b + b.
ComplexMatrix partial_trace_b(const ComplexMatrix& m, Index d_a, Index d_b);

/// Trace over the first factor; composite index is a * d_b + b.
ComplexMatrix partial_trace_a(const ComplexMatrix& m, Index d_a, Index d_b);

/// True iff p is majorised by q (prefix sums of p never exceed those of q,
/// and the totals agree), all within tol.
bool majorizes(const Spectrum& q, const Spectrum& p,
               double tol = kDefaultTolerance);

/// Number of singular values above tol * sigma_max. The zero matrix has
/// rank 0.
Index numeric_rank(const ComplexMatrix& m, double tol = kDefaultTolerance);

// Small helpers shared by the rest of the library.

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix matrix_unit(Index rows, Index cols, Index i, Index j);

/// Column-stacking vectorization.
ComplexVector vec(const ComplexMatrix& m);
ComplexMatrix unvec(const ComplexVector& v, Index rows, Index cols);

/// Orthonormal basis of ker(A): right singular vectors whose singular
/// value is at most tol * max(1, sigma_max).
ComplexMatrix null_space(const ComplexMatrix& a,
                         double tol = kDefaultTolerance);

/// Orthonormal basis of range(A): left singular vectors whose singular
/// value exceeds tol * sigma_max.
ComplexMatrix range_basis(const ComplexMatrix& a,
                          double tol = kDefaultTolerance);

double hermiticity_residual(const ComplexMatrix& m);
double unitarity_residual(const ComplexMatrix& u);
/// ||P^2 - P||_F + ||P - P^dagger||_F
double projector_residual(const ComplexMatrix& p);

bool all_finite(const ComplexMatrix& m);

}  // namespace subrec
