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

#include <optional>
#include <vector>

#include "subrec/channel.hpp"
#include "subrec/linalg.hpp"
#include "subrec/subsystem.hpp"

namespace subrec {

/// m x m array of d_A x d_A operators, indexed [a][b].
using BlockMatrix = std::vector<std::vector<ComplexMatrix>>;

/// Result of testing P E_a^dag E_b P = F_ab (x) I_B for every Kraus pair.
struct CorrectabilityCertificate {
  bool passed = false;
  /// Largest tensor-factor mismatch over all (a, b).
  double residual = 0.0;
  /// F_ab; filled only when every pair factorized.
  BlockMatrix f_blocks;
  /// G_A as a d_A^2 x d_A^2 column-stacking Liouville matrix, present when
  /// the factor test passed.
  std::optional<ComplexMatrix> g_a;
  /// Disagreement between G_A (x) id_B and P o E^dag o E o P on the
  /// operator basis of AB.
  double superoperator_residual = 0.0;

  // Shape of the problem that produced the certificate.
  Index dim = 0;
  Index d_a = 0;
  Index d_b = 0;
  std::size_t kraus_count = 0;
};

/// U F U^dagger = D for the positive block matrix F = (F_ab).
struct BlockDiagonalization {
  Index d_a = 0;
  /// (m d_A) x (m d_A) unitary; block (a, b) is U_ab.
  ComplexMatrix unitary;
  /// Diagonal D_aa, eigenvalues nonincreasing across blocks, clamped >= 0.
  std::vector<ComplexMatrix> d_blocks;
  std::vector<Index> ranks;

  std::size_t size() const noexcept { return d_blocks.size(); }
  ComplexMatrix u_block(std::size_t a, std::size_t b) const;
};

ComplexMatrix assemble_block_matrix(const BlockMatrix& blocks);

/// Eigenvalues within tol * max(1, lambda_max) of zero become exactly zero;
/// anything more negative raises NumericalDegeneracy.
BlockDiagonalization diagonalize_blocks(const BlockMatrix& blocks,
                                        double tol = kDefaultTolerance);

/// Kraus operators K_b = sum_a (sqrt(D_aa) U_ab) (x) |w_a>, written as
/// (m d_A) x d_A matrices with the |w_a> index outermost. They satisfy
/// K_a^dag K_b = F_ab.
std::vector<ComplexMatrix> block_kraus_factors(const BlockDiagonalization& diag);

CorrectabilityCertificate check_correctable(const KrausChannel& ch,
                                            const SubsystemDecomposition& dec,
                                            double tol = kDefaultTolerance);

struct NoiselessCheck {
  bool noiseless = false;
  double residual = 0.0;
  /// G_A as a d_A^2 x d_A^2 Liouville matrix.
  ComplexMatrix g_a;
};

/// E o P_AB = G_A (x) id_B on the full operator basis of AB.
NoiselessCheck check_noiseless(const KrausChannel& ch, const SubsystemDecomposition& dec,
                               double tol = kDefaultTolerance);

}  // namespace subrec
