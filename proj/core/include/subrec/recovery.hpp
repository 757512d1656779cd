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

#include <cstddef>
#include <vector>

#include "subrec/channel.hpp"
#include "subrec/correctability.hpp"
#include "subrec/linalg.hpp"
#include "subrec/subsystem.hpp"

namespace subrec {

/// One diagonal block D_aa of U F U^dagger together with its rank r_a.
struct DiagonalBlock {
  std::size_t index = 0;
  ComplexMatrix d;
  Index rank = 0;
};

/// Unitary recovery U with U o E o P_AB = F_{C|A} (x) id_B.
struct RecoveryResult {
  ComplexMatrix u_recovery;
  /// Where B sits after recovery: the (a, l, k)-ordered vectors
  /// |phi_l^(a)>|w_a>|psi_k> injected as the leading standard basis vectors.
  SubsystemDecomposition c_subsystem;
  /// Kraus operators of F_{C|A}, each dim(C) x d_A.
  std::vector<ComplexMatrix> f_ca_kraus;
  std::vector<DiagonalBlock> d_blocks;
  /// Max deviation from F_{C|A} (x) id_B on the operator basis of AB.
  double residual = 0.0;
  /// max_{a != b} ||P G_a^dag G_b P||_F
  double orthogonality_residual = 0.0;
  /// max over sigma_B of ||G(I_A (x) sigma_B) - E(I_A (x) sigma_B)||_F
  double action_residual = 0.0;
};

/// Builds the recovery unitary from a passing certificate:
///  1. diagonalize the positive block matrix F = (F_ab) as U F U^dag = D;
///  2. remix G_a = sum_b E_b (U_ab^dag (x) I_B) P + E_a P^perp so that the
///     G_a P have mutually orthogonal ranges;
///  3. take polar factors G_a P = V_a (sqrt(D_aa) (x) I_B);
///  4. send |phi_l^(a)>|w_a>|psi_k> to V_a |phi_l^(a)>|psi_k>, extend to a
///     unitary V and return U = V^dag.
///
/// Throws CertificateMismatch when `cert` did not pass or was produced for
/// another channel/subsystem, NumericalDegeneracy when an intermediate
/// identity fails beyond tol.
RecoveryResult construct_recovery(const KrausChannel& ch, const SubsystemDecomposition& dec,
                                  const CorrectabilityCertificate& cert,
                                  double tol = kDefaultTolerance);

/// Correction R = R' o U: R' folds C back onto A by pairing basis vectors
/// c -> c mod d_A (one Kraus operator per group of d_A consecutive C labels)
/// and acts unitarily on the rest of H. When dim C <= d_A the result is a
/// single unitary.
KrausChannel recovery_to_correction(const RecoveryResult& res,
                                    const SubsystemDecomposition& dec,
                                    double tol = kDefaultTolerance);

/// Liouville matrix of the map with the given Kraus operators (rectangular
/// allowed).
ComplexMatrix liouville(const std::vector<ComplexMatrix>& kraus);

}  // namespace subrec
