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

#include <cstdint>
#include <vector>

#include "subrec/algebra.hpp"
#include "subrec/channel.hpp"
#include "subrec/linalg.hpp"
#include "subrec/recovery.hpp"
#include "subrec/subsystem.hpp"

namespace subrec {

struct RankDiagnostics {
  Index rank_image = 0;      // rank E(P_AB)
  Index rank_projector = 0;  // rank P_AB
  Index rank_corrected = 0;  // rank F_{C|A}(I_A)
  Index d_a = 0;
};

struct UccSubsystem {
  SubsystemDecomposition dec;
  ComplexMatrix u_correction;
  /// Distance of U o E o P_AB from the closest F_A (x) id_B.
  double residual = 0.0;
  /// Index of the fixed-point block of E^dag o E the subsystem came from.
  std::size_t block = 0;
};

struct UccReport {
  std::vector<UccSubsystem> subsystems;
  std::vector<ClassicalSector> classical_sectors;
  std::vector<RankDiagnostics> rank_diagnostics;  // one per candidate
  AlgebraStructure structure;
  std::uint64_t seed = 0;
};

/// Unitarily correctable subsystems of a unital channel, each with a
/// correcting unitary. Candidates are the noiseless subsystems of
/// E^dag o E; a candidate that then fails the correctability test raises
/// InternalContradiction.
UccReport find_ucc(const KrausChannel& ch, std::uint64_t seed = 0,
                   double tol = kDefaultTolerance);

struct RankSupport {
  bool support_contained = false;  // supp E^dag E(P) within supp P
  bool rank_preserved = false;     // rank E(P) = rank P
  bool fixed_point = false;        // E^dag E(P) = P
};

/// The three equivalent conditions for a correctable subsystem of a unital
/// channel. Throws PreconditionViolated when `dec` is not correctable.
RankSupport rank_support_equivalence(const KrausChannel& ch, const SubsystemDecomposition& dec,
                                     double tol = kDefaultTolerance);

}  // namespace subrec
