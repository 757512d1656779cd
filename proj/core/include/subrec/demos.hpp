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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "subrec/channel.hpp"
#include "subrec/linalg.hpp"
#include "subrec/subsystem.hpp"

namespace subrec {

enum class DemoKind { kPhaseFlip, kBinaryUnitary, kSwap, kPlanted };

std::string_view to_string(DemoKind kind);
/// Throws BadParams for an unknown name.
DemoKind demo_kind_from_string(std::string_view name);

struct DemoSpec {
  DemoKind kind = DemoKind::kPhaseFlip;
  double p = 0.5;
  std::array<double, 4> theta{0.3, 1.2, 2.5, 4.0};
  std::uint64_t seed = 0;

  // planted only
  Index d_a = 2;
  Index d_b = 2;
  Index dim = 8;
  Index noise_kraus = 2;
  bool unital = true;
};

struct Demo {
  KrausChannel channel;
  std::optional<SubsystemDecomposition> code;

  // binary-unitary only
  ComplexMatrix unitary;
  Complex lambda{0.0, 0.0};
  double s = 0.0;
  double t = 0.0;

  // planted only
  ComplexMatrix outer_unitary;
  std::vector<ComplexMatrix> noise_kraus;
};

Demo demo_build(const DemoSpec& spec, double tol = kDefaultTolerance);

/// Two-qubit phase flips: E(rho) = p Z1 rho Z1 + (1 - p) Z2 rho Z2, with
/// the code span{|00>, |11>}.
Demo phase_flip(double p, double tol = kDefaultTolerance);

/// E(rho) = p rho + (1 - p) U rho U^dag with U = R diag(e^{i theta_j}) R^dag
/// for a seeded Haar unitary R. The code span{psi, phi} sits on the point
/// where the chords [l1, l3] and [l2, l4] of the unit circle cross.
Demo binary_unitary(double p, const std::array<double, 4>& theta, std::uint64_t seed,
                    double tol = kDefaultTolerance);

/// The two-qubit swap with the factor split d_A = d_B = 2.
Demo swap_demo();

/// U0 o (F_A (x) id_B) on a random subsystem of C^dim, extended to the
/// complement so the whole map is a channel (unital when spec.unital).
Demo planted(const DemoSpec& spec, double tol = kDefaultTolerance);

}  // namespace subrec
