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
#include <random>
#include <vector>

#include "subrec/linalg.hpp"

namespace subrec {

// Seeded generators for test instances and the `planted` demo. All draws go
// through one std::mt19937_64 so a seed fixes the whole instance.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }
  Index uniform_index(Index lo, Index hi);  // inclusive bounds
  Complex complex_normal();

  /// Ginibre matrix with i.i.d. standard complex normal entries.
  ComplexMatrix ginibre(Index rows, Index cols);
  /// Haar-random unitary (QR of a Ginibre matrix with phases fixed).
  ComplexMatrix unitary(Index dim);
  /// Haar-random isometry with `cols` orthonormal columns.
  ComplexMatrix isometry(Index rows, Index cols);
  ComplexMatrix hermitian(Index dim);
  /// Random full-rank density operator (normalized Wishart).
  ComplexMatrix density(Index dim);
  /// Random pure state as a unit vector.
  ComplexVector pure_state(Index dim);
  /// Orthogonal projector of the given rank onto a Haar-random subspace.
  ComplexMatrix projector(Index dim, Index rank);
  /// Probability vector drawn from the flat Dirichlet distribution.
  std::vector<double> probabilities(Index count);

  /// Kraus operators of a random CPTP map (Stinespring with a random
  /// isometry into dim * count).
  std::vector<ComplexMatrix> channel_kraus(Index dim, Index count);
  /// Kraus operators of a random mixture of Haar unitaries; unital and
  /// trace-preserving.
  std::vector<ComplexMatrix> unital_kraus(Index dim, Index count);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace subrec
