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

#include <catch_amalgamated.hpp>

#include "subrec/channel.hpp"
#include "subrec/linalg.hpp"
#include "subrec/random.hpp"
#include "subrec/subsystem.hpp"

namespace testing {

using subrec::ComplexMatrix;
using subrec::Index;

inline ComplexMatrix pauli(char which) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  switch (which) {
    case 'X': m(0, 1) = m(1, 0) = 1.0; break;
    case 'Y': m(0, 1) = {0.0, -1.0}; m(1, 0) = {0.0, 1.0}; break;
    case 'Z': m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    default: m = ComplexMatrix::Identity(2, 2);
  }
  return m;
}

/// Tensor product of single-qubit Paulis, e.g. "ZIX".
inline ComplexMatrix paulis(const char* word) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (const char* c = word; *c; ++c) out = subrec::kron(out, pauli(*c));
  return out;
}

inline ComplexMatrix basis_isometry(Index dim, const std::vector<Index>& columns) {
  ComplexMatrix w = ComplexMatrix::Zero(dim, static_cast<Index>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) w(columns[j], static_cast<Index>(j)) = 1.0;
  return w;
}

inline subrec::KrausChannel random_channel(std::uint64_t seed, Index dim, Index count) {
  subrec::Rng rng(seed);
  return subrec::KrausChannel::from_kraus(rng.channel_kraus(dim, count));
}

inline subrec::KrausChannel random_unital(std::uint64_t seed, Index dim, Index count) {
  subrec::Rng rng(seed);
  return subrec::KrausChannel::from_kraus(rng.unital_kraus(dim, count));
}

inline subrec::SubsystemDecomposition random_subsystem(std::uint64_t seed, Index dim, Index d_a,
                                                       Index d_b) {
  subrec::Rng rng(seed);
  return subrec::SubsystemDecomposition::from_isometry(rng.isometry(dim, d_a * d_b), d_a, d_b);
}

}  // namespace testing
