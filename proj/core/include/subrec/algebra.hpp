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

#include "subrec/channel.hpp"
#include "subrec/linalg.hpp"
#include "subrec/subsystem.hpp"

namespace subrec {

/// One summand M_m (x) I_n, occupying Q columns [offset, offset + m * n)
/// with column offset + i * n + j holding |i>_m |j>_n.
struct AlgebraBlock {
  Index m = 0;
  Index n = 0;
  Index offset = 0;
};

/// Q^dagger X Q = (sum_k X_k (x) I_{n_k}) (+) 0 for every X in the algebra.
struct AlgebraStructure {
  std::vector<AlgebraBlock> blocks;
  ComplexMatrix q;
  /// Seed of the random probes that produced this decomposition.
  std::uint64_t seed = 0;
  /// Max relative deviation of the input basis from the block pattern.
  double pattern_residual = 0.0;
};

/// Orthonormal (Hilbert-Schmidt) basis of {X : [X, A] = [X, A^dag] = 0 for
/// all A in ops}. With no operators this is all of M_dim.
std::vector<ComplexMatrix> commutant(const std::vector<ComplexMatrix>& ops, Index dim,
                                     double tol = kDefaultTolerance);

/// Block decomposition of the dagger-algebra spanned by `basis`.
///
/// A random Hermitian element of the centre (the Hilbert-Schmidt projection
/// onto the algebra of an element of its commutant) splits the unit into
/// central summands. Inside each summand a random Hermitian element has m
/// distinct eigenvalues of multiplicity n, and a random element links its
/// eigenspaces into the M_m (x) I_n frame. Every basis element is then
/// checked against the pattern. Degenerate probes retry with seed + 1, ...,
/// up to five seeds before UnluckySeed; a basis that is not closed under
/// dagger and products raises NotAnAlgebra.
AlgebraStructure algebra_structure(const std::vector<ComplexMatrix>& basis, std::uint64_t seed,
                                   double tol = kDefaultTolerance);

/// max_X ||Q^dag X Q - pattern(X)||_F / ||X||_F over the given elements.
double block_pattern_residual(const AlgebraStructure& s, const std::vector<ComplexMatrix>& elements);

/// Block k as a subsystem with d_A = n_k (noise side) and d_B = m_k.
SubsystemDecomposition block_subsystem(const AlgebraStructure& s, std::size_t k,
                                       double tol = kDefaultTolerance);

/// A summand with m_k = 1: only its n_k-fold label survives.
struct ClassicalSector {
  Index multiplicity = 0;
  ComplexMatrix isometry;  // dim x n_k
};

struct NoiselessReport {
  AlgebraStructure structure;
  std::size_t fixed_point_dimension = 0;
  std::vector<SubsystemDecomposition> subsystems;
  std::vector<double> residuals;  // check_noiseless residual per subsystem
  std::vector<ClassicalSector> classical_sectors;
};

/// Maximal noiseless subsystems of a unital channel, read off from the
/// structure of its fixed-point algebra.
NoiselessReport noiseless_subsystems(const KrausChannel& ch, std::uint64_t seed = 0,
                                     double tol = kDefaultTolerance);

}  // namespace subrec
