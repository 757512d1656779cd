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

#include "subrec/linalg.hpp"

namespace subrec {

/// Completely positive map on d x d operators in operator-sum form
/// E(X) = sum_a E_a X E_a^dagger.
///
/// Channels are immutable. Trace preservation is validated at construction
/// unless explicitly waived (duals of non-unital channels, user input with
/// --no-tp-check). Two channels are compared by action, never by their
/// Kraus lists, since the Kraus form is only unique up to remixing.
class KrausChannel {
 public:
  static KrausChannel from_kraus(std::vector<ComplexMatrix> kraus,
                                 double tol = kDefaultTolerance,
                                 bool require_trace_preserving = true);

  Index dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return kraus_.size(); }
  const std::vector<ComplexMatrix>& kraus() const noexcept { return kraus_; }
  const ComplexMatrix& operator[](std::size_t a) const { return kraus_[a]; }

  bool trace_preserving() const noexcept { return trace_preserving_; }
  bool unital() const noexcept { return unital_; }
  /// ||sum_a E_a^dagger E_a - I||_F
  double trace_residual() const noexcept { return trace_residual_; }
  /// ||sum_a E_a E_a^dagger - I||_F
  double unital_residual() const noexcept { return unital_residual_; }

 private:
  KrausChannel() = default;

  Index dim_ = 0;
  std::vector<ComplexMatrix> kraus_;
  bool trace_preserving_ = false;
  bool unital_ = false;
  double trace_residual_ = 0.0;
  double unital_residual_ = 0.0;
};

/// Liouville matrix acting on column-stacked operators,
/// vec(A X B) = (B^T (x) A) vec(X), so S = sum_a conj(E_a) (x) E_a.
struct Superoperator {
  Index dim = 0;
  ComplexMatrix matrix;

  ComplexMatrix apply(const ComplexMatrix& x) const;
};

KrausChannel identity_channel(Index dim);
KrausChannel unitary_channel(const ComplexMatrix& u,
                             double tol = kDefaultTolerance);

ComplexMatrix apply(const KrausChannel& ch, const ComplexMatrix& sigma);

/// Adjoint map with Kraus operators {E_a^dagger}. Trace-preserving exactly
/// when `ch` is unital.
KrausChannel dual(const KrausChannel& ch, double tol = kDefaultTolerance);

/// f o g, i.e. X -> f(g(X)), with Kraus operators {F_a G_b}.
KrausChannel compose(const KrausChannel& f, const KrausChannel& g,
                     double tol = kDefaultTolerance);

Superoperator to_superoperator(const KrausChannel& ch);

/// Hilbert-Schmidt orthonormal basis of {X : E(X) = X}, the null space of
/// S - I.
std::vector<ComplexMatrix> fixed_point_basis(const Superoperator& s,
                                             double tol = kDefaultTolerance);

/// ||S_f - S_g||_F, i.e. the largest-scale disagreement of the two maps on
/// the matrix-unit basis.
double action_distance(const KrausChannel& f, const KrausChannel& g);

/// supp(X) within supp(P) for positive X, tested as
/// ||(I-P) X (I-P)||_F + ||(I-P) X P||_F <= tol * ||X||_F.
bool support_contained(const ComplexMatrix& x, const ComplexMatrix& p,
                       double tol = kDefaultTolerance);

}  // namespace subrec
