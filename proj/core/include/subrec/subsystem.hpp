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

#include <functional>
#include <vector>

#include "subrec/channel.hpp"
#include "subrec/linalg.hpp"

namespace subrec {

/// H = (H_A (x) H_B) (+) K, carried by an isometry W whose column
/// a * d_B + b is the image of |a>|b>.
class SubsystemDecomposition {
 public:
  /// Validates W^dagger W = I within tol and d_A * d_B <= dim.
  static SubsystemDecomposition from_isometry(ComplexMatrix w, Index d_a, Index d_b,
                                              double tol = kDefaultTolerance);
  /// W = I on a d_A * d_B dimensional space.
  static SubsystemDecomposition factor(Index d_a, Index d_b);
  /// First d_A * d_B standard basis vectors of a dim-dimensional space.
  static SubsystemDecomposition standard(Index dim, Index d_a, Index d_b);

  Index dim() const noexcept { return w_.rows(); }
  Index d_a() const noexcept { return d_a_; }
  Index d_b() const noexcept { return d_b_; }
  const ComplexMatrix& isometry() const noexcept { return w_; }
  /// P_AB = W W^dagger
  ComplexMatrix projector() const;

  /// W X W^dagger for X on H_A (x) H_B.
  ComplexMatrix embed(const ComplexMatrix& x) const;
  /// W^dagger M W
  ComplexMatrix compress(const ComplexMatrix& m) const;

 private:
  SubsystemDecomposition(ComplexMatrix w, Index d_a, Index d_b)
      : w_(std::move(w)), d_a_(d_a), d_b_(d_b) {}

  ComplexMatrix w_;
  Index d_a_ = 0;
  Index d_b_ = 0;
};

/// W (sigma_A (x) sigma_B) W^dagger
ComplexMatrix embed_product(const SubsystemDecomposition& dec, const ComplexMatrix& sigma_a,
                            const ComplexMatrix& sigma_b);

/// Outcome of asking whether W^dagger M W = X (x) I_B. A mismatch is a
/// value, not an error: the residual is the diagnostic callers need.
struct FactorResult {
  bool ok = false;
  ComplexMatrix factor;  // X = Tr_B(W^dagger M W) / d_B
  double residual = 0.0; // ||W^dagger M W - X (x) I_B||_F
};

/// Succeeds iff residual <= tol * max(1, ||M||_F).
FactorResult factor_on_range(const SubsystemDecomposition& dec, const ComplexMatrix& m,
                             double tol = kDefaultTolerance);

using OperatorMap = std::function<ComplexMatrix(const ComplexMatrix&)>;

/// Best fit of map o P_in against Phi (x) id_B landing on `out`.
struct ProductFit {
  /// max over matrix units E_i (x) E_j of
  /// ||map(W_in (E_i (x) E_j) W_in^dag) - W_out (Phi(E_i) (x) E_j) W_out^dag||_F
  double residual = 0.0;
  /// Phi as a column-stacking Liouville matrix, d_out_A^2 x d_in_A^2.
  ComplexMatrix phi;
};

/// Extracts Phi from the identity slice, Phi(E_i) = Tr_B(W_out^dag
/// map(W_in (E_i (x) I_B) W_in^dag) W_out) / d_B, then checks the full
/// operator basis. Both decompositions must share dim and d_B.
ProductFit fit_product_form(const OperatorMap& map, const SubsystemDecomposition& in,
                            const SubsystemDecomposition& out);

ProductFit fit_product_form(const KrausChannel& ch, const SubsystemDecomposition& in,
                            const SubsystemDecomposition& out);

}  // namespace subrec
