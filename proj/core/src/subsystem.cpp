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

#include "subrec/subsystem.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "subrec/error.hpp"

namespace subrec {

SubsystemDecomposition SubsystemDecomposition::from_isometry(ComplexMatrix w, Index d_a,
                                                             Index d_b, double tol) {
  if (d_a < 1 || d_b < 1) {
    throw Error(ErrorCode::kDimensionMismatch, "subsystem dimensions must be positive");
  }
  if (w.cols() != d_a * d_b || w.rows() < w.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "W must be dim x (d_A*d_B) with d_A*d_B <= dim; got " +
                    std::to_string(w.rows()) + "x" + std::to_string(w.cols()));
  }
  if (!all_finite(w)) {
    throw Error(ErrorCode::kParseError, "W has non-finite entries");
  }
  const double defect = unitarity_residual(w);
  if (defect > tol * std::max(1.0, std::sqrt(static_cast<double>(w.cols())))) {
    throw Error(ErrorCode::kNotPartialIsometry,
                "W^dag W deviates from identity by " + std::to_string(defect));
  }
  return SubsystemDecomposition(std::move(w), d_a, d_b);
}

SubsystemDecomposition SubsystemDecomposition::factor(Index d_a, Index d_b) {
  return standard(d_a * d_b, d_a, d_b);
}

SubsystemDecomposition SubsystemDecomposition::standard(Index dim, Index d_a, Index d_b) {
  return from_isometry(ComplexMatrix::Identity(dim, d_a * d_b), d_a, d_b);
}

ComplexMatrix SubsystemDecomposition::projector() const {
  return w_ * w_.adjoint();
}

ComplexMatrix SubsystemDecomposition::embed(const ComplexMatrix& x) const {
  if (x.rows() != w_.cols() || x.cols() != w_.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "embed: operator is not on H_A (x) H_B");
  }
  return w_ * x * w_.adjoint();
}

ComplexMatrix SubsystemDecomposition::compress(const ComplexMatrix& m) const {
  if (m.rows() != dim() || m.cols() != dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "compress: operator is not on H");
  }
  return w_.adjoint() * m * w_;
}

ComplexMatrix embed_product(const SubsystemDecomposition& dec, const ComplexMatrix& sigma_a,
                            const ComplexMatrix& sigma_b) {
  if (sigma_a.rows() != dec.d_a() || sigma_a.cols() != dec.d_a() ||
      sigma_b.rows() != dec.d_b() || sigma_b.cols() != dec.d_b()) {
    throw Error(ErrorCode::kDimensionMismatch, "embed_product: factor shapes do not match");
  }
  return dec.embed(kron(sigma_a, sigma_b));
}

FactorResult factor_on_range(const SubsystemDecomposition& dec, const ComplexMatrix& m,
                             double tol) {
  const ComplexMatrix local = dec.compress(m);
  FactorResult out;
  out.factor = partial_trace_b(local, dec.d_a(), dec.d_b()) / static_cast<double>(dec.d_b());
  out.residual =
      (local - kron(out.factor, ComplexMatrix::Identity(dec.d_b(), dec.d_b()))).norm();
  out.ok = out.residual <= tol * std::max(1.0, m.norm());
  return out;
}

ProductFit fit_product_form(const OperatorMap& map, const SubsystemDecomposition& in,
                            const SubsystemDecomposition& out) {
  if (in.dim() != out.dim() || in.d_b() != out.d_b()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "fit_product_form: decompositions must share dim and d_B");
  }
  const Index da_in = in.d_a();
  const Index da_out = out.d_a();
  const Index db = in.d_b();
  const ComplexMatrix id_b = ComplexMatrix::Identity(db, db);

  ProductFit fit;
  fit.phi = ComplexMatrix::Zero(da_out * da_out, da_in * da_in);
  std::vector<ComplexMatrix> images;
  images.reserve(static_cast<std::size_t>(da_in * da_in));
  // Column-stacking order: unit (r, c) sits at index r + c * d_A.
  for (Index c = 0; c < da_in; ++c) {
    for (Index r = 0; r < da_in; ++r) {
      const ComplexMatrix unit = matrix_unit(da_in, da_in, r, c);
      const ComplexMatrix image = out.compress(map(in.embed(kron(unit, id_b))));
      ComplexMatrix x = partial_trace_b(image, da_out, db) / static_cast<double>(db);
      fit.phi.col(r + c * da_in) = vec(x);
      images.push_back(std::move(x));
    }
  }
  for (Index c = 0; c < da_in; ++c) {
    for (Index r = 0; r < da_in; ++r) {
      const ComplexMatrix& x = images[static_cast<std::size_t>(r + c * da_in)];
      const ComplexMatrix unit_a = matrix_unit(da_in, da_in, r, c);
      for (Index l = 0; l < db; ++l) {
        for (Index k = 0; k < db; ++k) {
          const ComplexMatrix unit_b = matrix_unit(db, db, k, l);
          const ComplexMatrix got = map(in.embed(kron(unit_a, unit_b)));
          const ComplexMatrix want = out.embed(kron(x, unit_b));
          fit.residual = std::max(fit.residual, (got - want).norm());
        }
      }
    }
  }
  return fit;
}

ProductFit fit_product_form(const KrausChannel& ch, const SubsystemDecomposition& in,
                            const SubsystemDecomposition& out) {
  if (ch.dim() != in.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "fit_product_form: channel dim differs");
  }
  return fit_product_form([&ch](const ComplexMatrix& x) -> ComplexMatrix { return subrec::apply(ch, x); }, in, out);
}

}  // namespace subrec
