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

#include "subrec/channel.hpp"

#include <string>

#include "subrec/error.hpp"

namespace subrec {

KrausChannel KrausChannel::from_kraus(std::vector<ComplexMatrix> kraus,
                                      double tol,
                                      bool require_trace_preserving) {
  if (kraus.empty()) {
    throw Error(ErrorCode::kDimensionMismatch, "channel needs at least one Kraus operator");
  }
  const Index d = kraus.front().rows();
  ComplexMatrix tp = ComplexMatrix::Zero(d, d);
  ComplexMatrix un = ComplexMatrix::Zero(d, d);
  for (const auto& k : kraus) {
    if (k.rows() != d || k.cols() != d) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "Kraus operators must all be " + std::to_string(d) + "x" +
                      std::to_string(d));
    }
    if (!all_finite(k)) {
      throw Error(ErrorCode::kParseError, "Kraus operator has non-finite entries");
    }
    tp.noalias() += k.adjoint() * k;
    un.noalias() += k * k.adjoint();
  }
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  KrausChannel ch;
  ch.dim_ = d;
  ch.kraus_ = std::move(kraus);
  ch.trace_residual_ = (tp - id).norm();
  ch.unital_residual_ = (un - id).norm();
  ch.trace_preserving_ = ch.trace_residual_ <= tol;
  ch.unital_ = ch.unital_residual_ <= tol;
  if (require_trace_preserving && !ch.trace_preserving_) {
    throw Error(ErrorCode::kNotTracePreserving,
                "||sum E^dag E - I||_F = " + std::to_string(ch.trace_residual_));
  }
  return ch;
}

ComplexMatrix Superoperator::apply(const ComplexMatrix& x) const {
  if (x.rows() != dim || x.cols() != dim) {
    throw Error(ErrorCode::kDimensionMismatch, "superoperator input has wrong shape");
  }
  return unvec(matrix * vec(x), dim, dim);
}

KrausChannel identity_channel(Index dim) {
  return KrausChannel::from_kraus({ComplexMatrix::Identity(dim, dim)});
}

KrausChannel unitary_channel(const ComplexMatrix& u, double tol) {
  return KrausChannel::from_kraus({u}, tol);
}

ComplexMatrix apply(const KrausChannel& ch, const ComplexMatrix& sigma) {
  if (sigma.rows() != ch.dim() || sigma.cols() != ch.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "operator is " + std::to_string(sigma.rows()) + "x" +
                    std::to_string(sigma.cols()) + ", channel dim " +
                    std::to_string(ch.dim()));
  }
  ComplexMatrix out = ComplexMatrix::Zero(ch.dim(), ch.dim());
  for (const auto& k : ch.kraus()) out.noalias() += k * sigma * k.adjoint();
  return out;
}

KrausChannel dual(const KrausChannel& ch, double tol) {
  std::vector<ComplexMatrix> adj;
  adj.reserve(ch.size());
  for (const auto& k : ch.kraus()) adj.emplace_back(k.adjoint());
  return KrausChannel::from_kraus(std::move(adj), tol, false);
}

KrausChannel compose(const KrausChannel& f, const KrausChannel& g, double tol) {
  if (f.dim() != g.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "compose: channel dimensions differ");
  }
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(f.size() * g.size());
  for (const auto& fa : f.kraus()) {
    for (const auto& gb : g.kraus()) kraus.emplace_back(fa * gb);
  }
  return KrausChannel::from_kraus(std::move(kraus), tol, false);
}

Superoperator to_superoperator(const KrausChannel& ch) {
  const Index d = ch.dim();
  Superoperator s{d, ComplexMatrix::Zero(d * d, d * d)};
  for (const auto& k : ch.kraus()) s.matrix += kron(k.conjugate(), k);
  return s;
}

std::vector<ComplexMatrix> fixed_point_basis(const Superoperator& s, double tol) {
  const Index n = s.matrix.rows();
  const ComplexMatrix kernel =
      null_space(s.matrix - ComplexMatrix::Identity(n, n), tol);
  std::vector<ComplexMatrix> basis;
  basis.reserve(static_cast<std::size_t>(kernel.cols()));
  for (Index j = 0; j < kernel.cols(); ++j) {
    basis.push_back(unvec(kernel.col(j), s.dim, s.dim));
  }
  return basis;
}

double action_distance(const KrausChannel& f, const KrausChannel& g) {
  if (f.dim() != g.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "action_distance: dimensions differ");
  }
  return (to_superoperator(f).matrix - to_superoperator(g).matrix).norm();
}

bool support_contained(const ComplexMatrix& x, const ComplexMatrix& p, double tol) {
  if (x.rows() != p.rows() || x.cols() != p.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "support_contained: shapes differ");
  }
  const ComplexMatrix q = ComplexMatrix::Identity(p.rows(), p.cols()) - p;
  const double leak = (q * x * q).norm() + (q * x * p).norm();
  return leak <= tol * x.norm();
}

}  // namespace subrec
