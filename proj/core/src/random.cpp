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

#include "subrec/random.hpp"

#include <cmath>

namespace subrec {

Index Rng::uniform_index(Index lo, Index hi) {
  std::uniform_int_distribution<Index> dist(lo, hi);
  return dist(engine_);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * M_SQRT1_2, im * M_SQRT1_2};
}

ComplexMatrix Rng::ginibre(Index rows, Index cols) {
  ComplexMatrix g(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) g(i, j) = complex_normal();
  }
  return g;
}

ComplexMatrix Rng::unitary(Index dim) {
  return isometry(dim, dim);
}

ComplexMatrix Rng::isometry(Index rows, Index cols) {
  const ComplexMatrix g = ginibre(rows, cols);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(rows, cols);
  const ComplexMatrix r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  for (Index j = 0; j < cols; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

ComplexMatrix Rng::hermitian(Index dim) {
  const ComplexMatrix g = ginibre(dim, dim);
  return 0.5 * (g + g.adjoint());
}

ComplexMatrix Rng::density(Index dim) {
  const ComplexMatrix g = ginibre(dim, dim);
  ComplexMatrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

ComplexVector Rng::pure_state(Index dim) {
  ComplexVector v = ginibre(dim, 1).col(0);
  return v / v.norm();
}

ComplexMatrix Rng::projector(Index dim, Index rank) {
  const ComplexMatrix w = isometry(dim, rank);
  return w * w.adjoint();
}

std::vector<double> Rng::probabilities(Index count) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> p(static_cast<std::size_t>(count));
  double total = 0.0;
  for (auto& x : p) {
    x = expo(engine_);
    total += x;
  }
  for (auto& x : p) x /= total;
  return p;
}

std::vector<ComplexMatrix> Rng::channel_kraus(Index dim, Index count) {
  const ComplexMatrix v = isometry(dim * count, dim);
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(static_cast<std::size_t>(count));
  for (Index a = 0; a < count; ++a) kraus.emplace_back(v.middleRows(a * dim, dim));
  return kraus;
}

std::vector<ComplexMatrix> Rng::unital_kraus(Index dim, Index count) {
  const auto weights = probabilities(count);
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(static_cast<std::size_t>(count));
  for (double w : weights) kraus.emplace_back(std::sqrt(w) * unitary(dim));
  return kraus;
}

}  // namespace subrec
