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

#include "subrec/correctability.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "subrec/error.hpp"

namespace subrec {

ComplexMatrix BlockDiagonalization::u_block(std::size_t a, std::size_t b) const {
  return unitary.block(static_cast<Index>(a) * d_a, static_cast<Index>(b) * d_a, d_a, d_a);
}

ComplexMatrix assemble_block_matrix(const BlockMatrix& blocks) {
  const auto m = static_cast<Index>(blocks.size());
  if (m == 0) return {};
  const Index d = blocks.front().front().rows();
  ComplexMatrix f(m * d, m * d);
  for (Index a = 0; a < m; ++a) {
    const auto& row = blocks[static_cast<std::size_t>(a)];
    if (static_cast<Index>(row.size()) != m) {
      throw Error(ErrorCode::kDimensionMismatch, "block matrix is not square");
    }
    for (Index b = 0; b < m; ++b) {
      const auto& blk = row[static_cast<std::size_t>(b)];
      if (blk.rows() != d || blk.cols() != d) {
        throw Error(ErrorCode::kDimensionMismatch, "inconsistent block sizes");
      }
      f.block(a * d, b * d, d, d) = blk;
    }
  }
  return f;
}

BlockDiagonalization diagonalize_blocks(const BlockMatrix& blocks, double tol) {
  const ComplexMatrix f = assemble_block_matrix(blocks);
  const Index d = blocks.front().front().rows();
  const auto m = blocks.size();
  // F is Hermitian up to rounding in the factor extraction.
  const Eigensystem es = hermitian_eig(f, std::max(tol, 1e-12));
  const double top = es.spectrum.values.front();
  const double cut = tol * std::max(1.0, top);

  BlockDiagonalization out;
  out.d_a = d;
  out.unitary = es.vectors.adjoint();
  out.d_blocks.reserve(m);
  out.ranks.reserve(m);
  for (std::size_t a = 0; a < m; ++a) {
    ComplexMatrix blk = ComplexMatrix::Zero(d, d);
    Index rank = 0;
    for (Index i = 0; i < d; ++i) {
      double lambda = es.spectrum.values[a * static_cast<std::size_t>(d) + static_cast<std::size_t>(i)];
      if (lambda < -cut) {
        throw Error(ErrorCode::kNumericalDegeneracy,
                    "block matrix F has eigenvalue " + std::to_string(lambda));
      }
      if (lambda <= cut) lambda = 0.0;
      if (lambda > 0.0) ++rank;
      blk(i, i) = lambda;
    }
    out.d_blocks.push_back(std::move(blk));
    out.ranks.push_back(rank);
  }
  return out;
}

std::vector<ComplexMatrix> block_kraus_factors(const BlockDiagonalization& diag) {
  const Index d = diag.d_a;
  const auto m = diag.size();
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(m);
  for (std::size_t b = 0; b < m; ++b) {
    ComplexMatrix k(static_cast<Index>(m) * d, d);
    for (std::size_t c = 0; c < m; ++c) {
      const ComplexMatrix root = diag.d_blocks[c].diagonal().cwiseSqrt().asDiagonal();
      k.middleRows(static_cast<Index>(c) * d, d) = root * diag.u_block(c, b);
    }
    kraus.push_back(std::move(k));
  }
  return kraus;
}

CorrectabilityCertificate check_correctable(const KrausChannel& ch,
                                            const SubsystemDecomposition& dec, double tol) {
  if (ch.dim() != dec.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "channel dim " + std::to_string(ch.dim()) + " vs subsystem dim " +
                    std::to_string(dec.dim()));
  }
  const auto m = ch.size();
  CorrectabilityCertificate cert;
  cert.dim = ch.dim();
  cert.d_a = dec.d_a();
  cert.d_b = dec.d_b();
  cert.kraus_count = m;

  BlockMatrix blocks(m, std::vector<ComplexMatrix>(m));
  bool all_ok = true;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const FactorResult r = factor_on_range(dec, ch[a].adjoint() * ch[b], tol);
      cert.residual = std::max(cert.residual, r.residual);
      all_ok = all_ok && r.ok;
      blocks[a][b] = r.factor;
    }
  }
  if (!all_ok) return cert;

  const BlockDiagonalization diag = diagonalize_blocks(blocks, tol);
  const auto factors = block_kraus_factors(diag);
  const Index d = dec.d_a();
  ComplexMatrix g = ComplexMatrix::Zero(d * d, d * d);
  for (const auto& ka : factors) {
    for (const auto& kb : factors) {
      const ComplexMatrix fab = ka.adjoint() * kb;
      g += kron(fab.conjugate(), fab);
    }
  }

  const ComplexMatrix p = dec.projector();
  const KrausChannel back = dual(ch, tol);
  const ProductFit fit = fit_product_form(
      [&](const ComplexMatrix& x) -> ComplexMatrix { return p * subrec::apply(back, subrec::apply(ch, x)) * p; }, dec, dec);
  cert.superoperator_residual = std::max(fit.residual, (fit.phi - g).norm());
  cert.f_blocks = std::move(blocks);
  cert.g_a = std::move(g);
  cert.passed = cert.superoperator_residual <= tol * std::max(1.0, cert.g_a->norm());
  return cert;
}

NoiselessCheck check_noiseless(const KrausChannel& ch, const SubsystemDecomposition& dec,
                               double tol) {
  const ProductFit fit = fit_product_form(ch, dec, dec);
  NoiselessCheck out;
  out.residual = fit.residual;
  out.g_a = fit.phi;
  out.noiseless = fit.residual <= tol;
  return out;
}

}  // namespace subrec
