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

#include "subrec/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "subrec/error.hpp"

namespace subrec {
namespace {

void require_matching_certificate(const KrausChannel& ch, const SubsystemDecomposition& dec,
                                  const CorrectabilityCertificate& cert, double tol) {
  if (!cert.passed) {
    throw Error(ErrorCode::kCertificateMismatch, "certificate did not pass");
  }
  if (cert.dim != ch.dim() || cert.kraus_count != ch.size() || cert.d_a != dec.d_a() ||
      cert.d_b != dec.d_b() || cert.f_blocks.size() != ch.size()) {
    throw Error(ErrorCode::kCertificateMismatch,
                "certificate shape does not match channel/subsystem");
  }
  // Spot-check the first and last diagonal blocks against this channel.
  for (std::size_t a : {std::size_t{0}, ch.size() - 1}) {
    const FactorResult r = factor_on_range(dec, ch[a].adjoint() * ch[a], tol);
    if (!r.ok || (r.factor - cert.f_blocks[a][a]).norm() > 10.0 * tol * std::max(1.0, r.factor.norm())) {
      throw Error(ErrorCode::kCertificateMismatch,
                  "F_" + std::to_string(a) + std::to_string(a) +
                      " does not belong to this channel/subsystem");
    }
  }
}

ComplexMatrix lift(const SubsystemDecomposition& dec, const ComplexMatrix& x_a) {
  return dec.embed(kron(x_a, ComplexMatrix::Identity(dec.d_b(), dec.d_b())));
}

}  // namespace

ComplexMatrix liouville(const std::vector<ComplexMatrix>& kraus) {
  if (kraus.empty()) return {};
  const Index rows = kraus.front().rows();
  const Index cols = kraus.front().cols();
  ComplexMatrix s = ComplexMatrix::Zero(rows * rows, cols * cols);
  for (const auto& k : kraus) s += kron(k.conjugate(), k);
  return s;
}

RecoveryResult construct_recovery(const KrausChannel& ch, const SubsystemDecomposition& dec,
                                  const CorrectabilityCertificate& cert, double tol) {
  require_matching_certificate(ch, dec, cert, tol);
  const Index d = ch.dim();
  const Index da = dec.d_a();
  const Index db = dec.d_b();
  const std::size_t m = ch.size();
  const ComplexMatrix p = dec.projector();
  const ComplexMatrix p_perp = ComplexMatrix::Identity(d, d) - p;
  const ComplexMatrix& w = dec.isometry();

  const BlockDiagonalization diag = diagonalize_blocks(cert.f_blocks, tol);

  // G_a P and the full remixed Kraus operators G_a.
  std::vector<ComplexMatrix> gp(m, ComplexMatrix::Zero(d, d));
  std::vector<ComplexMatrix> g(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      gp[a].noalias() += ch[b] * lift(dec, diag.u_block(a, b).adjoint());
    }
    g[a] = gp[a] + ch[a] * p_perp;
  }

  RecoveryResult res{ComplexMatrix(), SubsystemDecomposition::standard(d, 1, 1), {}, {}, 0.0,
                     0.0, 0.0};
  const double scale = tol * std::max(1.0, std::sqrt(static_cast<double>(d)));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const ComplexMatrix gram = gp[a].adjoint() * gp[b];
      if (a != b) {
        res.orthogonality_residual = std::max(res.orthogonality_residual, gram.norm());
      } else {
        const double diag_err = (gram - lift(dec, diag.d_blocks[a])).norm();
        if (diag_err > scale) {
          throw Error(ErrorCode::kNumericalDegeneracy,
                      "P G_a^dag G_a P differs from D_aa (x) I_B by " + std::to_string(diag_err));
        }
      }
    }
  }
  if (res.orthogonality_residual > scale) {
    throw Error(ErrorCode::kNumericalDegeneracy,
                "ranges of G_a P overlap: " + std::to_string(res.orthogonality_residual));
  }

  const KrausChannel remixed = KrausChannel::from_kraus(g, tol, false);
  for (Index l = 0; l < db; ++l) {
    for (Index k = 0; k < db; ++k) {
      const ComplexMatrix x = embed_product(dec, ComplexMatrix::Identity(da, da),
                                            matrix_unit(db, db, k, l));
      res.action_residual =
          std::max(res.action_residual, (subrec::apply(remixed, x) - subrec::apply(ch, x)).norm());
    }
  }
  if (res.action_residual > scale) {
    throw Error(ErrorCode::kNumericalDegeneracy,
                "remixed operation disagrees on I_A (x) sigma_B by " +
                    std::to_string(res.action_residual));
  }

  // Map (a, l, k) -> V_a |phi_l^(a)>|psi_k>, where phi_l^(a) runs over the
  // standard basis vectors in range(D_aa).
  ComplexMatrix v = ComplexMatrix::Zero(d, d);
  std::vector<std::pair<std::size_t, Index>> c_labels;  // (a, i) per C basis vector
  for (std::size_t a = 0; a < m; ++a) {
    res.d_blocks.push_back({a, diag.d_blocks[a], diag.ranks[a]});
    if (diag.ranks[a] == 0) continue;
    const ComplexMatrix root = lift(dec, diag.d_blocks[a].diagonal().cwiseSqrt().asDiagonal());
    const ComplexMatrix va = polar_isometry_on_support(gp[a], root, tol);
    for (Index i = 0; i < da; ++i) {
      if (diag.d_blocks[a](i, i).real() <= 0.0) continue;
      const auto c = static_cast<Index>(c_labels.size());
      if ((c + 1) * db > d) {
        throw Error(ErrorCode::kNumericalDegeneracy,
                    "sum_a r_a d_B exceeds dim H = " + std::to_string(d));
      }
      c_labels.emplace_back(a, i);
      for (Index k = 0; k < db; ++k) {
        v.col(c * db + k) = va * w.col(i * db + k);
      }
    }
  }
  const auto dc = static_cast<Index>(c_labels.size());
  res.u_recovery = complete_to_unitary(v, d, std::max(tol, 1e-10)).adjoint();
  res.c_subsystem = SubsystemDecomposition::standard(d, dc, db);

  // K_b = sum_a (sqrt(D_aa) U_ab) (x) |w_a>, restricted to range(D_aa).
  res.f_ca_kraus.reserve(m);
  for (std::size_t b = 0; b < m; ++b) {
    ComplexMatrix k(dc, da);
    for (Index c = 0; c < dc; ++c) {
      const auto [a, i] = c_labels[static_cast<std::size_t>(c)];
      k.row(c) = std::sqrt(diag.d_blocks[a](i, i).real()) * diag.u_block(a, b).row(i);
    }
    if (k.norm() > 0.0) res.f_ca_kraus.push_back(std::move(k));
  }

  const ComplexMatrix& u = res.u_recovery;
  const ProductFit fit = fit_product_form(
      [&](const ComplexMatrix& x) -> ComplexMatrix { return u * subrec::apply(ch, x) * u.adjoint(); }, dec,
      res.c_subsystem);
  res.residual = std::max(fit.residual, (fit.phi - liouville(res.f_ca_kraus)).norm());
  return res;
}

KrausChannel recovery_to_correction(const RecoveryResult& res,
                                    const SubsystemDecomposition& dec, double tol) {
  const Index d = dec.dim();
  const Index da = dec.d_a();
  const Index db = dec.d_b();
  const Index dc = res.c_subsystem.d_a();
  if (res.c_subsystem.dim() != d || res.c_subsystem.d_b() != db) {
    throw Error(ErrorCode::kDimensionMismatch, "recovery result does not match subsystem");
  }
  const ComplexMatrix& wc = res.c_subsystem.isometry();
  const ComplexMatrix& w = dec.isometry();
  const Index groups = std::max<Index>(1, (dc + da - 1) / da);

  std::vector<ComplexMatrix> folds(static_cast<std::size_t>(groups),
                                   ComplexMatrix::Zero(d, d));
  std::vector<ComplexMatrix> group_proj(static_cast<std::size_t>(groups),
                                        ComplexMatrix::Zero(d, d));
  for (Index c = 0; c < dc; ++c) {
    const auto grp = static_cast<std::size_t>(c / da);
    const Index target = c % da;
    for (Index k = 0; k < db; ++k) {
      const auto from = wc.col(c * db + k);
      folds[grp] += w.col(target * db + k) * from.adjoint();
      group_proj[grp] += from * from.adjoint();
    }
  }
  ComplexMatrix rest = ComplexMatrix::Identity(d, d);
  for (std::size_t grp = 1; grp < folds.size(); ++grp) rest -= group_proj[grp];

  std::vector<ComplexMatrix> kraus;
  kraus.reserve(folds.size());
  kraus.push_back(complete_to_unitary(folds[0], d, std::max(tol, 1e-10)) * rest *
                  res.u_recovery);
  for (std::size_t grp = 1; grp < folds.size(); ++grp) {
    kraus.push_back(folds[grp] * res.u_recovery);
  }
  return KrausChannel::from_kraus(std::move(kraus), tol);
}

}  // namespace subrec
