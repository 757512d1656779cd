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

#include "subrec/ucc.hpp"

#include <algorithm>
#include <string>

#include "subrec/correctability.hpp"
#include "subrec/error.hpp"

namespace subrec {
namespace {

void require_unital(const KrausChannel& ch) {
  if (!ch.unital() || !ch.trace_preserving()) {
    throw Error(ErrorCode::kNotUnital,
                "channel must be unital and trace preserving (unital residual " +
                    std::to_string(ch.unital_residual()) + ", trace residual " +
                    std::to_string(ch.trace_residual()) + ")");
  }
}

ComplexMatrix output_gram(const std::vector<ComplexMatrix>& kraus, Index rows) {
  ComplexMatrix sum = ComplexMatrix::Zero(rows, rows);
  for (const auto& k : kraus) sum.noalias() += k * k.adjoint();
  return sum;
}

}  // namespace

UccReport find_ucc(const KrausChannel& ch, std::uint64_t seed, double tol) {
  require_unital(ch);
  const KrausChannel ede = compose(dual(ch, tol), ch, tol);
  NoiselessReport ns = noiseless_subsystems(ede, seed, tol);

  UccReport report;
  report.structure = ns.structure;
  report.seed = ns.structure.seed;
  report.classical_sectors = std::move(ns.classical_sectors);

  std::size_t quantum_index = 0;
  for (std::size_t k = 0; k < report.structure.blocks.size(); ++k) {
    if (report.structure.blocks[k].m == 1) continue;
    const SubsystemDecomposition& dec = ns.subsystems[quantum_index++];

    const CorrectabilityCertificate cert = check_correctable(ch, dec, tol);
    if (!cert.passed) {
      throw Error(ErrorCode::kInternalContradiction,
                  "noiseless block " + std::to_string(k) +
                      " of E^dag E fails the correctability test (residual " +
                      std::to_string(std::max(cert.residual, cert.superoperator_residual)) + ")");
    }
    const RecoveryResult rec = construct_recovery(ch, dec, cert, tol);

    RankDiagnostics diag;
    diag.d_a = dec.d_a();
    diag.rank_projector = numeric_rank(dec.projector(), tol);
    diag.rank_image = numeric_rank(subrec::apply(ch, dec.projector()), tol);
    diag.rank_corrected = rec.f_ca_kraus.empty()
                              ? 0
                              : numeric_rank(output_gram(rec.f_ca_kraus, rec.c_subsystem.d_a()),
                                             tol);
    report.rank_diagnostics.push_back(diag);
    if (diag.rank_corrected != dec.d_a() || rec.c_subsystem.d_a() != dec.d_a()) {
      throw Error(ErrorCode::kInternalContradiction,
                  "rank F_{C|A}(I_A) = " + std::to_string(diag.rank_corrected) +
                      " but d_A = " + std::to_string(dec.d_a()) + " for block " +
                      std::to_string(k));
    }

    // Pair the C (x) B basis with the A (x) B basis in order.
    const ComplexMatrix pairing = dec.isometry() * rec.c_subsystem.isometry().adjoint();
    const ComplexMatrix v = complete_to_unitary(pairing, ch.dim(), std::max(tol, 1e-10));
    UccSubsystem found{dec, v * rec.u_recovery, 0.0, k};
    found.residual = fit_product_form(compose(unitary_channel(found.u_correction, tol), ch, tol),
                                      dec, dec)
                         .residual;
    if (found.residual > tol * std::max(1.0, static_cast<double>(ch.dim()))) {
      throw Error(ErrorCode::kInternalContradiction,
                  "correcting unitary for block " + std::to_string(k) + " leaves residual " +
                      std::to_string(found.residual));
    }
    report.subsystems.push_back(std::move(found));
  }
  return report;
}

RankSupport rank_support_equivalence(const KrausChannel& ch, const SubsystemDecomposition& dec,
                                     double tol) {
  require_unital(ch);
  const CorrectabilityCertificate cert = check_correctable(ch, dec, tol);
  if (!cert.passed) {
    throw Error(ErrorCode::kPreconditionViolated, "subsystem is not correctable for the channel");
  }
  const ComplexMatrix p = dec.projector();
  const ComplexMatrix image = subrec::apply(ch, p);
  const ComplexMatrix back = subrec::apply(dual(ch, tol), image);
  const double scale = tol * std::max(1.0, p.norm());

  RankSupport out;
  out.support_contained = support_contained(back, p, tol);
  out.rank_preserved = numeric_rank(image, tol) == numeric_rank(p, tol);
  out.fixed_point = (back - p).norm() <= scale;
  return out;
}

}  // namespace subrec
