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

#include <cmath>

#include "oracles.hpp"
#include "subrec/correctability.hpp"
#include "subrec/demos.hpp"
#include "subrec/error.hpp"
#include "subrec/random.hpp"
#include "subrec/recovery.hpp"
#include "support.hpp"

using namespace subrec;
using testing::paulis;

namespace {

// Kraus operators of R o E restricted to the code, checked by the oracle
// against  R o E o P_AB = F_A (x) id_B.
oracle::ProductForm corrected_form(const KrausChannel& r, const KrausChannel& e,
                                   const SubsystemDecomposition& dec) {
  std::vector<ComplexMatrix> kraus;
  for (const auto& rk : r.kraus())
    for (const auto& ek : e.kraus()) kraus.push_back(rk * ek);
  const ComplexMatrix p = dec.projector();
  return oracle::product_form(oracle::liouville(kraus) * kron(p.conjugate(), p), dec.isometry(),
                              dec.d_a(), dec.d_b(), 1e-9);
}

}  // namespace

TEST_CASE("swap: the recovery unitary undoes the swap on all of H") {
  const Demo demo = swap_demo();
  const auto cert = check_correctable(demo.channel, *demo.code);
  REQUIRE(cert.passed);
  const RecoveryResult res = construct_recovery(demo.channel, *demo.code, cert);
  const ComplexMatrix swap = demo.channel[0];
  CHECK((res.u_recovery - swap.adjoint()).norm() < 1e-10);
  CHECK(res.residual < 1e-12);
  CHECK(res.c_subsystem.d_a() == 2);
}

TEST_CASE("phase flip: recovery unitary and F_C|A") {
  const Demo demo = phase_flip(0.3);
  const auto cert = check_correctable(demo.channel, *demo.code);
  const RecoveryResult res = construct_recovery(demo.channel, *demo.code, cert);
  CHECK(unitarity_residual(res.u_recovery) < 1e-12);
  CHECK(res.residual < 1e-12);
  CHECK(res.orthogonality_residual < 1e-12);
  CHECK(res.c_subsystem.d_a() == 1);
  REQUIRE(res.f_ca_kraus.size() >= 1);
  const KrausChannel correction = recovery_to_correction(res, *demo.code);
  CHECK(correction.trace_preserving());
  CHECK(corrected_form(correction, demo.channel, *demo.code).ok);
}

TEST_CASE("bit flip: C is larger than A and the correction folds it back") {
  const KrausChannel ch = KrausChannel::from_kraus(
      {std::sqrt(0.7) * paulis("III"), std::sqrt(0.1) * paulis("XII"),
       std::sqrt(0.1) * paulis("IXI"), std::sqrt(0.1) * paulis("IIX")});
  const auto code = SubsystemDecomposition::from_isometry(testing::basis_isometry(8, {0, 7}), 1, 2);
  const auto cert = check_correctable(ch, code);
  const RecoveryResult res = construct_recovery(ch, code, cert);
  CHECK(res.c_subsystem.d_a() == 4);
  CHECK(res.residual < 1e-12);

  // U_rec o E o P_AB = F_C|A (x) id_B with F_C|A: A -> C.
  const ComplexMatrix u = res.u_recovery;
  std::vector<ComplexMatrix> kraus;
  for (const auto& k : ch.kraus()) kraus.push_back(u * k * code.isometry());
  const ComplexMatrix wc = res.c_subsystem.isometry();
  // F_C|A is 1 -> 4 here; check the C (x) B compression of every output.
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) {
      const ComplexMatrix out = oracle::apply(kraus, matrix_unit(2, 2, i, j));
      const ComplexMatrix c_out = wc.adjoint() * out * wc;
      CHECK((wc * c_out * wc.adjoint() - out).norm() < 1e-12);
      const ComplexMatrix expected = kron(oracle::apply(res.f_ca_kraus, ComplexMatrix::Identity(1, 1)),
                                          matrix_unit(2, 2, i, j));
      CHECK((c_out - expected).norm() < 1e-12);
    }

  const KrausChannel correction = recovery_to_correction(res, code);
  CHECK(correction.size() == 4);
  CHECK(corrected_form(correction, ch, code).ok);
}

TEST_CASE("planted channels round-trip through the oracle") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    DemoSpec spec;
    spec.kind = DemoKind::kPlanted;
    spec.seed = seed;
    spec.d_a = 1 + static_cast<Index>(seed % 2);
    spec.d_b = 2;
    spec.dim = 6;
    spec.unital = seed % 3 == 0;
    const Demo demo = planted(spec);
    const auto cert = check_correctable(demo.channel, *demo.code);
    const RecoveryResult res = construct_recovery(demo.channel, *demo.code, cert);
    CHECK(res.residual < 1e-10);
    const KrausChannel correction = recovery_to_correction(res, *demo.code);
    const auto form = corrected_form(correction, demo.channel, *demo.code);
    CHECK(form.ok);
  }
}

TEST_CASE("construct_recovery checks its certificate") {
  const Demo demo = phase_flip(0.3);
  const auto cert = check_correctable(demo.channel, *demo.code);
  const Demo other = phase_flip(0.1);
  CHECK_THROWS_AS(construct_recovery(other.channel, *other.code, cert), Error);
  const auto bad = check_correctable(
      demo.channel, SubsystemDecomposition::from_isometry(testing::basis_isometry(4, {0, 1}), 1, 2));
  REQUIRE_FALSE(bad.passed);
  try {
    construct_recovery(demo.channel, *demo.code, bad);
    FAIL("expected CertificateMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCertificateMismatch);
  }
}

TEST_CASE("liouville of rectangular Kraus operators") {
  Rng rng(2);
  const ComplexMatrix k = rng.ginibre(3, 2);
  const ComplexMatrix x = rng.ginibre(2, 2);
  CHECK((liouville({k}) * vec(x) - vec(k * x * k.adjoint())).norm() < 1e-12);
  CHECK(liouville({}).size() == 0);
}
