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
#include "subrec/ucc.hpp"
#include "support.hpp"

using namespace subrec;

namespace {

// Liouville matrix of U o E o P_AB on the whole space.
ComplexMatrix corrected_action(const ComplexMatrix& u, const KrausChannel& ch, const ComplexMatrix& p) {
  std::vector<ComplexMatrix> kraus;
  for (const auto& k : ch.kraus()) kraus.push_back(u * k * p);
  return oracle::liouville(kraus);
}

double outside(const ComplexMatrix& cols, const ComplexMatrix& target) {
  const ComplexMatrix p = target * target.adjoint();
  return ((ComplexMatrix::Identity(p.rows(), p.cols()) - p) * cols).norm();
}

}  // namespace

TEST_CASE("unitary channel: whole space, correction inverts U0") {
  Rng rng(4);
  const ComplexMatrix u0 = rng.unitary(3);
  const UccReport rep = find_ucc(unitary_channel(u0), 0);
  REQUIRE(rep.subsystems.size() == 1);
  const auto& s = rep.subsystems[0];
  CHECK(s.dec.d_b() == 3);
  CHECK(s.dec.d_a() == 1);
  CHECK(s.residual < 1e-9);
  // U_corr U0 is a phase on the code, so the action is the identity.
  const ComplexMatrix prod = s.u_correction * u0;
  CHECK((oracle::liouville({prod}) - ComplexMatrix::Identity(9, 9)).norm() < 1e-9);
}

TEST_CASE("phase flip: both parity blocks, controlled-phase action on the even one") {
  const Demo demo = phase_flip(0.3);
  const UccReport rep = find_ucc(demo.channel, 0);
  REQUIRE(rep.subsystems.size() == 2);
  ComplexMatrix cz = ComplexMatrix::Identity(4, 4);
  cz(3, 3) = -1.0;
  const ComplexMatrix even = testing::basis_isometry(4, {0, 3});
  int matched = 0;
  for (const auto& s : rep.subsystems) {
    CHECK(s.residual < 1e-9);
    if (outside(s.dec.isometry(), even) < 1e-10) {
      const ComplexMatrix p = s.dec.projector();
      CHECK((corrected_action(s.u_correction, demo.channel, p) -
             corrected_action(cz, demo.channel, p))
                .norm() < 1e-8);
      ++matched;
    }
  }
  CHECK(matched == 1);
  for (const auto& r : rep.rank_diagnostics) {
    CHECK(r.rank_image == r.rank_projector);
    CHECK(r.rank_corrected == r.d_a);
  }
}

TEST_CASE("binary unitary: no quantum UCC, yet its code is correctable") {
  const Demo demo = binary_unitary(0.5, {0.3, 1.2, 2.5, 4.0}, 0);
  const UccReport rep = find_ucc(demo.channel, 0);
  CHECK(rep.subsystems.empty());
  CHECK(rep.classical_sectors.size() == 4);
  CHECK(check_correctable(demo.channel, *demo.code).passed);
}

TEST_CASE("planted unital channels: the planted B is recovered") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    DemoSpec spec;
    spec.kind = DemoKind::kPlanted;
    spec.seed = seed;
    spec.d_a = 2;
    spec.d_b = 2;
    spec.dim = 6;
    spec.noise_kraus = 3;
    spec.unital = true;
    const Demo demo = planted(spec);
    const UccReport rep = find_ucc(demo.channel, seed);
    bool contained = false;
    for (const auto& s : rep.subsystems) {
      CHECK(s.residual < 1e-9);
      if (s.dec.d_b() == 2 && outside(demo.code->isometry(), s.dec.isometry()) < 1e-8) contained = true;
    }
    CHECK(contained);
  }
}

TEST_CASE("find_ucc needs a unital channel") {
  CHECK_THROWS_AS(find_ucc(testing::random_channel(2, 3, 2), 0), Error);
}

TEST_CASE("rank_support_equivalence examples") {
  Rng rng(3);
  const auto whole = SubsystemDecomposition::factor(1, 3);
  const RankSupport u = rank_support_equivalence(unitary_channel(rng.unitary(3)), whole);
  CHECK(u.support_contained);
  CHECK(u.rank_preserved);
  CHECK(u.fixed_point);

  const Demo pf = phase_flip(0.3);
  const RankSupport f = rank_support_equivalence(pf.channel, *pf.code);
  CHECK(f.support_contained);
  CHECK(f.rank_preserved);
  CHECK(f.fixed_point);

  const Demo bu = binary_unitary(0.5, {0.3, 1.2, 2.5, 4.0}, 0);
  const RankSupport b = rank_support_equivalence(bu.channel, *bu.code);
  CHECK_FALSE(b.support_contained);
  CHECK_FALSE(b.rank_preserved);
  CHECK_FALSE(b.fixed_point);
}

TEST_CASE("rank_support_equivalence preconditions") {
  const Demo pf = phase_flip(0.3);
  const auto mixed = SubsystemDecomposition::from_isometry(testing::basis_isometry(4, {0, 1}), 1, 2);
  try {
    rank_support_equivalence(pf.channel, mixed);
    FAIL("expected PreconditionViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPreconditionViolated);
  }
  const auto ch = testing::random_channel(5, 4, 2);
  CHECK_THROWS_AS(rank_support_equivalence(ch, SubsystemDecomposition::factor(1, 4)), Error);
}
