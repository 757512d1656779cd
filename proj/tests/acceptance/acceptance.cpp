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

// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "subrec/algebra.hpp"
#include "subrec/correctability.hpp"
#include "subrec/demos.hpp"
#include "subrec/error.hpp"
#include "subrec/random.hpp"
#include "subrec/recovery.hpp"
#include "subrec/ucc.hpp"

using namespace subrec;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

ComplexMatrix basis_isometry(Index dim, std::initializer_list<Index> columns) {
  ComplexMatrix w = ComplexMatrix::Zero(dim, static_cast<Index>(columns.size()));
  Index j = 0;
  for (Index c : columns) w(c, j++) = 1.0;
  return w;
}

double outside(const ComplexMatrix& cols, const ComplexMatrix& target) {
  const ComplexMatrix p = target * target.adjoint();
  return ((ComplexMatrix::Identity(p.rows(), p.cols()) - p) * cols).norm();
}

std::vector<ComplexMatrix> products(const std::vector<ComplexMatrix>& left,
                                    const std::vector<ComplexMatrix>& right) {
  std::vector<ComplexMatrix> out;
  for (const auto& l : left)
    for (const auto& r : right) out.push_back(l * r);
  return out;
}

// Max deviation of  maps o P_AB  from  F_A (x) id_B  on a full operator basis.
double product_form_residual(const std::vector<ComplexMatrix>& kraus,
                             const SubsystemDecomposition& dec) {
  const ComplexMatrix p = dec.projector();
  return oracle::product_form(oracle::liouville(kraus) * kron(p.conjugate(), p), dec.isometry(),
                              dec.d_a(), dec.d_b(), 0.0)
      .residual;
}

// ---------------------------------------------------------------------------

void criterion_phase_flip(Outcome& o) {
  ComplexMatrix cz = ComplexMatrix::Identity(4, 4);
  cz(3, 3) = -1.0;
  const ComplexMatrix even = basis_isometry(4, {0, 3});
  const ComplexMatrix odd = basis_isometry(4, {1, 2});
  double worst = 0.0;
  double worst_cz = 0.0;
  for (double p : {0.1, 0.3, 0.5}) {
    const Demo demo = phase_flip(p);
    const UccReport rep = find_ucc(demo.channel, 0);
    o.require(!rep.subsystems.empty(), "no UCC subspace for p=" + std::to_string(p));
    bool saw_even = false;
    for (const auto& s : rep.subsystems) {
      o.require(s.dec.d_a() * s.dec.d_b() == 2 && s.dec.d_b() == 2, "UCC block is not 2-dim");
      const bool is_even = outside(s.dec.isometry(), even) < 1e-10;
      const bool is_odd = outside(s.dec.isometry(), odd) < 1e-10;
      o.require(is_even || is_odd, "UCC block is not a Z1Z2 parity block");
      const double r = product_form_residual(products({s.u_correction}, demo.channel.kraus()), s.dec);
      worst = std::max(worst, r);
      if (is_even) {
        saw_even = true;
        const ComplexMatrix pp = s.dec.projector();
        const ComplexMatrix ours = oracle::liouville(products({s.u_correction}, products(demo.channel.kraus(), {pp})));
        const ComplexMatrix reference = oracle::liouville(products({cz}, products(demo.channel.kraus(), {pp})));
        worst_cz = std::max(worst_cz, (ours - reference).cwiseAbs().maxCoeff());
      }
    }
    o.require(saw_even, "span{|00>,|11>} not reported");
  }
  o.require(worst < 1e-8, "correction residual " + std::to_string(worst));
  o.require(worst_cz < 1e-8, "controlled-phase action differs by " + std::to_string(worst_cz));
  o.detail << "p in {0.1,0.3,0.5}; max correction residual " << worst << ", max CZ action gap "
           << worst_cz;
}

void criterion_binary_unitary(Outcome& o) {
  Rng rng(2024);
  double worst_check = 0.0;
  double worst_pup = 0.0;
  int instances = 0;
  for (int trial = 0; trial < 10; ++trial) {
    std::array<double, 4> theta{};
    // Resample until neighbouring eigenphases are well separated.
    for (;;) {
      for (auto& t : theta) t = 2.0 * std::numbers::pi * rng.uniform();
      std::sort(theta.begin(), theta.end());
      bool separated = true;
      for (int j = 0; j < 4; ++j) {
        const double gap = j < 3 ? theta[j + 1] - theta[j] : theta[0] + 2.0 * std::numbers::pi - theta[3];
        separated = separated && gap > 0.2;
      }
      if (separated) break;
    }
    const double p = 0.05 + 0.9 * rng.uniform();
    const Demo demo = binary_unitary(p, theta, 7000 + static_cast<std::uint64_t>(trial));
    const auto cert = check_correctable(demo.channel, *demo.code);
    o.require(cert.passed, "binary-unitary code fails check_correctable");
    worst_check = std::max({worst_check, cert.residual, cert.superoperator_residual});
    const ComplexMatrix pp = demo.code->projector();
    worst_pup = std::max(worst_pup, (pp * demo.unitary * pp - demo.lambda * pp).norm());
    const auto ns = noiseless_subsystems(compose(dual(demo.channel), demo.channel), 0);
    o.require(ns.subsystems.empty(), "E^dag E has a quantum noiseless block");
    o.require(ns.classical_sectors.size() == 4,
              "expected 4 classical sectors, got " + std::to_string(ns.classical_sectors.size()));
    ++instances;
  }
  o.require(worst_check < 1e-9, "check residual " + std::to_string(worst_check));
  o.require(worst_pup < 1e-9, "PUP - lambda P = " + std::to_string(worst_pup));
  o.detail << instances << " seeded (theta, p); max check residual " << worst_check
           << ", max ||PUP - lambda P|| " << worst_pup << "; 0 quantum blocks, 4 classical sectors";
}

struct Planted {
  Demo demo;
  Index d_a, d_b, dim;
};

std::vector<Planted> planted_instances() {
  const Index shapes[][3] = {{1, 2, 4}, {2, 2, 4}, {1, 2, 6}, {2, 2, 8}, {1, 4, 8}};
  std::vector<Planted> out;
  for (int i = 0; i < 200; ++i) {
    const auto& s = shapes[i % 5];
    DemoSpec spec;
    spec.kind = DemoKind::kPlanted;
    spec.seed = 10000 + static_cast<std::uint64_t>(i);
    spec.d_a = s[0];
    spec.d_b = s[1];
    spec.dim = s[2];
    spec.noise_kraus = 1 + i % 3;
    spec.unital = (i / 5) % 2 == 0;
    out.push_back({planted(spec), s[0], s[1], s[2]});
  }
  return out;
}

// B-marginal fidelity after `rounds` of noise followed by correction.
double fidelity_gap(const KrausChannel& noise, const KrausChannel& correction,
                    const SubsystemDecomposition& dec, Rng& rng, int rounds) {
  const ComplexVector a = rng.pure_state(dec.d_a());
  const ComplexVector b = rng.pure_state(dec.d_b());
  ComplexMatrix state = embed_product(dec, a * a.adjoint(), b * b.adjoint());
  for (int r = 0; r < rounds; ++r) state = oracle::apply(correction.kraus(), oracle::apply(noise.kraus(), state));
  const ComplexMatrix marginal = oracle::b_marginal(state, dec.isometry(), dec.d_a(), dec.d_b());
  const double fidelity = (b.adjoint() * marginal * b)(0, 0).real();
  return std::abs(1.0 - fidelity);
}

void criterion_round_trip(Outcome& o, const std::vector<Planted>& instances) {
  Rng rng(31337);
  double worst_rec = 0.0, worst_eq = 0.0, worst_fid = 0.0, worst_fid2 = 0.0;
  for (const auto& inst : instances) {
    const auto& dec = *inst.demo.code;
    const auto cert = check_correctable(inst.demo.channel, dec);
    o.require(cert.passed, "planted instance fails check_correctable");
    if (!cert.passed) continue;
    const RecoveryResult res = construct_recovery(inst.demo.channel, dec, cert);
    worst_rec = std::max(worst_rec, res.residual);
    const KrausChannel correction = recovery_to_correction(res, dec);
    worst_eq = std::max(worst_eq, product_form_residual(products(correction.kraus(), inst.demo.channel.kraus()), dec));
    worst_fid = std::max(worst_fid, fidelity_gap(inst.demo.channel, correction, dec, rng, 1));
    worst_fid2 = std::max(worst_fid2, fidelity_gap(inst.demo.channel, correction, dec, rng, 2));
  }
  o.require(worst_rec < 1e-8, "recovery residual " + std::to_string(worst_rec));
  o.require(worst_eq < 1e-8, "R o E o P_AB deviates by " + std::to_string(worst_eq));
  o.require(worst_fid < 1e-8, "B fidelity gap " + std::to_string(worst_fid));
  o.require(worst_fid2 < 1e-8, "B fidelity gap after two rounds " + std::to_string(worst_fid2));
  o.detail << instances.size() << " planted instances; max recovery residual " << worst_rec
           << ", max (R o E o P - F (x) id) " << worst_eq << ", fidelity gap " << worst_fid
           << " / " << worst_fid2 << " (1 / 2 rounds)";
}

void criterion_testable_condition(Outcome& o, const std::vector<Planted>& instances) {
  int disagreements = 0, passed = 0, generic_passed = 0;
  for (const auto& inst : instances) {
    const auto& dec = *inst.demo.code;
    const bool ours = check_correctable(inst.demo.channel, dec).passed;
    const bool oracle_says = oracle::superoperator_condition(inst.demo.channel.kraus(), dec.isometry(),
                                                             dec.d_a(), dec.d_b(), 1e-9);
    disagreements += ours != oracle_says;
    passed += ours;
  }
  Rng rng(4242);
  for (int i = 0; i < 200; ++i) {
    const auto& shape = instances[static_cast<std::size_t>(i)];
    const KrausChannel ch =
        KrausChannel::from_kraus(rng.channel_kraus(shape.dim, rng.uniform_index(2, 4)));
    const auto dec = SubsystemDecomposition::from_isometry(rng.isometry(shape.dim, shape.d_a * shape.d_b),
                                                           shape.d_a, shape.d_b);
    const bool ours = check_correctable(ch, dec).passed;
    const bool oracle_says =
        oracle::superoperator_condition(ch.kraus(), dec.isometry(), dec.d_a(), dec.d_b(), 1e-9);
    disagreements += ours != oracle_says;
    generic_passed += ours;
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  o.require(passed == static_cast<int>(instances.size()), "not every planted instance passed");
  o.require(generic_passed == 0, "a generic channel passed");
  o.detail << instances.size() << " planted (" << passed << " pass) + 200 generic (" << generic_passed
           << " pass); " << disagreements << " disagreements with the superoperator oracle";
}

void criterion_lemmas(Outcome& o) {
  Rng rng(555);
  int violations = 0, saturated = 0, fixed = 0, triples = 0;
  auto violate = [&](const std::string& what) {
    ++violations;
    o.fail(what);
  };
  for (int i = 0; i < 100; ++i) {
    const Index d = rng.uniform_index(2, 8);
    const ComplexMatrix p = rng.projector(d, rng.uniform_index(1, d - 1));
    std::vector<ComplexMatrix> kraus;
    const int kind = i % 4;
    if (kind == 0 || kind == 1) {
      kraus = rng.unital_kraus(d, rng.uniform_index(1, 4));
    } else {
      // Unital noise that commutes with P: independent mixtures of unitaries
      // on range(P) and its complement, or a unitary mixture on each.
      const Index r = static_cast<Index>(std::llround(p.trace().real()));
      const Eigensystem es = hermitian_eig(p, 1e-9);
      const ComplexMatrix basis = es.vectors;
      const Index count = rng.uniform_index(1, 3);
      const auto top = rng.unital_kraus(r, count);
      const auto bottom = rng.unital_kraus(d - r, count);
      for (Index k = 0; k < count; ++k) {
        ComplexMatrix blk = ComplexMatrix::Zero(d, d);
        blk.topLeftCorner(r, r) = top[static_cast<std::size_t>(k)];
        blk.bottomRightCorner(d - r, d - r) = bottom[static_cast<std::size_t>(k)];
        kraus.push_back(basis * blk * basis.adjoint());
      }
      if (kind == 3) {
        // compose with a unitary that does not preserve P
        const ComplexMatrix u = rng.unitary(d);
        for (auto& k : kraus) k = u * k;
      }
    }
    const KrausChannel ch = KrausChannel::from_kraus(kraus);
    if (!ch.unital()) violate("generated channel is not unital");
    const KrausChannel back = dual(ch);

    const ComplexMatrix rho = rng.density(d);
    if (!majorizes(spectrum_of(rho), spectrum_of(subrec::apply(ch, rho)), 1e-10)) violate("majorization");

    const ComplexMatrix ep = subrec::apply(ch, p);
    const Index rank_p = numeric_rank(p, 1e-9);
    const Index rank_ep = numeric_rank(ep, 1e-9);
    if (rank_ep < rank_p) violate("rank(E(P)) < rank(P)");
    if (rank_ep == rank_p) {
      ++saturated;
      if ((ep * ep - ep).norm() >= 1e-8) violate("saturated rank but E(P) not a projector");
    }
    const bool forward = (ep - p).norm() < 1e-9;
    const bool backward = (subrec::apply(back, p) - p).norm() < 1e-9;
    if (forward != backward) violate("E(P)=P and E^dag(P)=P disagree");
    fixed += forward;
  }

  // Correctable subsystems of unital channels.
  auto triple = [&](const KrausChannel& ch, const SubsystemDecomposition& dec) {
    const RankSupport r = rank_support_equivalence(ch, dec);
    ++triples;
    if (r.support_contained != r.rank_preserved || r.rank_preserved != r.fixed_point) {
      violate("rank/support conditions disagree");
    }
  };
  for (int i = 0; i < 40; ++i) {
    DemoSpec spec;
    spec.kind = DemoKind::kPlanted;
    spec.seed = 50000 + static_cast<std::uint64_t>(i);
    spec.d_a = 1 + i % 2;
    spec.d_b = 2;
    spec.dim = spec.d_a * spec.d_b + i % 3;
    spec.noise_kraus = 1 + i % 3;
    spec.unital = true;
    const Demo demo = planted(spec);
    triple(demo.channel, *demo.code);
  }
  for (double p : {0.1, 0.3, 0.5}) {
    const Demo pf = phase_flip(p);
    triple(pf.channel, *pf.code);
  }
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Demo bu = binary_unitary(0.4, {0.3, 1.2, 2.5, 4.0}, seed);
    triple(bu.channel, *bu.code);
  }
  o.detail << "100 unital channels (" << saturated << " rank-saturated, " << fixed << " with E(P)=P), "
           << triples << " correctable codes; " << violations << " violations";
}

std::vector<std::pair<long, long>> random_pattern(Rng& rng) {
  std::vector<std::pair<long, long>> blocks;
  long used = 0;
  const Index count = rng.uniform_index(1, 4);
  for (Index k = 0; k < count; ++k) {
    const long m = rng.uniform_index(1, 4);
    const long n = rng.uniform_index(1, 3);
    if (used + m * n > 12) continue;
    blocks.emplace_back(m, n);
    used += m * n;
  }
  if (blocks.empty()) blocks.emplace_back(2, 1);
  return blocks;
}

void criterion_algebra(Outcome& o) {
  Rng rng(777);
  double worst = 0.0;
  int exact = 0;
  for (int i = 0; i < 50; ++i) {
    const auto pattern = random_pattern(rng);
    Index used = 0;
    for (const auto& [m, n] : pattern) used += m * n;
    const Index dim = std::min<Index>(used + rng.uniform_index(0, 2), std::max<Index>(used, 12));
    const ComplexMatrix r = rng.unitary(dim);
    std::vector<ComplexMatrix> basis;
    Index offset = 0;
    for (const auto& [m, n] : pattern) {
      for (Index a = 0; a < m; ++a)
        for (Index b = 0; b < m; ++b) {
          ComplexMatrix x = ComplexMatrix::Zero(dim, dim);
          x.block(offset, offset, m * n, m * n) = kron(matrix_unit(m, m, a, b), ComplexMatrix::Identity(n, n));
          basis.push_back(r * x * r.adjoint());
        }
      offset += m * n;
    }
    // Remix the basis with a random invertible matrix.
    const ComplexMatrix mix = rng.ginibre(static_cast<Index>(basis.size()), static_cast<Index>(basis.size()));
    std::vector<ComplexMatrix> mixed(basis.size(), ComplexMatrix::Zero(dim, dim));
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = 0; b < basis.size(); ++b)
        mixed[a] += mix(static_cast<Index>(a), static_cast<Index>(b)) * basis[b];

    try {
      const AlgebraStructure s = algebra_structure(mixed, static_cast<std::uint64_t>(i));
      std::vector<std::pair<long, long>> got;
      for (const auto& b : s.blocks) got.emplace_back(b.m, b.n);
      const bool same = oracle::sorted_pairs(got) == oracle::sorted_pairs(pattern);
      o.require(same, "block multiset mismatch in instance " + std::to_string(i));
      exact += same;
      worst = std::max(worst, block_pattern_residual(s, basis));
    } catch (const Error& e) {
      o.fail(std::string("instance ") + std::to_string(i) + ": " + e.what());
    }
  }
  o.require(worst < 1e-9, "pattern residual " + std::to_string(worst));
  o.detail << "50 conjugated, remixed algebras; " << exact << " exact multisets, max pattern residual " << worst;
}

void criterion_swap(Outcome& o) {
  const Demo demo = swap_demo();
  const auto cert = check_correctable(demo.channel, *demo.code);
  o.require(cert.passed, "swap fails check_correctable");
  const RecoveryResult res = construct_recovery(demo.channel, *demo.code, cert);
  const ComplexMatrix inverse = demo.channel[0].adjoint();
  const double gap =
      (oracle::liouville({res.u_recovery}) - oracle::liouville({inverse})).cwiseAbs().maxCoeff();
  o.require(gap < 1e-10, "recovery action differs from swap^-1 by " + std::to_string(gap));
  const auto ns = noiseless_subsystems(compose(demo.channel, demo.channel), 0);
  o.require(ns.subsystems.size() == 1 && ns.subsystems[0].d_b() == 4 && ns.subsystems[0].d_a() == 1,
            "swap o swap is not fully noiseless");
  o.detail << "recovery vs swap^-1 action gap " << gap << "; ns(swap o swap): "
           << ns.subsystems.size() << " block with dB = "
           << (ns.subsystems.empty() ? 0 : ns.subsystems[0].d_b());
}

}  // namespace

int main() {
  std::vector<Planted> planted_set;
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "phase-flip reproduction", criterion_phase_flip},
      {2, "binary-unitary reproduction", criterion_binary_unitary},
      {3, "correctable round trip on planted channels",
       [&](Outcome& o) {
         planted_set = planted_instances();
         criterion_round_trip(o, planted_set);
       }},
      {4, "testable condition vs superoperator oracle",
       [&](Outcome& o) { criterion_testable_condition(o, planted_set); }},
      {5, "unital channel lemmas", criterion_lemmas},
      {6, "algebra structure round trip", criterion_algebra},
      {7, "swap example", criterion_swap},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d: %s (%.2fs) -- %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.str().c_str());
    failures += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
