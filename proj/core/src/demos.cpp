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

#include "subrec/demos.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "subrec/error.hpp"
#include "subrec/random.hpp"

namespace subrec {
namespace {

void require_probability(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw Error(ErrorCode::kBadParams, "p must lie strictly between 0 and 1");
  }
}

ComplexMatrix pauli_z() {
  ComplexMatrix z = ComplexMatrix::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  return z;
}

}  // namespace

std::string_view to_string(DemoKind kind) {
  switch (kind) {
    case DemoKind::kPhaseFlip: return "phase-flip";
    case DemoKind::kBinaryUnitary: return "binary-unitary";
    case DemoKind::kSwap: return "swap";
    case DemoKind::kPlanted: return "planted";
  }
  return "unknown";
}

DemoKind demo_kind_from_string(std::string_view name) {
  for (DemoKind k : {DemoKind::kPhaseFlip, DemoKind::kBinaryUnitary, DemoKind::kSwap,
                     DemoKind::kPlanted}) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorCode::kBadParams, "unknown demo '" + std::string(name) + "'");
}

Demo phase_flip(double p, double tol) {
  require_probability(p);
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix z = pauli_z();
  Demo demo{KrausChannel::from_kraus({std::sqrt(p) * kron(z, id), std::sqrt(1.0 - p) * kron(id, z)},
                                     tol),
            std::nullopt, {}, {}, 0.0, 0.0, {}, {}};
  ComplexMatrix w = ComplexMatrix::Zero(4, 2);
  w(0, 0) = 1.0;
  w(3, 1) = 1.0;
  demo.code = SubsystemDecomposition::from_isometry(std::move(w), 1, 2, tol);
  return demo;
}

Demo binary_unitary(double p, const std::array<double, 4>& theta, std::uint64_t seed,
                    double tol) {
  require_probability(p);
  if (!(theta[0] >= 0.0 && theta[0] < theta[1] && theta[1] < theta[2] && theta[2] < theta[3] &&
        theta[3] < 2.0 * std::numbers::pi)) {
    throw Error(ErrorCode::kBadParams, "need 0 <= theta1 < theta2 < theta3 < theta4 < 2 pi");
  }
  std::array<Complex, 4> l;
  for (std::size_t j = 0; j < 4; ++j) l[j] = std::polar(1.0, theta[j]);

  // s (l1 - l3) + t (l4 - l2) = l4 - l3, split into real and imaginary rows.
  const Complex c1 = l[0] - l[2];
  const Complex c2 = l[3] - l[1];
  const Complex rhs = l[3] - l[2];
  Eigen::Matrix2d a;
  a << c1.real(), c2.real(), c1.imag(), c2.imag();
  const Eigen::Vector2d st = a.colPivHouseholderQr().solve(Eigen::Vector2d(rhs.real(), rhs.imag()));
  const double s = st(0);
  const double t = st(1);
  if (!(s > 0.0 && s < 1.0 && t > 0.0 && t < 1.0) || !std::isfinite(s) || !std::isfinite(t)) {
    throw Error(ErrorCode::kBadParams, "chords [l1, l3] and [l2, l4] do not cross");
  }

  Rng rng(seed);
  const ComplexMatrix r = rng.unitary(4);
  ComplexVector phases(4);
  for (Index j = 0; j < 4; ++j) phases(j) = l[static_cast<std::size_t>(j)];
  const ComplexMatrix u = r * phases.asDiagonal() * r.adjoint();

  ComplexMatrix w(4, 2);
  w.col(0) = std::sqrt(s) * r.col(0) + std::sqrt(1.0 - s) * r.col(2);
  w.col(1) = std::sqrt(t) * r.col(1) + std::sqrt(1.0 - t) * r.col(3);

  Demo demo{KrausChannel::from_kraus(
                {std::sqrt(p) * ComplexMatrix::Identity(4, 4), std::sqrt(1.0 - p) * u}, tol),
            SubsystemDecomposition::from_isometry(std::move(w), 1, 2, tol),
            u,
            s * l[0] + (1.0 - s) * l[2],
            s,
            t,
            {},
            {}};
  return demo;
}

Demo swap_demo() {
  ComplexMatrix swap = ComplexMatrix::Zero(4, 4);
  for (Index i = 0; i < 2; ++i) {
    for (Index j = 0; j < 2; ++j) swap(j * 2 + i, i * 2 + j) = 1.0;
  }
  return Demo{unitary_channel(swap), SubsystemDecomposition::factor(2, 2), {}, {}, 0.0, 0.0, {}, {}};
}

Demo planted(const DemoSpec& spec, double tol) {
  const Index dab = spec.d_a * spec.d_b;
  if (spec.d_a < 1 || spec.d_b < 1 || spec.noise_kraus < 1 || dab > spec.dim) {
    throw Error(ErrorCode::kBadParams, "planted demo needs 1 <= d_A d_B <= dim and kraus >= 1");
  }
  Rng rng(spec.seed);
  const ComplexMatrix frame = rng.unitary(spec.dim);
  const ComplexMatrix w = frame.leftCols(dab);
  const ComplexMatrix w_perp = frame.rightCols(spec.dim - dab);
  const std::vector<ComplexMatrix> noise = spec.unital ? rng.unital_kraus(spec.d_a, spec.noise_kraus)
                                                       : rng.channel_kraus(spec.d_a, spec.noise_kraus);
  const ComplexMatrix u0 = rng.unitary(spec.dim);
  const ComplexMatrix id_b = ComplexMatrix::Identity(spec.d_b, spec.d_b);

  std::vector<ComplexMatrix> kraus;
  for (const auto& k : noise) kraus.push_back(u0 * w * kron(k, id_b) * w.adjoint());
  if (w_perp.cols() > 0) {
    const Index rest = w_perp.cols();
    if (spec.unital) {
      for (const auto& k : rng.unital_kraus(rest, spec.noise_kraus)) {
        kraus.push_back(u0 * w_perp * k * w_perp.adjoint());
      }
    } else {
      for (const auto& k : rng.channel_kraus(spec.dim, spec.noise_kraus)) {
        kraus.push_back(k * w_perp * w_perp.adjoint());
      }
    }
  }

  Demo demo{KrausChannel::from_kraus(std::move(kraus), tol),
            SubsystemDecomposition::from_isometry(w, spec.d_a, spec.d_b, tol),
            {},
            {},
            0.0,
            0.0,
            u0,
            noise};
  return demo;
}

Demo demo_build(const DemoSpec& spec, double tol) {
  switch (spec.kind) {
    case DemoKind::kPhaseFlip: return phase_flip(spec.p, tol);
    case DemoKind::kBinaryUnitary: return binary_unitary(spec.p, spec.theta, spec.seed, tol);
    case DemoKind::kSwap: return swap_demo();
    case DemoKind::kPlanted: return planted(spec, tol);
  }
  throw Error(ErrorCode::kBadParams, "unknown demo kind");
}

}  // namespace subrec
