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

#include "subrec/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>

#include "subrec/correctability.hpp"
#include "subrec/error.hpp"
#include "subrec/random.hpp"

namespace subrec {
namespace {

constexpr int kSeedAttempts = 5;
// Closure checks run on rounded SVD output, so they get more slack than
// the final certificate.
constexpr double kClosureSlack = 100.0;
// Eigenvalues closer than kMergeGap * scale are one cluster; distinct
// clusters closer than kSeparationGap * scale mean the probe was unlucky.
constexpr double kMergeGap = 1e-8;
constexpr double kSeparationGap = 1e-5;

// Hilbert-Schmidt orthonormal basis of a span of d x d matrices.
class Span {
 public:
  Span(const std::vector<ComplexMatrix>& elements, double tol) {
    dim_ = elements.front().rows();
    ComplexMatrix stacked(dim_ * dim_, static_cast<Index>(elements.size()));
    for (std::size_t i = 0; i < elements.size(); ++i) {
      const auto& e = elements[i];
      if (e.rows() != dim_ || e.cols() != dim_) {
        throw Error(ErrorCode::kDimensionMismatch, "algebra basis has mixed shapes");
      }
      stacked.col(static_cast<Index>(i)) = vec(e);
    }
    ortho_ = range_basis(stacked, tol);
  }

  Index dim() const { return dim_; }
  Index size() const { return ortho_.cols(); }
  ComplexMatrix element(Index i) const { return unvec(ortho_.col(i), dim_, dim_); }

  ComplexMatrix project(const ComplexMatrix& x) const {
    return unvec(ortho_ * (ortho_.adjoint() * vec(x)), dim_, dim_);
  }
  double distance(const ComplexMatrix& x) const { return (x - project(x)).norm(); }

  ComplexMatrix random_element(Rng& rng) const {
    ComplexVector c(size());
    for (Index i = 0; i < size(); ++i) c(i) = rng.complex_normal();
    return unvec(ortho_ * c, dim_, dim_);
  }
  ComplexMatrix random_hermitian(Rng& rng) const {
    const ComplexMatrix x = random_element(rng);
    return 0.5 * (x + x.adjoint());
  }

 private:
  Index dim_ = 0;
  ComplexMatrix ortho_;
};

struct Cluster {
  Index begin = 0;
  Index end = 0;  // exclusive
  Index size() const { return end - begin; }
};

// Groups nonincreasing eigenvalues; nullopt when two groups are too close
// to tell apart reliably.
std::optional<std::vector<Cluster>> cluster_spectrum(const Spectrum& s) {
  const auto n = static_cast<Index>(s.size());
  double scale = 0.0;
  for (double v : s.values) scale = std::max(scale, std::abs(v));
  if (n > 0) scale = std::max(scale, s.values.front() - s.values.back());
  if (scale == 0.0) scale = 1.0;
  std::vector<Cluster> out;
  Index start = 0;
  for (Index i = 1; i <= n; ++i) {
    if (i < n) {
      const double gap = s.values[static_cast<std::size_t>(i - 1)] - s.values[static_cast<std::size_t>(i)];
      if (gap <= kMergeGap * scale) continue;
      if (gap < kSeparationGap * scale) return std::nullopt;
    }
    out.push_back({start, i});
    start = i;
  }
  return out;
}

struct ProbedBlock {
  AlgebraBlock shape;
  ComplexMatrix columns;  // d x (m n), column i * n + j = |i>|j>
  Index first_support = 0;
};

Index first_support_index(const ComplexMatrix& cols) {
  for (Index i = 0; i < cols.rows(); ++i) {
    if (cols.row(i).squaredNorm() > 1e-6) return i;
  }
  return cols.rows();
}

std::optional<ProbedBlock> probe_summand(const Span& span, const ComplexMatrix& summand, Rng& rng) {
  const ComplexMatrix h = span.random_hermitian(rng);
  const Eigensystem es = hermitian_eig(summand.adjoint() * h * summand, 1e-6);
  const auto clusters = cluster_spectrum(es.spectrum);
  if (!clusters) return std::nullopt;
  const Index n = clusters->front().size();
  for (const auto& c : *clusters) {
    if (c.size() != n) return std::nullopt;
  }
  const auto m = static_cast<Index>(clusters->size());

  std::vector<ComplexMatrix> spaces;
  spaces.reserve(static_cast<std::size_t>(m));
  for (const auto& c : *clusters) spaces.push_back(summand * es.vectors.middleCols(c.begin, n));

  ProbedBlock block;
  block.shape = {m, n, 0};
  block.columns.resize(summand.rows(), m * n);
  block.columns.leftCols(n) = spaces.front();
  const ComplexMatrix link = span.random_element(rng);
  const double link_scale = link.norm();
  for (Index i = 1; i < m; ++i) {
    const ComplexMatrix& target = spaces[static_cast<std::size_t>(i)];
    const ComplexMatrix t = target.adjoint() * link * spaces.front();
    const double coupling = t.norm() / std::sqrt(static_cast<double>(n));
    if (coupling < 1e-6 * link_scale) return std::nullopt;
    block.columns.middleCols(i * n, n) = target * t / coupling;
  }
  block.first_support = first_support_index(block.columns);
  return block;
}

std::optional<AlgebraStructure> decompose_once(const Span& span, const ComplexMatrix& unit_range,
                                               const ComplexMatrix& complement,
                                               std::uint64_t seed) {
  Rng rng(seed);
  const Index d = span.dim();

  // Y = sum_i B_i R B_i^dag lies in the commutant; its projection onto the
  // algebra is central.
  const ComplexMatrix r = rng.hermitian(d);
  ComplexMatrix y = ComplexMatrix::Zero(d, d);
  for (Index i = 0; i < span.size(); ++i) {
    const ComplexMatrix b = span.element(i);
    y.noalias() += b * r * b.adjoint();
  }
  ComplexMatrix z = span.project(y);
  z = 0.5 * (z + z.adjoint());
  const Eigensystem central = hermitian_eig(unit_range.adjoint() * z * unit_range, 1e-6);
  const auto summands = cluster_spectrum(central.spectrum);
  if (!summands) return std::nullopt;

  std::vector<ProbedBlock> blocks;
  for (const auto& c : *summands) {
    const ComplexMatrix summand = unit_range * central.vectors.middleCols(c.begin, c.size());
    auto block = probe_summand(span, summand, rng);
    if (!block) return std::nullopt;
    blocks.push_back(std::move(*block));
  }
  std::stable_sort(blocks.begin(), blocks.end(), [](const ProbedBlock& a, const ProbedBlock& b) {
    if (a.first_support != b.first_support) return a.first_support < b.first_support;
    if (a.shape.m != b.shape.m) return a.shape.m > b.shape.m;
    return a.shape.n > b.shape.n;
  });

  AlgebraStructure out;
  out.seed = seed;
  out.q.resize(d, d);
  Index offset = 0;
  for (auto& b : blocks) {
    b.shape.offset = offset;
    out.q.middleCols(offset, b.columns.cols()) = b.columns;
    offset += b.columns.cols();
    out.blocks.push_back(b.shape);
  }
  out.q.rightCols(complement.cols()) = complement;
  return out;
}

}  // namespace

std::vector<ComplexMatrix> commutant(const std::vector<ComplexMatrix>& ops, Index dim, double tol) {
  const Index n = dim * dim;
  const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
  ComplexMatrix system(2 * n * static_cast<Index>(ops.size()), n);
  Index row = 0;
  for (const auto& a : ops) {
    if (a.rows() != dim || a.cols() != dim) {
      throw Error(ErrorCode::kDimensionMismatch, "commutant: operator shape mismatch");
    }
    // vec(X A - A X) = (A^T (x) I - I (x) A) vec(X)
    for (const ComplexMatrix& op : {a, ComplexMatrix(a.adjoint())}) {
      system.middleRows(row, n) = kron(op.transpose(), id) - kron(id, op);
      row += n;
    }
  }
  const ComplexMatrix kernel = null_space(system, tol);
  std::vector<ComplexMatrix> basis;
  basis.reserve(static_cast<std::size_t>(kernel.cols()));
  for (Index j = 0; j < kernel.cols(); ++j) basis.push_back(unvec(kernel.col(j), dim, dim));
  return basis;
}

double block_pattern_residual(const AlgebraStructure& s, const std::vector<ComplexMatrix>& elements) {
  double worst = 0.0;
  for (const auto& x : elements) {
    const double norm = x.norm();
    if (norm == 0.0) continue;
    const ComplexMatrix y = s.q.adjoint() * x * s.q;
    ComplexMatrix expected = ComplexMatrix::Zero(y.rows(), y.cols());
    for (const auto& b : s.blocks) {
      const Index size = b.m * b.n;
      const ComplexMatrix local = y.block(b.offset, b.offset, size, size);
      const ComplexMatrix xk = partial_trace_b(local, b.m, b.n) / static_cast<double>(b.n);
      expected.block(b.offset, b.offset, size, size) = kron(xk, ComplexMatrix::Identity(b.n, b.n));
    }
    worst = std::max(worst, (y - expected).norm() / norm);
  }
  return worst;
}

AlgebraStructure algebra_structure(const std::vector<ComplexMatrix>& basis, std::uint64_t seed,
                                   double tol) {
  if (basis.empty()) throw Error(ErrorCode::kNotAnAlgebra, "empty basis");
  const Span span(basis, tol);
  const Index d = span.dim();
  if (span.size() == 0) throw Error(ErrorCode::kNotAnAlgebra, "basis spans {0}");
  const double closure_tol = kClosureSlack * tol;

  for (Index i = 0; i < span.size(); ++i) {
    const ComplexMatrix b = span.element(i);
    if (span.distance(b.adjoint()) > closure_tol) {
      throw Error(ErrorCode::kNotAnAlgebra, "span is not closed under adjoint");
    }
  }
  {
    Rng probe(seed ^ 0x9e3779b97f4a7c15ULL);
    for (int trial = 0; trial < 3; ++trial) {
      ComplexMatrix x = span.random_element(probe);
      ComplexMatrix y = span.random_element(probe);
      const ComplexMatrix xy = (x / x.norm()) * (y / y.norm());
      if (span.distance(xy) > closure_tol * std::max(1.0, xy.norm())) {
        throw Error(ErrorCode::kNotAnAlgebra, "span is not closed under multiplication");
      }
    }
  }
  const ComplexMatrix unit = span.project(ComplexMatrix::Identity(d, d));
  if (projector_residual(unit) > closure_tol * std::sqrt(static_cast<double>(d))) {
    throw Error(ErrorCode::kNotAnAlgebra, "algebra has no projector unit");
  }
  for (Index i = 0; i < span.size(); ++i) {
    const ComplexMatrix b = span.element(i);
    if ((unit * b - b).norm() + (b * unit - b).norm() > closure_tol) {
      throw Error(ErrorCode::kNotAnAlgebra, "projection of I does not act as the unit");
    }
  }
  const Eigensystem unit_es = hermitian_eig(0.5 * (unit + unit.adjoint()), 1e-6);
  const auto rank = static_cast<Index>(std::llround(unit.trace().real()));
  const ComplexMatrix unit_range = unit_es.vectors.leftCols(rank);
  const ComplexMatrix complement = unit_es.vectors.rightCols(d - rank);

  for (int attempt = 0; attempt < kSeedAttempts; ++attempt) {
    const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(attempt);
    auto result = decompose_once(span, unit_range, complement, trial_seed);
    if (!result) continue;
    result->pattern_residual = block_pattern_residual(*result, basis);
    if (result->pattern_residual <= tol && unitarity_residual(result->q) <= tol) {
      return *result;
    }
  }
  throw Error(ErrorCode::kUnluckySeed,
              "no block decomposition certified after " + std::to_string(kSeedAttempts) +
                  " seeds starting at " + std::to_string(seed));
}

SubsystemDecomposition block_subsystem(const AlgebraStructure& s, std::size_t k, double tol) {
  const AlgebraBlock& b = s.blocks.at(k);
  // Q stores |i>_m |j>_n at offset + i * n + j; the subsystem wants A-major
  // order with A = multiplicity (n) and B = matrix factor (m).
  ComplexMatrix w(s.q.rows(), b.m * b.n);
  for (Index a = 0; a < b.n; ++a) {
    for (Index i = 0; i < b.m; ++i) w.col(a * b.m + i) = s.q.col(b.offset + i * b.n + a);
  }
  return SubsystemDecomposition::from_isometry(std::move(w), b.n, b.m, tol);
}

NoiselessReport noiseless_subsystems(const KrausChannel& ch, std::uint64_t seed, double tol) {
  if (!ch.unital() || !ch.trace_preserving()) {
    throw Error(ErrorCode::kNotUnital,
                "noiseless-subsystem search needs a unital channel (residual " +
                    std::to_string(ch.unital_residual()) + ")");
  }
  const auto fixed = fixed_point_basis(to_superoperator(ch), tol);
  NoiselessReport report{algebra_structure(fixed, seed, tol), fixed.size(), {}, {}, {}};
  for (std::size_t k = 0; k < report.structure.blocks.size(); ++k) {
    const AlgebraBlock& b = report.structure.blocks[k];
    if (b.m == 1) {
      report.classical_sectors.push_back({b.n, report.structure.q.middleCols(b.offset, b.n)});
      continue;
    }
    SubsystemDecomposition dec = block_subsystem(report.structure, k, tol);
    const NoiselessCheck check = check_noiseless(ch, dec, tol);
    if (!check.noiseless) {
      throw Error(ErrorCode::kInternalContradiction,
                  "fixed-point block " + std::to_string(k) + " fails the noiseless check (" +
                      std::to_string(check.residual) + ")");
    }
    report.subsystems.push_back(std::move(dec));
    report.residuals.push_back(check.residual);
  }
  return report;
}

}  // namespace subrec
