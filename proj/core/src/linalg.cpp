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

#include "subrec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "subrec/error.hpp"

namespace subrec {
namespace {

bool is_exactly_diagonal(const ComplexMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (i != j && m(i, j) != Complex(0.0, 0.0)) return false;
    }
  }
  return true;
}

// Gram-Schmidt over e_0, e_1, ... restricted to range(proj). Each candidate
// is kept when its residual norm exceeds 0.5 / sqrt(n); some unvisited index
// always clears that bar, so `count` vectors are found in one pass.
ComplexMatrix ordered_basis_of_range(const ComplexMatrix& proj, Index count) {
  const Index n = proj.rows();
  ComplexMatrix basis(n, count);
  const double keep = 0.5 / std::sqrt(static_cast<double>(n));
  Index found = 0;
  for (Index i = 0; i < n && found < count; ++i) {
    ComplexVector v = proj.col(i);
    for (int pass = 0; pass < 2; ++pass) {
      for (Index k = 0; k < found; ++k) {
        v -= basis.col(k) * basis.col(k).dot(v);
      }
    }
    const double norm = v.norm();
    if (norm > keep) basis.col(found++) = v / norm;
  }
  if (found != count) {
    throw Error(ErrorCode::kNumericalDegeneracy,
                "could not orthonormalize complement of dimension " +
                    std::to_string(count));
  }
  return basis;
}

struct Svd {
  Eigen::VectorXd sigma;
  ComplexMatrix u;  // thin
  ComplexMatrix v;  // full when requested, thin otherwise
};

bool orthonormal_columns(const ComplexMatrix& m, double slack) {
  return (m.adjoint() * m - ComplexMatrix::Identity(m.cols(), m.cols())).norm() <= slack;
}

template <typename Solver>
Svd unpack(const Solver& svd) {
  return {svd.singularValues(), svd.matrixU(), svd.matrixV()};
}

// BDCSVD in Eigen 3.4.0 occasionally returns a wrong factorization for
// matrices with a degenerate zero singular value. Verify it and fall back
// to the slower one-sided Jacobi solver when the check fails.
Svd svd_of(const ComplexMatrix& a, bool full_v) {
  const unsigned options = Eigen::ComputeThinU | (full_v ? Eigen::ComputeFullV : Eigen::ComputeThinV);
  Svd out = unpack(Eigen::BDCSVD<ComplexMatrix>(a, options));
  const double n = static_cast<double>(std::max<Index>(1, std::max(a.rows(), a.cols())));
  const double slack = 1e-12 * n;
  const Index k = out.sigma.size();
  const ComplexMatrix rebuilt =
      out.u.leftCols(k) * out.sigma.cast<Complex>().asDiagonal() * out.v.leftCols(k).adjoint();
  const bool ok = out.u.allFinite() && out.v.allFinite() &&
                  (rebuilt - a).norm() <= slack * std::max(1.0, a.norm()) &&
                  orthonormal_columns(out.u, slack) && orthonormal_columns(out.v, slack);
  if (!ok) out = unpack(Eigen::JacobiSVD<ComplexMatrix>(a, options));
  return out;
}

}  // namespace

double Spectrum::sum() const noexcept {
  return std::accumulate(values.begin(), values.end(), 0.0);
}

Spectrum make_spectrum(std::vector<double> values) {
  std::stable_sort(values.begin(), values.end(), std::greater<>());
  return Spectrum{std::move(values)};
}

Eigensystem hermitian_eig(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "hermitian_eig needs a square matrix");
  }
  const double asym = hermiticity_residual(m);
  if (asym > tol * m.norm()) {
    throw Error(ErrorCode::kNotHermitian,
                "symmetry residual " + std::to_string(asym));
  }
  const Index n = m.rows();
  std::vector<double> raw(static_cast<std::size_t>(n));
  ComplexMatrix raw_vectors;
  if (is_exactly_diagonal(m)) {
    for (Index i = 0; i < n; ++i) raw[static_cast<std::size_t>(i)] = m(i, i).real();
    raw_vectors = ComplexMatrix::Identity(n, n);
  } else {
    const ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    // The solver returns ascending order; reverse so that ties keep the
    // solver's relative order after the stable sort below.
    for (Index i = 0; i < n; ++i) {
      raw[static_cast<std::size_t>(i)] = solver.eigenvalues()(n - 1 - i);
    }
    raw_vectors = solver.eigenvectors().rowwise().reverse();
  }
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return raw[static_cast<std::size_t>(a)] > raw[static_cast<std::size_t>(b)];
  });
  Eigensystem out;
  out.spectrum.values.resize(static_cast<std::size_t>(n));
  out.vectors.resize(n, n);
  for (Index j = 0; j < n; ++j) {
    const Index src = order[static_cast<std::size_t>(j)];
    out.spectrum.values[static_cast<std::size_t>(j)] = raw[static_cast<std::size_t>(src)];
    out.vectors.col(j) = raw_vectors.col(src);
  }
  return out;
}

Spectrum spectrum_of(const ComplexMatrix& m, double tol) {
  return hermitian_eig(m, tol).spectrum;
}

ComplexMatrix polar_isometry_on_support(const ComplexMatrix& g,
                                        const ComplexMatrix& s, double tol) {
  if (s.rows() != s.cols() || g.cols() != s.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "polar factor shape mismatch");
  }
  const ComplexMatrix s2 = s * s;
  const double mismatch = (g.adjoint() * g - s2).norm();
  if (mismatch > tol * std::max(1.0, s2.norm())) {
    throw Error(ErrorCode::kFactorMismatch,
                "||G^dag G - S^2||_F = " + std::to_string(mismatch));
  }
  const Eigensystem es = hermitian_eig(s, std::max(tol, 1e-12));
  const double top = es.spectrum.values.empty() ? 0.0 : es.spectrum.values.front();
  const double cut = tol * std::max(1.0, top);
  ComplexMatrix pinv = ComplexMatrix::Zero(s.rows(), s.cols());
  for (Index j = 0; j < s.rows(); ++j) {
    const double lambda = es.spectrum.values[static_cast<std::size_t>(j)];
    if (lambda > cut) {
      pinv += es.vectors.col(j) * (1.0 / lambda) * es.vectors.col(j).adjoint();
    }
  }
  return g * pinv;
}

ComplexMatrix complete_to_unitary(const ComplexMatrix& v, Index dim, double tol) {
  if (v.rows() != dim || v.cols() != dim) {
    throw Error(ErrorCode::kDimensionMismatch,
                "complete_to_unitary expects a " + std::to_string(dim) + "x" +
                    std::to_string(dim) + " partial isometry");
  }
  const ComplexMatrix initial = v.adjoint() * v;
  const ComplexMatrix final_space = v * v.adjoint();
  const double scale = tol * std::max(1.0, std::sqrt(static_cast<double>(dim)));
  if (projector_residual(initial) > scale || projector_residual(final_space) > scale) {
    throw Error(ErrorCode::kNotPartialIsometry,
                "V^dag V or V V^dag is not a projector");
  }
  const Index rank = static_cast<Index>(std::llround(initial.trace().real()));
  const Index missing = dim - rank;
  ComplexMatrix u = v;
  if (missing > 0) {
    const ComplexMatrix identity = ComplexMatrix::Identity(dim, dim);
    const ComplexMatrix from = ordered_basis_of_range(identity - initial, missing);
    const ComplexMatrix to = ordered_basis_of_range(identity - final_space, missing);
    u += to * from.adjoint();
  }
  return u;
}

ComplexMatrix partial_trace_b(const ComplexMatrix& m, Index d_a, Index d_b) {
  if (m.rows() != d_a * d_b || m.cols() != d_a * d_b) {
    throw Error(ErrorCode::kDimensionMismatch,
                "partial_trace_b: matrix is not (d_a*d_b) square");
  }
  ComplexMatrix out = ComplexMatrix::Zero(d_a, d_a);
  for (Index i = 0; i < d_a; ++i) {
    for (Index j = 0; j < d_a; ++j) {
      Complex acc = 0.0;
      for (Index k = 0; k < d_b; ++k) acc += m(i * d_b + k, j * d_b + k);
      out(i, j) = acc;
    }
  }
  return out;
}

ComplexMatrix partial_trace_a(const ComplexMatrix& m, Index d_a, Index d_b) {
  if (m.rows() != d_a * d_b || m.cols() != d_a * d_b) {
    throw Error(ErrorCode::kDimensionMismatch,
                "partial_trace_a: matrix is not (d_a*d_b) square");
  }
  ComplexMatrix out = ComplexMatrix::Zero(d_b, d_b);
  for (Index k = 0; k < d_a; ++k) {
    out += m.block(k * d_b, k * d_b, d_b, d_b);
  }
  return out;
}

bool majorizes(const Spectrum& q, const Spectrum& p, double tol) {
  if (q.size() != p.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "majorizes: lengths " + std::to_string(q.size()) + " and " +
                    std::to_string(p.size()));
  }
  double sum_p = 0.0;
  double sum_q = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    sum_p += p.values[k];
    sum_q += q.values[k];
    if (sum_p > sum_q + tol) return false;
  }
  return std::abs(sum_p - sum_q) <= tol;
}

Index numeric_rank(const ComplexMatrix& m, double tol) {
  if (m.size() == 0) return 0;
  const Eigen::VectorXd sigma = svd_of(m, false).sigma;
  if (sigma.size() == 0 || sigma(0) == 0.0) return 0;
  const double cut = tol * sigma(0);
  Index rank = 0;
  for (Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > cut) ++rank;
  }
  return rank;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix matrix_unit(Index rows, Index cols, Index i, Index j) {
  ComplexMatrix e = ComplexMatrix::Zero(rows, cols);
  e(i, j) = 1.0;
  return e;
}

ComplexVector vec(const ComplexMatrix& m) {
  return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

ComplexMatrix unvec(const ComplexVector& v, Index rows, Index cols) {
  if (v.size() != rows * cols) {
    throw Error(ErrorCode::kDimensionMismatch, "unvec: length mismatch");
  }
  return Eigen::Map<const ComplexMatrix>(v.data(), rows, cols);
}

ComplexMatrix null_space(const ComplexMatrix& a, double tol) {
  const Index n = a.cols();
  if (a.rows() == 0) return ComplexMatrix::Identity(n, n);
  const Svd svd = svd_of(a, true);
  const auto& sigma = svd.sigma;
  const double top = sigma.size() > 0 ? sigma(0) : 0.0;
  const double cut = tol * std::max(1.0, top);
  Index rank = 0;
  for (Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > cut) ++rank;
  }
  return svd.v.rightCols(n - rank);
}

ComplexMatrix range_basis(const ComplexMatrix& a, double tol) {
  if (a.size() == 0) return ComplexMatrix(a.rows(), 0);
  const Svd svd = svd_of(a, false);
  const auto& sigma = svd.sigma;
  if (sigma(0) == 0.0) return ComplexMatrix(a.rows(), 0);
  const double cut = tol * sigma(0);
  Index rank = 0;
  for (Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > cut) ++rank;
  }
  return svd.u.leftCols(rank);
}

double hermiticity_residual(const ComplexMatrix& m) {
  return (m - m.adjoint()).norm();
}

double unitarity_residual(const ComplexMatrix& u) {
  return (u.adjoint() * u - ComplexMatrix::Identity(u.cols(), u.cols())).norm();
}

double projector_residual(const ComplexMatrix& p) {
  return (p * p - p).norm() + (p - p.adjoint()).norm();
}

bool all_finite(const ComplexMatrix& m) {
  return m.allFinite();
}

}  // namespace subrec
