#include "groupcg/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>

#include "groupcg/error.hpp"

namespace groupcg {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::operator*(const CMatrix& rhs) const {
  if (cols_ != rhs.rows_) fail("ShapeMismatch", "matrix product dimensions");
  CMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const cplx aik = (*this)(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += aik * rhs(k, j);
    }
  return out;
}

CMatrix CMatrix::operator+(const CMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    fail("ShapeMismatch", "matrix sum dimensions");
  CMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
  return out;
}

CMatrix CMatrix::operator-(const CMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    fail("ShapeMismatch", "matrix difference dimensions");
  CMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
  return out;
}

CMatrix CMatrix::operator*(cplx scalar) const {
  CMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * scalar;
  return out;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

CMatrix CMatrix::conjugate() const {
  CMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = std::conj(a_[i]);
  return out;
}

CMatrix CMatrix::transpose() const {
  CMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

cplx CMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& z : a_) m = std::max(m, std::abs(z));
  return m;
}

bool CMatrix::all_finite() const {
  return std::all_of(a_.begin(), a_.end(), [](const cplx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    fail("ShapeMismatch", "max_abs_diff dimensions");
  double m = 0.0;
  for (std::size_t i = 0; i < a.a_.size(); ++i)
    m = std::max(m, std::abs(a.a_[i] - b.a_[i]));
  return m;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{}) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  return out;
}

bool is_unitary(const CMatrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols()) fail("ShapeMismatch", "is_unitary needs a square matrix");
  return max_abs_diff(m.adjoint() * m, CMatrix::identity(m.rows())) <= tol.eq_tol;
}

namespace {

double off_diagonal_max(const CMatrix& a) {
  double off = 0.0;
  for (std::size_t p = 0; p + 1 < a.rows(); ++p)
    for (std::size_t q = p + 1; q < a.cols(); ++q)
      off = std::max(off, std::abs(a(p, q)));
  return off;
}

// One cyclic sweep of complex Jacobi rotations on the Hermitian matrix a,
// accumulating the rotations into v.
void jacobi_sweep(CMatrix& a, CMatrix& v, double threshold) {
  const std::size_t n = a.rows();
  for (std::size_t p = 0; p + 1 < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const cplx apq = a(p, q);
      const double r = std::abs(apq);
      if (r <= threshold) continue;
      const cplx phase = apq / r;
      const double app = a(p, p).real();
      const double aqq = a(q, q).real();
      const double theta = (aqq - app) / (2.0 * r);
      double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
      if (theta < 0.0) t = -t;
      const double c = 1.0 / std::sqrt(t * t + 1.0);
      const double s = t * c;
      const cplx sp = s * phase;            // G(p,q)
      const cplx spc = s * std::conj(phase);  // -G(q,p)

      // A <- A G
      for (std::size_t j = 0; j < n; ++j) {
        const cplx ajp = a(j, p), ajq = a(j, q);
        a(j, p) = c * ajp - spc * ajq;
        a(j, q) = sp * ajp + c * ajq;
      }
      // A <- G^+ A
      for (std::size_t j = 0; j < n; ++j) {
        const cplx apj = a(p, j), aqj = a(q, j);
        a(p, j) = c * apj - sp * aqj;
        a(q, j) = spc * apj + c * aqj;
      }
      a(p, q) = 0.0;
      a(q, p) = 0.0;
      a(p, p) = a(p, p).real();
      a(q, q) = a(q, q).real();
      // V <- V G
      for (std::size_t j = 0; j < n; ++j) {
        const cplx vjp = v(j, p), vjq = v(j, q);
        v(j, p) = c * vjp - spc * vjq;
        v(j, q) = sp * vjp + c * vjq;
      }
    }
  }
}

// Modified Gram-Schmidt over a contiguous column range of v.
void reorthonormalize_columns(CMatrix& v, std::size_t first, std::size_t last) {
  const std::size_t n = v.rows();
  for (std::size_t c = first; c < last; ++c) {
    for (std::size_t prev = first; prev < c; ++prev) {
      cplx proj = 0.0;
      for (std::size_t i = 0; i < n; ++i) proj += std::conj(v(i, prev)) * v(i, c);
      for (std::size_t i = 0; i < n; ++i) v(i, c) -= proj * v(i, prev);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(v(i, c));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) v(i, c) /= norm;
  }
}

}  // namespace

EigResult hermitian_eig(const CMatrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols())
    fail("NotHermitian", "matrix is not square");
  const std::size_t n = m.rows();
  const double dev = max_abs_diff(m, m.adjoint());
  if (dev > 1e3 * tol.eq_tol)
    fail("NotHermitian", "max |m - m^+| = " + std::to_string(dev));

  CMatrix a = (m + m.adjoint()) * cplx(0.5);
  CMatrix v = CMatrix::identity(n);
  const double scale = std::max(1.0, a.max_abs());
  const double target = 1e-15 * scale;
  const int sweep_budget = 100;

  bool converged = (n <= 1);
  for (int sweep = 0; sweep < sweep_budget && !converged; ++sweep) {
    jacobi_sweep(a, v, target);
    converged = off_diagonal_max(a) <= target;
  }
  if (!converged)
    fail("NoConvergence", "Jacobi sweep budget exhausted at n = " + std::to_string(n));

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  EigResult out;
  out.values.resize(n);
  out.vectors = CMatrix(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    out.values[c] = a(perm[c], perm[c]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, c) = v(i, perm[c]);
  }

  // Re-orthonormalize within clusters of nearly equal eigenvalues.
  std::size_t start = 0;
  for (std::size_t c = 1; c <= n; ++c) {
    if (c == n || out.values[start] - out.values[c] > tol.eig_zero_tol) {
      if (c - start > 1) reorthonormalize_columns(out.vectors, start, c);
      start = c;
    }
  }
  return out;
}

namespace {

std::vector<SnapCandidate> build_snap_candidates() {
  using std::numbers::pi;
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<SnapCandidate> out = {
      {"0", {0.0, 0.0}},
      {"1", {1.0, 0.0}},
      {"-1", {-1.0, 0.0}},
      {"i", {0.0, 1.0}},
      {"-i", {0.0, -1.0}},
      {"1/2", {0.5, 0.0}},
      {"-1/2", {-0.5, 0.0}},
      {"i/2", {0.0, 0.5}},
      {"-i/2", {0.0, -0.5}},
      {"1/√2", {s, 0.0}},
      {"-1/√2", {-s, 0.0}},
      {"i/√2", {0.0, s}},
      {"-i/√2", {0.0, -s}},
      {"(1+i)/2", {0.5, 0.5}},
      {"(1-i)/2", {0.5, -0.5}},
      {"(-1+i)/2", {-0.5, 0.5}},
      {"(-1-i)/2", {-0.5, -0.5}},
  };
  auto add = [&out](std::string label, cplx value) {
    for (const SnapCandidate& c : out)
      if (std::abs(c.value - value) < 1e-12) return;
    out.push_back({std::move(label), value});
  };
  auto power_label = [](const char* base, int k) {
    return k == 1 ? std::string(base) : std::string(base) + "^" + std::to_string(k);
  };
  for (int k = 0; k < 16; ++k) {
    const cplx e8 = std::polar(1.0, 2.0 * pi * (k % 8) / 8.0);
    const cplx e16 = std::polar(1.0, 2.0 * pi * k / 16.0);
    add(power_label("e8", k % 8), e8);
    add(power_label("e16", k), e16);
    add(power_label("e8", k % 8) + "/√2", e8 * s);
  }
  return out;
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace

const std::vector<SnapCandidate>& snap_candidates() {
  static const std::vector<SnapCandidate> table = build_snap_candidates();
  return table;
}

std::string snap(cplx z, const Tolerances& tol) {
  for (const SnapCandidate& c : snap_candidates())
    if (std::abs(z - c.value) <= tol.eq_tol) return c.label;
  std::string body;
  if (std::abs(z.imag()) <= tol.eq_tol) {
    body = format_real(z.real());
  } else if (std::abs(z.real()) <= tol.eq_tol) {
    body = format_real(z.imag()) + "i";
  } else {
    body = format_real(z.real()) + (z.imag() < 0 ? "" : "+") +
           format_real(z.imag()) + "i";
  }
  return "numeric(" + body + ")";
}

}  // namespace groupcg
