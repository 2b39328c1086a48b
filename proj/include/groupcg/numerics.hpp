#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace groupcg {

using cplx = std::complex<double>;

struct Tolerances {
  double eq_tol = 1e-10;       // entrywise equality
  double eig_zero_tol = 1e-8;  // zero / nonzero eigenvalue split
};

// Dense complex matrix, row-major.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  CMatrix operator*(const CMatrix& rhs) const;
  CMatrix operator+(const CMatrix& rhs) const;
  CMatrix operator-(const CMatrix& rhs) const;
  CMatrix operator*(cplx scalar) const;
  CMatrix operator-() const { return *this * cplx(-1.0); }

  CMatrix adjoint() const;
  CMatrix conjugate() const;
  CMatrix transpose() const;
  cplx trace() const;

  double max_abs() const;
  bool all_finite() const;

  // largest |a_ij - b_ij|; matrices must agree in shape
  friend double max_abs_diff(const CMatrix& a, const CMatrix& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cplx> a_;
};

inline CMatrix operator*(cplx scalar, const CMatrix& m) { return m * scalar; }

CMatrix kron(const CMatrix& a, const CMatrix& b);

bool is_unitary(const CMatrix& m, const Tolerances& tol = {});

struct EigResult {
  std::vector<double> values;  // descending
  CMatrix vectors;             // orthonormal columns, vectors.col(i) <-> values[i]
};

// Cyclic Jacobi for Hermitian matrices (complex Givens rotations).
// Symmetrizes (m + m^+)/2 first; throws NotHermitian when the input is too
// far from Hermitian and NoConvergence when the sweep budget is exhausted.
EigResult hermitian_eig(const CMatrix& m, const Tolerances& tol = {});

// Symbolic display snapping.
struct SnapCandidate {
  std::string label;
  cplx value;
};

const std::vector<SnapCandidate>& snap_candidates();

// Label of the nearest candidate within eq_tol, else "numeric(<value>)".
std::string snap(cplx z, const Tolerances& tol = {});

}  // namespace groupcg
