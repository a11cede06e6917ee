#pragma once

#include <vector>

namespace qfim {

// Small dense square real matrix (parameter-space objects: QFIMs, Jacobians,
// rotation matrices). Row-major, value semantics.
class RealMatrix {
 public:
  RealMatrix() = default;
  explicit RealMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {}

  static RealMatrix identity(int n);

  int size() const { return n_; }

  double& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  double at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  double max_abs() const;
  void symmetrize();  // (A + A^T) / 2

 private:
  int n_ = 0;
  std::vector<double> a_;
};

RealMatrix operator+(const RealMatrix& a, const RealMatrix& b);
RealMatrix operator-(const RealMatrix& a, const RealMatrix& b);
RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);
RealMatrix transpose(const RealMatrix& a);

// Eigenvalues of a symmetric matrix, descending (cyclic Jacobi).
std::vector<double> sym_eigenvalues_desc(const RealMatrix& a);

// Determinant of a symmetric matrix; closed form for n <= 2, eigenvalue
// product otherwise.
double sym_det(const RealMatrix& a);

}  // namespace qfim
