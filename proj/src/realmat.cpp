#include "qfim/realmat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qfim {

RealMatrix RealMatrix::identity(int n) {
  RealMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

double RealMatrix::max_abs() const {
  double v = 0.0;
  for (double x : a_) v = std::max(v, std::abs(x));
  return v;
}

void RealMatrix::symmetrize() {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      const double m = 0.5 * (at(i, j) + at(j, i));
      at(i, j) = m;
      at(j, i) = m;
    }
}

RealMatrix operator+(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix c(a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

RealMatrix operator-(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix c(a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
  return c;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix c(a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) {
      double s = 0.0;
      for (int k = 0; k < a.size(); ++k) s += a.at(i, k) * b.at(k, j);
      c.at(i, j) = s;
    }
  return c;
}

RealMatrix transpose(const RealMatrix& a) {
  RealMatrix t(a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) t.at(i, j) = a.at(j, i);
  return t;
}

std::vector<double> sym_eigenvalues_desc(const RealMatrix& input) {
  const int n = input.size();
  if (n == 0) return {};
  if (n == 1) return {input.at(0, 0)};

  RealMatrix a = input;
  a.symmetrize();

  if (n == 2) {
    const double mean = 0.5 * (a.at(0, 0) + a.at(1, 1));
    const double r = std::hypot(0.5 * (a.at(0, 0) - a.at(1, 1)), a.at(0, 1));
    return {mean + r, mean - r};
  }

  // Cyclic Jacobi sweeps.
  const double scale = std::max(a.max_abs(), 1e-300);
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a.at(p, q)));
    if (off <= 1e-15 * scale) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a.at(p, q);
        if (std::abs(apq) <= 1e-18 * scale) continue;
        const double theta = 0.5 * (a.at(q, q) - a.at(p, p)) / apq;
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a.at(k, p);
          const double akq = a.at(k, q);
          a.at(k, p) = c * akp - s * akq;
          a.at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a.at(p, k);
          const double aqk = a.at(q, k);
          a.at(p, k) = c * apk - s * aqk;
          a.at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }

  std::vector<double> vals(n);
  for (int i = 0; i < n; ++i) vals[i] = a.at(i, i);
  std::sort(vals.begin(), vals.end(), std::greater<double>());
  return vals;
}

double sym_det(const RealMatrix& a) {
  const int n = a.size();
  if (n == 0) return 1.0;
  if (n == 1) return a.at(0, 0);
  if (n == 2) return a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0);
  double d = 1.0;
  for (double v : sym_eigenvalues_desc(a)) d *= v;
  return d;
}

}  // namespace qfim
