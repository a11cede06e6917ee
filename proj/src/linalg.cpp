#include "qfim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <sstream>

#include "qfim/errors.hpp"

namespace qfim {

bool is_finite(double x) { return std::isfinite(x); }

bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

Hermitian2::Hermitian2(double a11, double a22, Complex a12)
    : a11_(a11), a22_(a22), a12_(a12) {
  if (!is_finite(a11_) || !is_finite(a22_) || !is_finite(a12_)) {
    throw DomainError("Hermitian2: non-finite entry");
  }
}

Hermitian2 Hermitian2::identity() { return Hermitian2(1.0, 1.0, {0.0, 0.0}); }

double Hermitian2::det() const { return a11_ * a22_ - std::norm(a12_); }

double Hermitian2::min_eigenvalue() const {
  const double mean = 0.5 * (a11_ + a22_);
  const double r = std::hypot(0.5 * (a11_ - a22_), std::abs(a12_));
  return mean - r;
}

double Hermitian2::max_eigenvalue() const {
  const double mean = 0.5 * (a11_ + a22_);
  const double r = std::hypot(0.5 * (a11_ - a22_), std::abs(a12_));
  return mean + r;
}

double Hermitian2::max_abs() const {
  return std::max({std::abs(a11_), std::abs(a22_), std::abs(a12_)});
}

Hermitian2& Hermitian2::operator+=(const Hermitian2& o) {
  a11_ += o.a11_;
  a22_ += o.a22_;
  a12_ += o.a12_;
  return *this;
}

Hermitian2& Hermitian2::operator-=(const Hermitian2& o) {
  a11_ -= o.a11_;
  a22_ -= o.a22_;
  a12_ -= o.a12_;
  return *this;
}

Hermitian2& Hermitian2::operator*=(double s) {
  a11_ *= s;
  a22_ *= s;
  a12_ *= s;
  return *this;
}

Hermitian2 operator+(Hermitian2 a, const Hermitian2& b) { return a += b; }
Hermitian2 operator-(Hermitian2 a, const Hermitian2& b) { return a -= b; }
Hermitian2 operator*(double s, Hermitian2 a) { return a *= s; }

BlochVector::BlochVector(double w1, double w2, double w3)
    : w1_(w1), w2_(w2), w3_(w3) {
  if (!is_finite(w1_) || !is_finite(w2_) || !is_finite(w3_)) {
    throw DomainError("BlochVector: non-finite component");
  }
  const double n = norm();
  if (n > 1.0 + kBlochNormTol) {
    std::ostringstream msg;
    msg << "BlochVector: unphysical norm |W| = " << n << " > 1";
    throw DomainError(msg.str());
  }
}

double BlochVector::norm() const {
  return std::sqrt(w1_ * w1_ + w2_ * w2_ + w3_ * w3_);
}

DensityMatrix::DensityMatrix(const Hermitian2& m) : m_(m) {
  const double tr = m_.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    std::ostringstream msg;
    msg << "DensityMatrix: trace " << tr << " differs from 1 beyond tolerance";
    throw DomainError(msg.str());
  }
  const double lo = m_.min_eigenvalue();
  if (lo < -kPsdTol) {
    std::ostringstream msg;
    msg << "DensityMatrix: negative eigenvalue " << lo;
    throw DomainError(msg.str());
  }
}

DensityMatrix DensityMatrix::maximally_mixed() {
  return DensityMatrix(Hermitian2(0.5, 0.5, {0.0, 0.0}));
}

bool same_entries(const Hermitian2& a, const Hermitian2& b) {
  return std::memcmp(&a, &b, sizeof(Hermitian2)) == 0;
}

namespace {

// Multiplies v by the phase that makes its gauge pivot real nonnegative.
void gauge_fix(std::array<Complex, 2>& v) {
  const int pivot = std::abs(v[0]) > kGaugePivotTol ? 0 : 1;
  const double mod = std::abs(v[pivot]);
  if (mod == 0.0) return;  // zero vector cannot arise from a unit eigenvector
  const Complex phase = std::conj(v[pivot]) / mod;
  v[0] *= phase;
  v[1] *= phase;
  v[pivot] = Complex(std::abs(v[pivot]), 0.0);  // kill rounding in the pivot
}

void normalize(std::array<Complex, 2>& v) {
  const double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
  v[0] /= n;
  v[1] /= n;
}

}  // namespace

EigenPair2 eig_hermitian_2x2(const Hermitian2& h) {
  EigenPair2 out;
  const double mean = 0.5 * (h.a11() + h.a22());
  const double d = 0.5 * (h.a11() - h.a22());
  const Complex c = h.a12();
  const double r = std::hypot(d, std::abs(c));

  out.values = {mean - r, mean + r};
  out.gap = 2.0 * r;
  out.degenerate = out.gap < kDegenerateGap;

  if (r == 0.0) {
    // Exactly proportional to the identity: any orthonormal pair works.
    out.vectors[0] = {Complex(1.0, 0.0), Complex(0.0, 0.0)};
    out.vectors[1] = {Complex(0.0, 0.0), Complex(1.0, 0.0)};
    return out;
  }

  // Eigenvector of the larger eigenvalue, picking the branch whose leading
  // term d +/- r cannot cancel.
  std::array<Complex, 2> vplus;
  if (d >= 0.0) {
    vplus = {Complex(d + r, 0.0), std::conj(c)};
  } else {
    vplus = {c, Complex(r - d, 0.0)};
  }
  normalize(vplus);
  std::array<Complex, 2> vminus = {-std::conj(vplus[1]), std::conj(vplus[0])};

  gauge_fix(vplus);
  gauge_fix(vminus);
  out.vectors[0] = vminus;
  out.vectors[1] = vplus;
  return out;
}

DensityMatrix density_from_bloch(const BlochVector& w) {
  return DensityMatrix(Hermitian2(0.5 * (1.0 + w.w3()), 0.5 * (1.0 - w.w3()),
                                  0.5 * Complex(w.w1(), -w.w2())));
}

BlochVector bloch_from_density(const DensityMatrix& rho) {
  const Hermitian2& m = rho.matrix();
  return BlochVector(2.0 * m.a12().real(), -2.0 * m.a12().imag(),
                     m.a11() - m.a22());
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const Hermitian2& a = rho.matrix();
  const Hermitian2& b = sigma.matrix();
  const double overlap = a.a11() * b.a11() + a.a22() * b.a22() +
                         2.0 * (a.a12().real() * b.a12().real() +
                                a.a12().imag() * b.a12().imag());
  const double dets = a.det() * b.det();
  return overlap + 2.0 * std::sqrt(std::max(0.0, dets));
}

double bures_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (same_entries(rho.matrix(), sigma.matrix())) return 0.0;
  const double f = fidelity(rho, sigma);
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - std::sqrt(std::max(0.0, f)))));
}

CMat2 CMat2::zero() { return CMat2{}; }

CMat2 CMat2::identity() {
  CMat2 u;
  u.m[0][0] = 1.0;
  u.m[1][1] = 1.0;
  return u;
}

CMat2 CMat2::from_hermitian(const Hermitian2& h) {
  CMat2 a;
  a.m[0][0] = h.a11();
  a.m[0][1] = h.a12();
  a.m[1][0] = std::conj(h.a12());
  a.m[1][1] = h.a22();
  return a;
}

CMat2 CMat2::adjoint() const {
  CMat2 a;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) a.m[i][j] = std::conj(m[j][i]);
  return a;
}

Complex CMat2::trace() const { return m[0][0] + m[1][1]; }

Hermitian2 CMat2::hermitian_part() const {
  return Hermitian2(m[0][0].real(), m[1][1].real(),
                    0.5 * (m[0][1] + std::conj(m[1][0])));
}

double CMat2::max_abs() const {
  double v = 0.0;
  for (const auto& row : m)
    for (const auto& z : row) v = std::max(v, std::abs(z));
  return v;
}

CMat2 operator+(const CMat2& a, const CMat2& b) {
  CMat2 c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c.m[i][j] = a.m[i][j] + b.m[i][j];
  return c;
}

CMat2 operator-(const CMat2& a, const CMat2& b) {
  CMat2 c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c.m[i][j] = a.m[i][j] - b.m[i][j];
  return c;
}

CMat2 operator*(const CMat2& a, const CMat2& b) {
  CMat2 c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      c.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
  return c;
}

CMat2 operator*(Complex s, const CMat2& a) {
  CMat2 c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c.m[i][j] = s * a.m[i][j];
  return c;
}

CMat2 basis_matrix(const EigenPair2& eig) {
  CMat2 v;
  for (int k = 0; k < 2; ++k) {
    v.m[0][k] = eig.vectors[k][0];
    v.m[1][k] = eig.vectors[k][1];
  }
  return v;
}

double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}

Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}

Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }

Vec3 to_vec3(const BlochVector& w) { return {w.w1(), w.w2(), w.w3()}; }

}  // namespace qfim
