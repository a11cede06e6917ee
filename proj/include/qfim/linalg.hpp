#pragma once

#include <array>
#include <complex>

namespace qfim {

using Complex = std::complex<double>;

inline constexpr double kTraceTol = 1e-12;     // unit-trace tolerance
inline constexpr double kPsdTol = 1e-12;       // density-matrix PSD tolerance
inline constexpr double kBlochNormTol = 1e-12; // |W| <= 1 + kBlochNormTol
inline constexpr double kDegenerateGap = 1e-9; // eigenvalue-gap degeneracy cut
inline constexpr double kGaugePivotTol = 1e-9; // eigenvector gauge pivot

bool is_finite(double x);
bool is_finite(Complex z);

// 2x2 Hermitian matrix. Only the two real diagonal entries and the upper
// off-diagonal entry are stored; a21 is implied as conj(a12), so hermiticity
// is structural. Constructors reject non-finite entries.
class Hermitian2 {
 public:
  Hermitian2() = default;  // zero matrix
  Hermitian2(double a11, double a22, Complex a12);

  static Hermitian2 identity();

  double a11() const { return a11_; }
  double a22() const { return a22_; }
  Complex a12() const { return a12_; }

  double trace() const { return a11_ + a22_; }
  double det() const;
  double min_eigenvalue() const;  // closed form
  double max_eigenvalue() const;
  double max_abs() const;         // max-entry norm

  Hermitian2& operator+=(const Hermitian2& o);
  Hermitian2& operator-=(const Hermitian2& o);
  Hermitian2& operator*=(double s);

 private:
  double a11_ = 0.0;
  double a22_ = 0.0;
  Complex a12_{0.0, 0.0};
};

Hermitian2 operator+(Hermitian2 a, const Hermitian2& b);
Hermitian2 operator-(Hermitian2 a, const Hermitian2& b);
Hermitian2 operator*(double s, Hermitian2 a);

// Real Bloch vector of a physical qubit state; |W| <= 1 + kBlochNormTol.
class BlochVector {
 public:
  BlochVector(double w1, double w2, double w3);

  double w1() const { return w1_; }
  double w2() const { return w2_; }
  double w3() const { return w3_; }
  double norm() const;

 private:
  double w1_, w2_, w3_;
};

// Unit-trace, PSD (within kPsdTol) Hermitian 2x2 matrix.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Hermitian2& m);

  static DensityMatrix maximally_mixed();

  const Hermitian2& matrix() const { return m_; }

 private:
  Hermitian2 m_;
};

bool same_entries(const Hermitian2& a, const Hermitian2& b);  // bitwise

// Eigen-decomposition of a Hermitian2. values ascending; vectors[k] is the
// unit eigenvector of values[k]. Gauge: the first component with modulus
// > kGaugePivotTol is made real nonnegative (the second otherwise), which
// pins the U(1) phase so eigenvector finite differences are meaningful.
struct EigenPair2 {
  std::array<double, 2> values;
  std::array<std::array<Complex, 2>, 2> vectors;
  double gap = 0.0;        // values[1] - values[0]
  bool degenerate = false; // gap < kDegenerateGap
};

EigenPair2 eig_hermitian_2x2(const Hermitian2& h);

// rho = (I + W . sigma) / 2  and its inverse.
DensityMatrix density_from_bloch(const BlochVector& w);
BlochVector bloch_from_density(const DensityMatrix& rho);

// Uhlmann fidelity [Tr sqrt(sqrt(rho) sigma sqrt(rho))]^2 via the qubit
// closed form Tr(rho sigma) + 2 sqrt(det rho det sigma).
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

// D_B = sqrt(2 (1 - sqrt(fidelity))), in [0, sqrt(2)]. Entrywise-identical
// inputs return exactly 0.
double bures_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// General complex 2x2 matrix for basis changes and operator products.
struct CMat2 {
  std::array<std::array<Complex, 2>, 2> m{};

  static CMat2 zero();
  static CMat2 identity();
  static CMat2 from_hermitian(const Hermitian2& h);

  CMat2 adjoint() const;
  Complex trace() const;
  Hermitian2 hermitian_part() const;  // (A + A^dagger) / 2
  double max_abs() const;
};

CMat2 operator+(const CMat2& a, const CMat2& b);
CMat2 operator-(const CMat2& a, const CMat2& b);
CMat2 operator*(const CMat2& a, const CMat2& b);
CMat2 operator*(Complex s, const CMat2& a);

// Unitary whose columns are the eigenvectors of an EigenPair2.
CMat2 basis_matrix(const EigenPair2& eig);

// Plain real 3-vector for Bloch-vector derivatives (no physical-norm
// constraint, unlike BlochVector).
struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& v);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator*(double s, const Vec3& v);

Vec3 to_vec3(const BlochVector& w);

}  // namespace qfim
