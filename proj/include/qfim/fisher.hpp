#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qfim/diff.hpp"
#include "qfim/realmat.hpp"

namespace qfim {

// lambda_k + lambda_l cutoff below which SLD blocks are nulled and spectral
// sums are skipped.
inline constexpr double kEigTol = 1e-12;
// A QFIM eigenvalue below rank_tol * lambda_max counts as zero.
inline constexpr double kDefaultRankTol = 1e-9;
// Bloch norms above 1 - kPureNormTol are treated as the pure-state boundary.
inline constexpr double kPureNormTol = 1e-9;

enum class QfimMethod { sld, spectral, bloch };
const char* to_string(QfimMethod m);

// Symmetric logarithmic derivative: Hermitian L with
// d_rho = (rho L + L rho) / 2, L nulled on zero-sum eigenvalue blocks.
struct SldOperator {
  Hermitian2 L;
  double residual = 0.0;  // max-abs of d_rho - (rho L + L rho)/2
};

struct QfimResult {
  std::vector<std::string> parameter_names;
  RealMatrix F;
  // Classical (spectrum) and quantum (eigenvector) blocks; absent for the
  // Bloch route, which produces F only.
  std::optional<RealMatrix> F_classical;
  std::optional<RealMatrix> F_quantum;
  std::vector<double> eigenvalues;  // descending
  double det = 0.0;
  int rank = 0;
  double rank_tol = kDefaultRankTol;
  QfimMethod method = QfimMethod::sld;
  std::string warning;  // empty when clean

  double scale() const { return F.max_abs(); }
};

struct CrBoundReport {
  bool invertible = false;
  std::optional<double> trace_bound;       // nullopt => unbounded
  std::optional<double> condition_number;  // nullopt => infinite
};

struct BuresCheck {
  double lhs = 0.0;  // D_B^2(rho(p), rho(p + dphi e_i))
  double rhs = 0.0;  // F_ii dphi^2 / 4
};

SldOperator solve_sld(const DensityMatrix& rho, const Hermitian2& drho);

// Tr(rho L^2) for one parameter; nonnegative by construction.
double qfi_single(const ParametrizedModel& model, const ParamPoint& p,
                  size_t i, const DiffConfig& c);

// F_ij = Tr(rho {L_i, L_j}) / 2 with the classical/quantum split read off
// the SLD components in rho's eigenbasis.
QfimResult qfim_sld(const ParametrizedModel& model, const ParamPoint& p,
                    const DiffConfig& c, double rank_tol = kDefaultRankTol);

// Spectral route: classical block from eigenvalue gradients, quantum block
// from gauge-fixed eigenvector differences. Rejects degenerate spectra.
QfimResult qfim_spectral(const ParametrizedModel& model, const ParamPoint& p,
                         const DiffConfig& c,
                         double rank_tol = kDefaultRankTol);

// Independent closed-form oracle:
// F_ij = dW_i . dW_j + (W . dW_i)(W . dW_j) / (1 - |W|^2) for |W| < 1,
// tangential part only at the pure boundary. No classical/quantum split.
QfimResult qfim_bloch(const ParametrizedModel& model, const ParamPoint& p,
                      const DiffConfig& c, double rank_tol = kDefaultRankTol);

// Sum of (dp_i)^2 / p_i over a probability vector.
double classical_fi(std::span<const double> probabilities,
                    std::span<const double> derivatives);

// Both sides of the infinitesimal Bures relation along parameter i.
BuresCheck bures_check(const ParametrizedModel& model, const ParamPoint& p,
                       size_t i, double dphi, const DiffConfig& c);

// Joint Cramer-Rao trace bound: Tr(F^{-1}) when F has full rank, unbounded
// otherwise.
CrBoundReport cr_bound(const QfimResult& f, double rank_tol = kDefaultRankTol);

}  // namespace qfim
