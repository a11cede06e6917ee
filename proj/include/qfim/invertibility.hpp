#pragma once

#include <array>
#include <string>

#include "qfim/fisher.hpp"

namespace qfim {

inline constexpr double kDefaultCondTol = 1e-7;
inline constexpr double kDefaultDetTol = 1e-9;

enum class Verdict { jointly_estimable, not_jointly_estimable, indeterminate };
const char* to_string(Verdict v);

// Outcome of the joint-estimability criterion for a two-parameter model.
struct InvertibilityVerdict {
  double condition_value = 0.0;  // Jacobian cross term of (|W|, w3)
  double det_qfim = 0.0;
  Verdict verdict = Verdict::indeterminate;
  bool azimuth_constant = false;
  std::string notes;
};

// Orthogonal diagonalization of a rank-1 QFIM: R F R^T = diag(qfi, 0).
struct EstimableCombination {
  RealMatrix R;                          // 2x2 orthogonal, rows by descending eigenvalue
  std::array<double, 2> qfi_values{};    // descending
  std::array<double, 2> direction{};     // first row of R
  std::string description;
};

// Closed-form determinant factorization of the eigen-model QFIM:
// det = lambda_factor * weight * cross^2.
struct DetFactorization {
  double lambda_factor = 0.0;   // (3 + cos 2theta0 + 2 cos 4h sin^2 theta0)(1-2lambda)^2
  double weight = 0.0;          // 1 / (lambda - lambda^2), > 0 on (0,1)
  double cross = 0.0;           // dλ/dx dh/dy - dλ/dy dh/dx
  double det_closed_form = 0.0;
};

// Side-by-side report of the printed quantum weight and the weight implied
// by the Bloch-form QFIM of the same model. They agree iff sin(theta0)
// sin(2h) = 0; the discrepancy is reported, never silently resolved.
struct LambdaAudit {
  double printed = 0.0;       // factorization weight as printed
  double bloch_weight = 0.0;  // 4 (1 - 2 lambda)^2
  double discrepancy = 0.0;   // printed - bloch_weight
  double lambda = 0.0;
  double h = 0.0;
  double theta0 = 0.0;
};

DetFactorization det_factorization(const EigenModel& m, const ParamPoint& p,
                                   const DiffConfig& c);

LambdaAudit lambda_audit(const EigenModel& m, const ParamPoint& p);

// Evaluates the two-parameter estimability criterion: the Jacobian cross
// term of (|W|, w3), cross-checked against det(QFIM) from the SLD route,
// with the constant-azimuth precondition verified numerically. Mixed
// signals yield an indeterminate verdict with explanatory notes.
InvertibilityVerdict check_condition(const ParametrizedModel& model,
                                     const ParamPoint& p, const DiffConfig& c,
                                     double cond_tol = kDefaultCondTol,
                                     double det_tol = kDefaultDetTol);

// As above with a precomputed SLD-route QFIM at p.
InvertibilityVerdict check_condition(const ParametrizedModel& model,
                                     const ParamPoint& p, const DiffConfig& c,
                                     const QfimResult& qfim, double cond_tol,
                                     double det_tol);

// Requires a rank-1 2x2 QFIM; the point supplies the parameter values named
// in the description. The diagonalization is a pointwise linearization
// valid at p.
EstimableCombination estimable_combination(const QfimResult& f,
                                           const ParamPoint& p);

}  // namespace qfim
