#pragma once

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qfim/linalg.hpp"

namespace qfim {

// Ordered set of named real parameter values. Names are unique, values
// finite.
class ParamPoint {
 public:
  ParamPoint(std::vector<std::string> names, std::vector<double> values);

  size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<double>& values() const { return values_; }
  const std::string& name(size_t i) const { return names_[i]; }
  double value(size_t i) const { return values_[i]; }

  bool has(std::string_view name) const;
  size_t index_of(std::string_view name) const;  // throws DomainError
  double by_name(std::string_view name) const;   // throws DomainError

  // Copy with values[i] shifted by delta.
  ParamPoint displaced(size_t i, double delta) const;
  // Copy with values replaced.
  ParamPoint with_values(std::vector<double> values) const;

 private:
  std::vector<std::string> names_;
  std::vector<double> values_;
};

// Real-valued field over parameter points. User-supplied callables must be
// pure and safe to call concurrently; everything in this module is.
using ScalarField = std::function<double(const ParamPoint&)>;

ScalarField constant_field(double value);
ScalarField coordinate_field(std::string name);

// rho = lambda |phi1><phi1| + (1 - lambda) |phi2><phi2| with
//   |phi1> = (e^{i theta0} cos h, sin h)^T,
//   |phi2> = (-sin h, e^{-i theta0} cos h)^T,
// lambda and h arbitrary fields, theta0 a constant phase. lambda must stay
// strictly inside (0,1); evaluation rejects the boundary.
struct EigenModel {
  ScalarField lambda_fn;
  ScalarField h_fn;
  double theta0 = 0.0;
};

// rho = (I + W(p) . sigma) / 2 with W = (w1, w2, w3) arbitrary fields.
struct BlochModel {
  ScalarField w1_fn;
  ScalarField w2_fn;
  ScalarField w3_fn;
};

// Spontaneous-emission qubit, H = omega sigma_z, jump operator sigma_-.
// time and the decay rate are dimensionless (scaled by a fixed time unit).
// The estimated parameters x (initial excited population, 0 < x < 1) and
// gamma (decay rate, >= 0) are read from the ParamPoint by name.
struct DissipativeQubitModel {
  double omega = 0.0;
  double time = 0.0;  // >= 0

  DissipativeQubitModel(double omega_, double time_);
  DissipativeQubitModel() = default;
};

DensityMatrix eval_eigen_model(const EigenModel& m, const ParamPoint& p);
DensityMatrix eval_bloch_model(const BlochModel& m, const ParamPoint& p);
// Closed form rho = diag(x e^{-t gamma}, 1 - x e^{-t gamma}); reads "x" and
// "gamma" from p.
DensityMatrix eval_dissipative(const DissipativeQubitModel& m,
                               const ParamPoint& p);

// A model family bound to an ordered list of parameter names. Immutable
// after construction; evaluation is pure.
class ParametrizedModel {
 public:
  using Family = std::variant<EigenModel, BlochModel, DissipativeQubitModel>;

  static ParametrizedModel eigen(EigenModel m,
                                 std::vector<std::string> names = {"x", "y"});
  static ParametrizedModel bloch(BlochModel m,
                                 std::vector<std::string> names = {"x", "y"});
  // Parameter order (gamma, x), matching the dissipative QFIM layout.
  static ParametrizedModel dissipative(DissipativeQubitModel m);

  const std::vector<std::string>& parameter_names() const { return names_; }
  const Family& family() const { return family_; }

  DensityMatrix evaluate(const ParamPoint& p) const;
  BlochVector bloch(const ParamPoint& p) const;

 private:
  ParametrizedModel(Family f, std::vector<std::string> names);

  Family family_;
  std::vector<std::string> names_;
};

// The model's Bloch components as scalar fields (w1, w2, w3).
std::array<ScalarField, 3> bloch_fields(const ParametrizedModel& model);

// Model over new parameters theta' = A theta (A row-major 2x2, invertible).
ParametrizedModel reparametrize_linear(const ParametrizedModel& base,
                                       const std::array<double, 4>& a,
                                       std::vector<std::string> new_names);

// One-parameter model s -> base(p0 + s * dir); s = 0 is p0.
ParametrizedModel restrict_to_line(const ParametrizedModel& base,
                                   const ParamPoint& p0,
                                   const std::array<double, 2>& dir,
                                   std::string name = "s");

// One classical RK4 step of drho/dt = -i[omega sigma_z, rho]
// + gamma (s- rho s+ - {s+ s-, rho}/2). The result is re-Hermitized and
// trace-renormalized if the drift exceeds 1e-13; a step whose PSD violation
// exceeds 1e-9 is rejected (StepSizeError).
DensityMatrix lindblad_step_rk4(const DensityMatrix& rho, double omega,
                                double gamma, double dt);

// Fixed-step composition of lindblad_step_rk4 up to time t; the final
// partial step is shortened to land exactly on t.
DensityMatrix integrate_lindblad(const DensityMatrix& rho0, double omega,
                                 double gamma, double t, double dt);

}  // namespace qfim
