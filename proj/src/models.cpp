#include "qfim/models.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>
#include <unordered_set>

#include "qfim/errors.hpp"

namespace qfim {

ParamPoint::ParamPoint(std::vector<std::string> names,
                       std::vector<double> values)
    : names_(std::move(names)), values_(std::move(values)) {
  if (names_.size() != values_.size()) {
    throw DomainError("ParamPoint: names/values length mismatch");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second) {
      throw DomainError("ParamPoint: duplicate parameter name '" + n + "'");
    }
  }
  for (double v : values_) {
    if (!is_finite(v)) throw DomainError("ParamPoint: non-finite value");
  }
}

bool ParamPoint::has(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

size_t ParamPoint::index_of(std::string_view name) const {
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  throw DomainError("ParamPoint: unknown parameter '" + std::string(name) +
                    "'");
}

double ParamPoint::by_name(std::string_view name) const {
  return values_[index_of(name)];
}

ParamPoint ParamPoint::displaced(size_t i, double delta) const {
  std::vector<double> v = values_;
  v[i] += delta;
  return ParamPoint(names_, std::move(v));
}

ParamPoint ParamPoint::with_values(std::vector<double> values) const {
  return ParamPoint(names_, std::move(values));
}

ScalarField constant_field(double value) {
  return [value](const ParamPoint&) { return value; };
}

ScalarField coordinate_field(std::string name) {
  return [name = std::move(name)](const ParamPoint& p) {
    return p.by_name(name);
  };
}

DissipativeQubitModel::DissipativeQubitModel(double omega_, double time_)
    : omega(omega_), time(time_) {
  if (!is_finite(omega) || !is_finite(time) || time < 0.0) {
    throw DomainError("DissipativeQubitModel: need finite omega and time >= 0");
  }
}

DensityMatrix eval_eigen_model(const EigenModel& m, const ParamPoint& p) {
  const double lambda = m.lambda_fn(p);
  const double h = m.h_fn(p);
  if (!is_finite(lambda) || lambda <= 0.0 || lambda >= 1.0) {
    std::ostringstream msg;
    msg << "eigen model: lambda = " << lambda
        << " outside (0,1); the mixed-state form is not valid there";
    throw DomainError(msg.str());
  }
  // Closed form of lambda |phi1><phi1| + (1-lambda) |phi2><phi2|.
  const double ch = std::cos(h);
  const double sh = std::sin(h);
  const double r = 2.0 * lambda - 1.0;
  const double a11 = lambda * ch * ch + (1.0 - lambda) * sh * sh;
  const Complex phase(std::cos(m.theta0), std::sin(m.theta0));
  const Complex a12 = r * ch * sh * phase;
  return DensityMatrix(Hermitian2(a11, 1.0 - a11, a12));
}

DensityMatrix eval_bloch_model(const BlochModel& m, const ParamPoint& p) {
  return density_from_bloch(BlochVector(m.w1_fn(p), m.w2_fn(p), m.w3_fn(p)));
}

DensityMatrix eval_dissipative(const DissipativeQubitModel& m,
                               const ParamPoint& p) {
  const double x = p.by_name("x");
  const double gamma = p.by_name("gamma");
  if (x <= 0.0 || x >= 1.0) {
    std::ostringstream msg;
    msg << "dissipative model: x = " << x << " outside (0,1)";
    throw DomainError(msg.str());
  }
  if (gamma < 0.0) {
    std::ostringstream msg;
    msg << "dissipative model: gamma = " << gamma << " negative";
    throw DomainError(msg.str());
  }
  const double p11 = std::exp(-m.time * gamma) * x;
  return DensityMatrix(Hermitian2(p11, 1.0 - p11, {0.0, 0.0}));
}

ParametrizedModel::ParametrizedModel(Family f, std::vector<std::string> names)
    : family_(std::move(f)), names_(std::move(names)) {}

ParametrizedModel ParametrizedModel::eigen(EigenModel m,
                                           std::vector<std::string> names) {
  return ParametrizedModel(Family(std::move(m)), std::move(names));
}

ParametrizedModel ParametrizedModel::bloch(BlochModel m,
                                           std::vector<std::string> names) {
  return ParametrizedModel(Family(std::move(m)), std::move(names));
}

ParametrizedModel ParametrizedModel::dissipative(DissipativeQubitModel m) {
  return ParametrizedModel(Family(m), {"gamma", "x"});
}

DensityMatrix ParametrizedModel::evaluate(const ParamPoint& p) const {
  return std::visit(
      [&p](const auto& m) -> DensityMatrix {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, EigenModel>) {
          return eval_eigen_model(m, p);
        } else if constexpr (std::is_same_v<T, BlochModel>) {
          return eval_bloch_model(m, p);
        } else {
          return eval_dissipative(m, p);
        }
      },
      family_);
}

BlochVector ParametrizedModel::bloch(const ParamPoint& p) const {
  return bloch_from_density(evaluate(p));
}

std::array<ScalarField, 3> bloch_fields(const ParametrizedModel& model) {
  auto shared = std::make_shared<ParametrizedModel>(model);
  return {
      ScalarField([shared](const ParamPoint& p) { return shared->bloch(p).w1(); }),
      ScalarField([shared](const ParamPoint& p) { return shared->bloch(p).w2(); }),
      ScalarField([shared](const ParamPoint& p) { return shared->bloch(p).w3(); }),
  };
}

ParametrizedModel reparametrize_linear(const ParametrizedModel& base,
                                       const std::array<double, 4>& a,
                                       std::vector<std::string> new_names) {
  if (base.parameter_names().size() != 2 || new_names.size() != 2) {
    throw ArityError("reparametrize_linear: two-parameter models only");
  }
  const double det = a[0] * a[3] - a[1] * a[2];
  if (std::abs(det) < 1e-300) {
    throw DomainError("reparametrize_linear: matrix is singular");
  }
  // theta = A^{-1} theta'
  const std::array<double, 4> inv = {a[3] / det, -a[1] / det, -a[2] / det,
                                     a[0] / det};
  auto shared = std::make_shared<ParametrizedModel>(base);
  auto base_names = base.parameter_names();
  auto pull_back = [shared, inv, base_names](const ParamPoint& p) {
    const double u = p.value(0);
    const double v = p.value(1);
    return ParamPoint(base_names,
                      {inv[0] * u + inv[1] * v, inv[2] * u + inv[3] * v});
  };
  BlochModel wrapped{
      [shared, pull_back](const ParamPoint& p) {
        return shared->bloch(pull_back(p)).w1();
      },
      [shared, pull_back](const ParamPoint& p) {
        return shared->bloch(pull_back(p)).w2();
      },
      [shared, pull_back](const ParamPoint& p) {
        return shared->bloch(pull_back(p)).w3();
      },
  };
  return ParametrizedModel::bloch(std::move(wrapped), std::move(new_names));
}

ParametrizedModel restrict_to_line(const ParametrizedModel& base,
                                   const ParamPoint& p0,
                                   const std::array<double, 2>& dir,
                                   std::string name) {
  if (base.parameter_names().size() != 2 || p0.size() != 2) {
    throw ArityError("restrict_to_line: two-parameter models only");
  }
  auto shared = std::make_shared<ParametrizedModel>(base);
  auto at = [shared, p0, dir](const ParamPoint& p) {
    const double s = p.value(0);
    return p0.with_values({p0.value(0) + s * dir[0], p0.value(1) + s * dir[1]});
  };
  BlochModel wrapped{
      [shared, at](const ParamPoint& p) { return shared->bloch(at(p)).w1(); },
      [shared, at](const ParamPoint& p) { return shared->bloch(at(p)).w2(); },
      [shared, at](const ParamPoint& p) { return shared->bloch(at(p)).w3(); },
  };
  return ParametrizedModel::bloch(std::move(wrapped), {std::move(name)});
}

namespace {

// Right-hand side of the master equation for H = omega sigma_z and jump
// operator sigma_- (basis order |e>, |g>).
CMat2 lindblad_rhs(const CMat2& rho, double omega, double gamma) {
  CMat2 h = CMat2::zero();
  h.m[0][0] = omega;
  h.m[1][1] = -omega;

  CMat2 sm = CMat2::zero();  // sigma_- = |g><e|
  sm.m[1][0] = 1.0;
  const CMat2 sp = sm.adjoint();
  const CMat2 spsm = sp * sm;

  const Complex i(0.0, 1.0);
  const CMat2 coherent = (-i) * (h * rho - rho * h);
  const CMat2 dissip =
      sm * rho * sp - Complex(0.5) * (spsm * rho + rho * spsm);
  return coherent + Complex(gamma) * dissip;
}

DensityMatrix package_state(const CMat2& raw) {
  Hermitian2 h = raw.hermitian_part();
  const double tr = h.trace();
  if (std::abs(tr - 1.0) > 1e-13) {
    if (tr <= 0.0) throw StepSizeError("lindblad step: trace collapsed");
    h *= 1.0 / tr;
  }
  const double lo = h.min_eigenvalue();
  if (lo < -1e-9) {
    std::ostringstream msg;
    msg << "lindblad step: PSD violated by " << -lo << "; step too large";
    throw StepSizeError(msg.str());
  }
  if (lo < -0.5 * kPsdTol) {
    // Floor roundoff-level negative eigenvalues from the integration.
    const double eps = -lo;
    h = 1.0 / (1.0 + 2.0 * eps) *
        (h + Hermitian2(eps, eps, {0.0, 0.0}));
  }
  return DensityMatrix(h);
}

}  // namespace

DensityMatrix lindblad_step_rk4(const DensityMatrix& rho, double omega,
                                double gamma, double dt) {
  if (!(dt > 0.0) || gamma < 0.0) {
    throw DomainError("lindblad_step_rk4: need dt > 0 and gamma >= 0");
  }
  const CMat2 y = CMat2::from_hermitian(rho.matrix());
  const Complex half_dt(0.5 * dt);
  const CMat2 k1 = lindblad_rhs(y, omega, gamma);
  const CMat2 k2 = lindblad_rhs(y + half_dt * k1, omega, gamma);
  const CMat2 k3 = lindblad_rhs(y + half_dt * k2, omega, gamma);
  const CMat2 k4 = lindblad_rhs(y + Complex(dt) * k3, omega, gamma);
  const CMat2 next =
      y + Complex(dt / 6.0) * (k1 + Complex(2.0) * k2 + Complex(2.0) * k3 + k4);
  return package_state(next);
}

DensityMatrix integrate_lindblad(const DensityMatrix& rho0, double omega,
                                 double gamma, double t, double dt) {
  if (t < 0.0) throw DomainError("integrate_lindblad: t must be >= 0");
  if (!(dt > 0.0)) throw DomainError("integrate_lindblad: dt must be > 0");
  if (gamma < 0.0) throw DomainError("integrate_lindblad: gamma must be >= 0");

  DensityMatrix state = rho0;
  const auto full_steps = static_cast<long long>(t / dt);
  for (long long k = 0; k < full_steps; ++k) {
    state = lindblad_step_rk4(state, omega, gamma, dt);
  }
  const double remainder = t - static_cast<double>(full_steps) * dt;
  if (remainder > 1e-15 * std::max(1.0, t)) {
    state = lindblad_step_rk4(state, omega, gamma, remainder);
  }
  return state;
}

}  // namespace qfim
