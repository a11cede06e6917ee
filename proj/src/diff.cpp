#include "qfim/diff.hpp"

#include <cmath>

namespace qfim {

double stencil_step(const DiffConfig& c, double value) {
  if (!(c.step > 0.0)) throw DomainError("DiffConfig: step must be > 0");
  return c.step * (c.relative_step ? std::max(1.0, std::abs(value)) : 1.0);
}

Hermitian2 d_density(const ParametrizedModel& model, const ParamPoint& p,
                     size_t i, const DiffConfig& c) {
  auto eval = [&model](const ParamPoint& q) { return model.evaluate(q).matrix(); };
  return combine_central(sample_stencil(eval, p, i, c));
}

double d_scalar(const ScalarField& f, const ParamPoint& p, size_t i,
                const DiffConfig& c) {
  auto eval = [&f](const ParamPoint& q) {
    const double v = f(q);
    if (!is_finite(v)) throw DomainError("scalar field: non-finite value");
    return v;
  };
  return combine_central(sample_stencil(eval, p, i, c));
}

std::array<std::array<double, 2>, 2> jacobian2(const ScalarField& a,
                                               const ScalarField& b,
                                               const ParamPoint& p, size_t i,
                                               size_t j, const DiffConfig& c) {
  return {{{d_scalar(a, p, i, c), d_scalar(a, p, j, c)},
           {d_scalar(b, p, i, c), d_scalar(b, p, j, c)}}};
}

std::optional<double> convergence_order(double e_h, double e_h2, double e_h4) {
  if (e_h < 0.0 || e_h2 < 0.0 || e_h4 < 0.0) {
    throw DomainError("convergence_order: error samples must be nonnegative");
  }
  if (e_h == 0.0 || e_h2 == 0.0 || e_h4 == 0.0) return std::nullopt;  // exact
  return 0.5 * (std::log2(e_h / e_h2) + std::log2(e_h2 / e_h4));
}

}  // namespace qfim
