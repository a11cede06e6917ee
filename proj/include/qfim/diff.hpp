#pragma once

#include <array>
#include <optional>
#include <type_traits>
#include <utility>

#include "qfim/errors.hpp"
#include "qfim/models.hpp"

namespace qfim {

struct DiffConfig {
  double step = 1e-5;
  bool richardson = true;
  bool relative_step = true;  // scale step by max(1, |value|)
};

// Step actually applied along an axis with the given parameter value.
double stencil_step(const DiffConfig& c, double value);

// Central-difference stencil samples around p along one parameter. The
// half-step samples are populated only when Richardson extrapolation is on.
template <class T>
struct StencilSamples {
  T plus_h{}, minus_h{};
  T plus_h2{}, minus_h2{};
  double h = 0.0;
  bool richardson = false;
};

// Samples f at p +/- h (and p +/- h/2 when Richardson is on). A domain
// violation at any stencil point shrinks the step once by 10x; a second
// violation propagates.
template <class Eval>
auto sample_stencil(Eval&& f, const ParamPoint& p, size_t i,
                    const DiffConfig& c)
    -> StencilSamples<std::decay_t<decltype(f(p))>> {
  using T = std::decay_t<decltype(f(p))>;
  const double h0 = stencil_step(c, p.value(i));
  auto sample = [&](double h) {
    StencilSamples<T> s;
    s.h = h;
    s.richardson = c.richardson;
    s.plus_h = f(p.displaced(i, +h));
    s.minus_h = f(p.displaced(i, -h));
    if (c.richardson) {
      s.plus_h2 = f(p.displaced(i, +0.5 * h));
      s.minus_h2 = f(p.displaced(i, -0.5 * h));
    }
    return s;
  };
  try {
    return sample(h0);
  } catch (const DomainError&) {
    return sample(h0 / 10.0);
  }
}

// (f(p+h) - f(p-h)) / 2h, Richardson-combined with the half-step stencil
// when available.
template <class T>
T combine_central(const StencilSamples<T>& s) {
  const T d_h = (1.0 / (2.0 * s.h)) * (s.plus_h - s.minus_h);
  if (!s.richardson) return d_h;
  const T d_h2 = (1.0 / s.h) * (s.plus_h2 - s.minus_h2);
  return (1.0 / 3.0) * (4.0 * d_h2 - d_h);
}

// d rho / d p_i. The difference of Hermitian matrices is structurally
// Hermitian; tracelessness (derivative of the unit trace) holds to roundoff.
Hermitian2 d_density(const ParametrizedModel& model, const ParamPoint& p,
                     size_t i, const DiffConfig& c);

double d_scalar(const ScalarField& f, const ParamPoint& p, size_t i,
                const DiffConfig& c);

// Rows (da/di, da/dj) and (db/di, db/dj).
std::array<std::array<double, 2>, 2> jacobian2(const ScalarField& a,
                                               const ScalarField& b,
                                               const ParamPoint& p, size_t i,
                                               size_t j, const DiffConfig& c);

// Measured order from errors at steps h, h/2, h/4:
// mean of log2(e(h)/e(h/2)) and log2(e(h/2)/e(h/4)). nullopt means a zero
// error sample, i.e. the sequence is exact to rounding.
std::optional<double> convergence_order(double e_h, double e_h2, double e_h4);

}  // namespace qfim
