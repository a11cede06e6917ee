#pragma once

#include <stdexcept>
#include <string>

namespace qfim {

// Unphysical state or out-of-domain evaluation (bad Bloch norm, lambda outside
// (0,1), x/gamma outside the dissipative model's domain, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Two-parameter operation invoked with the wrong parameter count.
class ArityError : public std::invalid_argument {
 public:
  explicit ArityError(const std::string& what) : std::invalid_argument(what) {}
};

// Spectral-formula route refused: the state spectrum is (near-)degenerate and
// eigenvector derivatives are ill-defined. Callers should use the SLD route.
class DegenerateSpectrumError : public std::runtime_error {
 public:
  explicit DegenerateSpectrumError(const std::string& what)
      : std::runtime_error(what) {}
};

// A Lindblad RK4 step produced a state outside the PSD tolerance.
class StepSizeError : public std::runtime_error {
 public:
  explicit StepSizeError(const std::string& what) : std::runtime_error(what) {}
};

// estimable_combination called on a full-rank QFIM: both parameters are
// already estimable, there is nothing to reduce.
class FullRankError : public std::runtime_error {
 public:
  explicit FullRankError(const std::string& what) : std::runtime_error(what) {}
};

// estimable_combination called on a zero QFIM: no direction carries
// information.
class NoEstimableDirectionError : public std::runtime_error {
 public:
  explicit NoEstimableDirectionError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace qfim
