#include "qfim/fisher.hpp"

#include <cmath>
#include <sstream>

#include "qfim/log.hpp"

namespace qfim {

const char* to_string(QfimMethod m) {
  switch (m) {
    case QfimMethod::sld: return "sld";
    case QfimMethod::spectral: return "spectral";
    case QfimMethod::bloch: return "bloch";
  }
  return "?";
}

namespace {

// Central-difference combine for one sampled scalar quantity.
template <class T>
T combine_scalar(T ph, T mh, T ph2, T mh2, double h, bool richardson) {
  const T d_h = (1.0 / (2.0 * h)) * (ph - mh);
  if (!richardson) return d_h;
  const T d_h2 = (1.0 / h) * (ph2 - mh2);
  return (1.0 / 3.0) * (4.0 * d_h2 - d_h);
}

CMat2 sld_tilde(const EigenPair2& eig, const CMat2& dtilde) {
  CMat2 l = CMat2::zero();
  for (int k = 0; k < 2; ++k) {
    for (int ll = 0; ll < 2; ++ll) {
      const double s = eig.values[k] + eig.values[ll];
      if (s > kEigTol) l.m[k][ll] = 2.0 * dtilde.m[k][ll] / s;
    }
  }
  return l;
}

struct SldBasisSet {
  EigenPair2 eig;
  CMat2 basis;                 // columns = eigenvectors
  std::vector<CMat2> l_tilde;  // per-parameter SLDs in the eigenbasis
};

SldBasisSet build_slds(const ParametrizedModel& model, const ParamPoint& p,
                       const DiffConfig& c) {
  SldBasisSet out;
  const DensityMatrix rho = model.evaluate(p);
  out.eig = eig_hermitian_2x2(rho.matrix());
  out.basis = basis_matrix(out.eig);
  const CMat2 vdag = out.basis.adjoint();
  out.l_tilde.reserve(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    const Hermitian2 drho = d_density(model, p, i, c);
    const CMat2 dtilde = vdag * CMat2::from_hermitian(drho) * out.basis;
    out.l_tilde.push_back(sld_tilde(out.eig, dtilde));
  }
  return out;
}

// F, F_classical, F_quantum from the SLD components in the eigenbasis.
// Diagonal components carry the spectrum gradients (classical part), the
// off-diagonal ones the eigenvector motion (quantum part); F is their sum,
// which keeps the split invariant exact.
void assemble_from_slds(const SldBasisSet& s, RealMatrix& f, RealMatrix& fc,
                        RealMatrix& fq) {
  const int n = static_cast<int>(s.l_tilde.size());
  f = RealMatrix(n);
  fc = RealMatrix(n);
  fq = RealMatrix(n);
  const std::array<double, 2> lam = s.eig.values;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const CMat2& li = s.l_tilde[static_cast<size_t>(i)];
      const CMat2& lj = s.l_tilde[static_cast<size_t>(j)];
      double classical = 0.0;
      double quantum = 0.0;
      for (int k = 0; k < 2; ++k) {
        if (lam[k] > kEigTol) {
          classical += lam[k] * li.m[k][k].real() * lj.m[k][k].real();
        }
        const double w = std::max(lam[k], 0.0);
        for (int ll = 0; ll < 2; ++ll) {
          if (ll == k) continue;
          quantum += w * (li.m[k][ll] * lj.m[ll][k]).real();
        }
      }
      fc.at(i, j) = fc.at(j, i) = classical;
      fq.at(i, j) = fq.at(j, i) = quantum;
      f.at(i, j) = f.at(j, i) = classical + quantum;
    }
  }
}

QfimResult finalize(std::vector<std::string> names, RealMatrix f,
                    std::optional<RealMatrix> fc, std::optional<RealMatrix> fq,
                    QfimMethod method, double rank_tol, std::string warning) {
  QfimResult r;
  r.parameter_names = std::move(names);
  r.F = std::move(f);
  r.F_classical = std::move(fc);
  r.F_quantum = std::move(fq);
  r.eigenvalues = sym_eigenvalues_desc(r.F);
  r.det = sym_det(r.F);
  r.rank_tol = rank_tol;
  const double lmax = r.eigenvalues.empty() ? 0.0 : r.eigenvalues.front();
  const double thresh = rank_tol * std::max(lmax, 0.0);
  r.rank = 0;
  for (double v : r.eigenvalues) {
    if (v > thresh && v > 0.0) ++r.rank;
  }
  r.method = method;
  r.warning = std::move(warning);
  return r;
}

}  // namespace

SldOperator solve_sld(const DensityMatrix& rho, const Hermitian2& drho) {
  if (std::abs(drho.trace()) > 1e-9) {
    std::ostringstream msg;
    msg << "solve_sld: d_rho has trace " << drho.trace()
        << "; a density-matrix derivative must be traceless";
    throw DomainError(msg.str());
  }
  const EigenPair2 eig = eig_hermitian_2x2(rho.matrix());
  const CMat2 v = basis_matrix(eig);
  const CMat2 dtilde = v.adjoint() * CMat2::from_hermitian(drho) * v;
  const CMat2 ltilde = sld_tilde(eig, dtilde);
  SldOperator out;
  out.L = (v * ltilde * v.adjoint()).hermitian_part();
  const CMat2 rl = CMat2::from_hermitian(rho.matrix()) * CMat2::from_hermitian(out.L);
  const CMat2 sym = Complex(0.5) * (rl + rl.adjoint());
  out.residual = (CMat2::from_hermitian(drho) - sym).max_abs();
  return out;
}

double qfi_single(const ParametrizedModel& model, const ParamPoint& p,
                  size_t i, const DiffConfig& c) {
  const DensityMatrix rho = model.evaluate(p);
  const EigenPair2 eig = eig_hermitian_2x2(rho.matrix());
  const CMat2 v = basis_matrix(eig);
  const Hermitian2 drho = d_density(model, p, i, c);
  const CMat2 dtilde = v.adjoint() * CMat2::from_hermitian(drho) * v;
  const CMat2 l = sld_tilde(eig, dtilde);
  double fisher = 0.0;
  for (int k = 0; k < 2; ++k) {
    const double w = std::max(eig.values[k], 0.0);
    if (eig.values[k] > kEigTol) {
      fisher += eig.values[k] * l.m[k][k].real() * l.m[k][k].real();
    }
    for (int ll = 0; ll < 2; ++ll) {
      if (ll == k) continue;
      fisher += w * (l.m[k][ll] * l.m[ll][k]).real();
    }
  }
  return fisher;
}

QfimResult qfim_sld(const ParametrizedModel& model, const ParamPoint& p,
                    const DiffConfig& c, double rank_tol) {
  const SldBasisSet set = build_slds(model, p, c);
  RealMatrix f, fc, fq;
  assemble_from_slds(set, f, fc, fq);
  return finalize(p.names(), std::move(f), std::move(fc), std::move(fq),
                  QfimMethod::sld, rank_tol, {});
}

QfimResult qfim_spectral(const ParametrizedModel& model, const ParamPoint& p,
                         const DiffConfig& c, double rank_tol) {
  const DensityMatrix rho = model.evaluate(p);
  const EigenPair2 eig0 = eig_hermitian_2x2(rho.matrix());
  if (eig0.degenerate) {
    std::ostringstream msg;
    msg << "qfim_spectral: degenerate spectrum (gap = " << eig0.gap
        << "); eigenvector derivatives are ill-defined, use qfim_sld";
    throw DegenerateSpectrumError(msg.str());
  }

  const int n = static_cast<int>(p.size());
  auto eig_at = [&model](const ParamPoint& q) {
    return eig_hermitian_2x2(model.evaluate(q).matrix());
  };

  // d lambda_k / d p_i and |d_i k> from gauge-fixed stencil decompositions.
  std::vector<std::array<double, 2>> dlam(static_cast<size_t>(n));
  std::vector<std::array<std::array<Complex, 2>, 2>> dvec(
      static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto s = sample_stencil(eig_at, p, static_cast<size_t>(i), c);
    for (int k = 0; k < 2; ++k) {
      dlam[i][k] =
          combine_scalar(s.plus_h.values[k], s.minus_h.values[k],
                         s.plus_h2.values[k], s.minus_h2.values[k], s.h,
                         s.richardson);
      for (int comp = 0; comp < 2; ++comp) {
        dvec[i][k][comp] = combine_scalar(
            s.plus_h.vectors[k][comp], s.minus_h.vectors[k][comp],
            s.plus_h2.vectors[k][comp], s.minus_h2.vectors[k][comp], s.h,
            s.richardson);
      }
    }
  }

  RealMatrix fc(n), fq(n), f(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double classical = 0.0;
      for (int k = 0; k < 2; ++k) {
        if (eig0.values[k] > kEigTol) {
          classical += dlam[i][k] * dlam[j][k] / eig0.values[k];
        }
      }
      double quantum = 0.0;
      for (int k = 0; k < 2; ++k) {
        for (int kp = 0; kp < 2; ++kp) {
          if (kp == k) continue;
          const double sum = eig0.values[k] + eig0.values[kp];
          if (sum <= kEigTol) continue;
          const double gap = eig0.values[k] - eig0.values[kp];
          // <k | d_i k'>
          Complex ip_i = 0.0, ip_j = 0.0;
          for (int comp = 0; comp < 2; ++comp) {
            ip_i += std::conj(eig0.vectors[k][comp]) * dvec[i][kp][comp];
            ip_j += std::conj(eig0.vectors[k][comp]) * dvec[j][kp][comp];
          }
          quantum += gap * gap / sum * 2.0 * (ip_i * std::conj(ip_j)).real();
        }
      }
      fc.at(i, j) = fc.at(j, i) = classical;
      fq.at(i, j) = fq.at(j, i) = quantum;
      f.at(i, j) = f.at(j, i) = classical + quantum;
    }
  }
  return finalize(p.names(), std::move(f), std::move(fc), std::move(fq),
                  QfimMethod::spectral, rank_tol, {});
}

QfimResult qfim_bloch(const ParametrizedModel& model, const ParamPoint& p,
                      const DiffConfig& c, double rank_tol) {
  const Vec3 w = to_vec3(model.bloch(p));
  const double wn = norm(w);
  const int n = static_cast<int>(p.size());

  auto bloch_at = [&model](const ParamPoint& q) { return to_vec3(model.bloch(q)); };
  std::vector<Vec3> dw(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    dw[i] = combine_central(sample_stencil(bloch_at, p, static_cast<size_t>(i), c));
  }

  std::string warning;
  RealMatrix f(n);
  if (wn > 1.0 - kPureNormTol) {
    // Pure boundary: the radial term is finite only for norm-preserving
    // directions, so it is dropped; flag radial motion above the noise gate.
    for (int i = 0; i < n; ++i) {
      if (std::abs(dot(w, dw[i])) > 1e-12 * norm(dw[i])) {
        std::ostringstream msg;
        msg << "qfim_bloch: near-singular pure state, |W . d_" << p.name(i)
            << " W| = " << std::abs(dot(w, dw[i]));
        warning = msg.str();
        log::warn(warning);
      }
    }
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) f.at(i, j) = f.at(j, i) = dot(dw[i], dw[j]);
  } else {
    const double denom = 1.0 - wn * wn;
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        const double v =
            dot(dw[i], dw[j]) + dot(w, dw[i]) * dot(w, dw[j]) / denom;
        f.at(i, j) = f.at(j, i) = v;
      }
    }
  }
  return finalize(p.names(), std::move(f), std::nullopt, std::nullopt,
                  QfimMethod::bloch, rank_tol, std::move(warning));
}

double classical_fi(std::span<const double> probabilities,
                    std::span<const double> derivatives) {
  if (probabilities.size() != derivatives.size() || probabilities.empty()) {
    throw DomainError("classical_fi: probability/derivative length mismatch");
  }
  double psum = 0.0, dsum = 0.0, fisher = 0.0;
  for (size_t i = 0; i < probabilities.size(); ++i) {
    if (!(probabilities[i] > 0.0)) {
      throw DomainError("classical_fi: probabilities must be positive");
    }
    psum += probabilities[i];
    dsum += derivatives[i];
    fisher += derivatives[i] * derivatives[i] / probabilities[i];
  }
  if (std::abs(psum - 1.0) > 1e-9) {
    throw DomainError("classical_fi: probabilities must sum to 1");
  }
  if (std::abs(dsum) > 1e-9) {
    throw DomainError("classical_fi: derivatives must sum to 0");
  }
  return fisher;
}

BuresCheck bures_check(const ParametrizedModel& model, const ParamPoint& p,
                       size_t i, double dphi, const DiffConfig& c) {
  const DensityMatrix rho = model.evaluate(p);
  const DensityMatrix sigma = model.evaluate(p.displaced(i, dphi));
  const double d = bures_distance(rho, sigma);
  BuresCheck out;
  out.lhs = d * d;
  out.rhs = 0.25 * qfi_single(model, p, i, c) * dphi * dphi;
  return out;
}

CrBoundReport cr_bound(const QfimResult& f, double rank_tol) {
  CrBoundReport r;
  const int n = f.F.size();
  const double lmax = f.eigenvalues.empty() ? 0.0 : f.eigenvalues.front();
  const double thresh = rank_tol * std::max(lmax, 0.0);
  int rank = 0;
  for (double v : f.eigenvalues) {
    if (v > thresh && v > 0.0) ++rank;
  }
  r.invertible = (rank == n && n > 0);
  if (!r.invertible) return r;

  if (n == 2) {
    const double det2 =
        f.F.at(0, 0) * f.F.at(1, 1) - f.F.at(0, 1) * f.F.at(1, 0);
    r.trace_bound = (f.F.at(0, 0) + f.F.at(1, 1)) / det2;
  } else {
    double tr = 0.0;
    for (double v : f.eigenvalues) tr += 1.0 / v;
    r.trace_bound = tr;
  }
  r.condition_number = f.eigenvalues.front() / f.eigenvalues.back();
  return r;
}

}  // namespace qfim
