#pragma once

// Numerical evaluation of truncated kernel expansions and the order-of-
// convergence check for the boundary limits
//   K_{zeta_eps} / conj(N_{c_t}(zeta_eps))^{n_t}              -> N_{c_t}^{n_t} K^t_zeta
//   K^{s+1}_{zeta_eps} / conj(N_{c_s}(zeta_eps))^{n_s-n_{s+1}} -> N_{c_s}^{n_s-n_{s+1}} K^s_zeta
// where zeta_eps has rank l_t (resp. l_s) and tends to zeta.

#include <cmath>
#include <vector>

#include "stratmod/kernel_coeffs.hpp"
#include "stratmod/peter_weyl.hpp"

namespace stratmod {

// K(z, zeta) = sum_{mu >= lambda, |mu| <= N} a_mu E^mu(z, zeta).
inline KernelExpansion peter_weyl_expansion(const CoefficientFn &coeff, const Partition &lambda,
                                            Int N) {
  KernelExpansion out{lambda.rank(), N, {}};
  for_each_partition(lambda.rank(), N, N, [&](const Partition &mu) {
    if (leq(lambda, mu))
      out.coefficients.emplace(mu, coeff(mu));
  });
  return out;
}

inline Complex evaluate_expansion(const KernelExpansion &k, ComponentCache &cache,
                                  const ComplexMatrix &z, const ComplexMatrix &zeta) {
  Complex total(0.0, 0.0);
  for (const auto &[mu, c] : k.coefficients)
    total += to_double(c) * kernel_E(cache.get(mu), z, zeta);
  return total;
}

inline double frobenius_norm(const ComplexMatrix &m) {
  double s = 0;
  for (const Complex &x : m.data())
    s += std::norm(x);
  return std::sqrt(s);
}

// sum_{m > N} x^m / m!: bounds the weight > N tail of the Fischer kernel
// sum_mu E^mu(z, zeta) when x = |z| |zeta| (Frobenius norms).
inline double fischer_tail_bound(double x, Int N) {
  double term = 1, head = 1;
  for (Int m = 1; m <= N; ++m) {
    term *= x / static_cast<double>(m);
    head += term;
  }
  return std::max(0.0, std::exp(x) - head);
}

struct LimitReport {
  Partition lambda;
  std::size_t s = 0;            // which limit: s == t is the first one
  Int weight_bound = 0;         // truncation of the numerator expansion
  std::vector<double> eps;
  std::vector<double> deviation; // max_z |ratio - target| / |target|
  std::vector<double> decade_factor;
  bool monotone = false;
  double tail_bound = 0;        // Fischer tail bound at the sampled norms (flat coefficients)
};

struct LimitSetup {
  ComplexMatrix zeta;        // limit point
  ComplexMatrix direction;   // zeta_eps = zeta + eps * direction
  std::vector<ComplexMatrix> z_points;
  std::vector<double> eps{1e-1, 1e-2, 1e-3, 1e-4};
};

inline LimitReport limit_check(const CoefficientFn &coeff, const Partition &lambda, std::size_t s,
                               Int N, const LimitSetup &setup, ComponentCache &cache) {
  const TriplePars &pars = cache.pars();
  const StepForm form = step_form(lambda);
  const std::size_t t = form.size();
  if (s < 1 || s > t)
    throw DomainError("limit_check: s must lie in [1, t]");

  const std::size_t cut = form[s - 1].cut;
  const Int power = s == t ? form[t - 1].height : form[s - 1].height - form[s].height;
  const KernelExpansion numerator =
      s == t ? peter_weyl_expansion(coeff, lambda, N) : k_s_expansion(coeff, lambda, s + 1, N);
  const KernelExpansion target =
      k_s_expansion(coeff, lambda, s, N - power * static_cast<Int>(cut));
  const ComplexPolynomial base_minor = to_complex(minor_poly<Rational>(cut, pars));
  const ComplexPolynomial minor = base_minor.pow(static_cast<std::uint64_t>(power));

  LimitReport rep;
  rep.lambda = lambda;
  rep.s = s;
  rep.weight_bound = N;
  rep.eps = setup.eps;

  std::vector<Complex> target_vals;
  double max_z = 0;
  for (const auto &z : setup.z_points) {
    target_vals.push_back(minor.evaluate(z) * evaluate_expansion(target, cache, z, setup.zeta));
    max_z = std::max(max_z, frobenius_norm(z));
  }
  double max_zeta = 0;
  for (double e : setup.eps) {
    ComplexMatrix ze(pars.r(), pars.s());
    for (std::size_t i = 0; i < pars.r(); ++i)
      for (std::size_t j = 0; j < pars.s(); ++j)
        ze(i, j) = setup.zeta(i, j) + e * setup.direction(i, j);
    max_zeta = std::max(max_zeta, frobenius_norm(ze));
    const Complex denom = std::pow(std::conj(base_minor.evaluate(ze)), static_cast<int>(power));
    if (std::abs(denom) == 0.0)
      throw DomainError("limit_check: N_c vanishes along the approximating curve");
    double dev = 0;
    for (std::size_t k = 0; k < setup.z_points.size(); ++k) {
      const Complex ratio = evaluate_expansion(numerator, cache, setup.z_points[k], ze) / denom;
      dev = std::max(dev, std::abs(ratio - target_vals[k]) /
                              std::max(std::abs(target_vals[k]), 1e-300));
    }
    rep.deviation.push_back(dev);
  }
  rep.monotone = true;
  for (std::size_t k = 1; k < rep.deviation.size(); ++k) {
    rep.decade_factor.push_back(rep.deviation[k - 1] / rep.deviation[k]);
    if (!(rep.deviation[k] < rep.deviation[k - 1]))
      rep.monotone = false;
  }
  rep.tail_bound = fischer_tail_bound(max_z * max_zeta, N);
  return rep;
}

} // namespace stratmod
