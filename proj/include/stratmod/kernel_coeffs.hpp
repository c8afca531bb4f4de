#pragma once

// Exact rational layer for kernel expansions: generalized Pochhammer symbols,
// the shift constants C_l^n(lambda), and the stratified expansions
// K^s = sum_mu a_(mu, tail) C(...) E^(mu - n_s^(l_s)).

#include <functional>
#include <map>
#include <vector>

#include "stratmod/partition.hpp"
#include "stratmod/rational.hpp"

namespace stratmod {

// (s)_lambda = prod_j prod_{i < lambda_j} (s - (j-1) a/2 + i), j 1-based.
inline Rational pochhammer(const Rational &s, const Partition &lambda, const Rational &a) {
  Rational out(1);
  for (std::size_t j = 0; j < lambda.rank(); ++j) {
    Rational base = s - Rational(static_cast<Int>(j)) * a / 2;
    for (Int i = 0; i < lambda[j]; ++i)
      out *= base + i;
  }
  return out;
}

// Classical rising factorial (x)_n.
inline Rational rising(const Rational &x, Int n) {
  Rational out(1);
  for (Int i = 0; i < n; ++i)
    out *= x + i;
  return out;
}

// C_l^n(lambda) = prod_{j=1}^{l} 1 / (lambda_j - n + 1 + (a/2)(l - j))_n for a
// partition lambda of rank l containing n^(l).
inline Rational cconst(std::size_t ell, Int n, const Partition &lambda, const Rational &a) {
  if (lambda.rank() != ell)
    throw RankMismatch("cconst: partition " + lambda.str() + " does not have rank " +
                       std::to_string(ell));
  if (n < 0)
    throw DomainError("cconst: negative n");
  if (ell > 0 && lambda.last() < n)
    throw DomainError("cconst: " + lambda.str() + " does not contain " + std::to_string(n) +
                      "^(" + std::to_string(ell) + ")");
  Rational out(1);
  for (std::size_t j = 1; j <= ell; ++j) {
    Rational base = Rational(lambda[j - 1] - n + 1) + a / 2 * Rational(static_cast<Int>(ell - j));
    Rational f = rising(base, n);
    if (f == 0)
      throw DegenerateParameter("cconst: zero Pochhammer factor at j=" + std::to_string(j));
    out /= f;
  }
  return out;
}

using CoefficientFn = std::function<Rational(const Partition &)>;

// a_mu = 1: the Fischer kernel sum_mu E^mu.
inline CoefficientFn flat_coefficients() {
  return [](const Partition &) { return Rational(1); };
}

// a_mu = 1 / (c)_mu with multiplicity a.
inline CoefficientFn pochhammer_coefficients(const Rational &c, const Rational &a = Rational(2)) {
  return [c, a](const Partition &mu) {
    Rational p = pochhammer(c, mu, a);
    if (p == 0)
      throw DegenerateParameter("pochhammer weight (c)_mu vanishes at mu=" + mu.str());
    return Rational(1) / p;
  };
}

struct KernelExpansion {
  std::size_t rank_context = 0;
  Int weight_bound = 0;
  // Keys are partitions of rank rank_context (padded with zeros).
  std::map<Partition, Rational> coefficients;
};

// Expansion K^s for the partition lambda (given in any form; its step form
// is taken internally), truncated to output keys of weight <= N. The key
// mu - n_s^(l_s) is padded to the rank of lambda.
inline KernelExpansion k_s_expansion(const CoefficientFn &coeff, const Partition &lambda,
                                     std::size_t s, Int N, const Rational &a = Rational(2)) {
  const StepForm form = step_form(lambda);
  const std::size_t t = form.size();
  if (s < 1 || s > t)
    throw DomainError("k_s_expansion: s must lie in [1, t] with t=" + std::to_string(t));
  const std::size_t r = lambda.rank();
  const std::size_t ls = form[s - 1].cut;
  const Int ns = form[s - 1].height;

  KernelExpansion out{r, N, {}};
  // lambda_1^s: the first l_s parts of lambda.
  const Partition head(std::vector<Int>(lambda.parts().begin(),
                                        lambda.parts().begin() + static_cast<std::ptrdiff_t>(ls)));
  const auto tail_all = step_slice(form, s + 1, t);

  for_each_partition(ls, N, N, [&](const Partition &key) {
    const Partition mu = add_rect(key, ns);
    if (!leq(head, mu))
      return;
    Rational c = coeff(pad(concat(mu, tail_all), r));
    for (std::size_t k = s; k <= t; ++k) {
      const Int nk = form[k - 1].height;
      const Int nk1 = k < t ? form[k].height : 0;
      const auto tail_k = step_slice(form, s + 1, k);
      const Partition arg = subtract_rect(concat(mu, tail_k), nk1);
      c *= cconst(form[k - 1].cut, nk - nk1, arg, a);
    }
    out.coefficients.emplace(pad(key, r), c);
  });
  return out;
}

} // namespace stratmod
