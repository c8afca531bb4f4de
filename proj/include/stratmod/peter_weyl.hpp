#pragma once

// Numerical Peter-Weyl components of the polynomial algebra on C^{r x s}.
// The component P^lambda is the linear span of the K-orbit of the conical
// polynomial N^lambda; a Fischer-orthonormal basis of it is obtained from
// the SVD of sampled orbit vectors, grown until the numerical rank has been
// stable for a fixed number of consecutive samples.

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "stratmod/kernel_coeffs.hpp"
#include "stratmod/polynomial.hpp"

namespace stratmod {

// All monomials of a fixed total degree, with coordinates scaled by
// sqrt(alpha!) so that the Fischer product becomes the standard Hermitian one.
class DegreeBlock {
public:
  static constexpr std::size_t kMaxSize = 10000;

  DegreeBlock(const TriplePars &pars, std::uint32_t degree) : pars_(pars), degree_(degree) {
    // C(nvars + degree - 1, degree), guarded before enumerating.
    const std::size_t nv = pars.nvars();
    double count = 1;
    for (std::uint32_t k = 1; k <= degree; ++k)
      count = count * static_cast<double>(nv + k - 1) / k;
    if (nv == 0)
      count = degree == 0 ? 1 : 0;
    if (count > kMaxSize)
      throw DomainError("degree block of size " + std::to_string(static_cast<long long>(count)) +
                        " exceeds the limit of " + std::to_string(kMaxSize));
    Exponent e(nv, 0);
    enumerate(e, 0, degree);
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
      index_.emplace(monomials_[i], i);
      scale_.push_back(std::sqrt(multi_factorial<double>(monomials_[i])));
    }
  }

  std::size_t size() const noexcept { return monomials_.size(); }
  std::uint32_t degree() const noexcept { return degree_; }
  const TriplePars &pars() const noexcept { return pars_; }
  const std::vector<Exponent> &monomials() const noexcept { return monomials_; }

  Eigen::VectorXcd to_coords(const ComplexPolynomial &f) const {
    Eigen::VectorXcd x = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(size()));
    for (const auto &[e, c] : f.terms()) {
      auto it = index_.find(e);
      if (it == index_.end())
        throw DomainError("polynomial has terms outside the degree block");
      x(static_cast<Eigen::Index>(it->second)) = c * scale_[it->second];
    }
    return x;
  }

  ComplexPolynomial from_coords(const Eigen::VectorXcd &x) const {
    ComplexPolynomial f(pars_);
    for (std::size_t i = 0; i < size(); ++i)
      f.add_term(monomials_[i], x(static_cast<Eigen::Index>(i)) / scale_[i]);
    return f;
  }

private:
  void enumerate(Exponent &e, std::size_t v, std::uint32_t left) {
    if (v + 1 >= e.size()) {
      if (!e.empty())
        e[e.size() - 1] = left;
      if (!e.empty() || left == 0)
        monomials_.push_back(e);
      if (!e.empty())
        e[e.size() - 1] = 0;
      return;
    }
    for (std::uint32_t k = left + 1; k-- > 0;) {
      e[v] = k;
      enumerate(e, v + 1, left - k);
    }
    e[v] = 0;
  }

  TriplePars pars_;
  std::uint32_t degree_;
  std::vector<Exponent> monomials_;
  std::map<Exponent, std::size_t> index_;
  std::vector<double> scale_;
};

template <class Rng>
Eigen::MatrixXcd random_unitary(std::size_t n, Rng &rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      double re = gauss(rng);
      double im = gauss(rng);
      g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = Complex(re, im) / std::sqrt(2.0);
    }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd rmat = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the column phases so the distribution is Haar.
  for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(n); ++k) {
    Complex d = rmat(k, k);
    if (std::abs(d) > 0)
      q.col(k) *= d / std::abs(d);
  }
  return q;
}

inline ComplexMatrix from_eigen(const Eigen::MatrixXcd &m) {
  ComplexMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
  return out;
}

struct SpanOptions {
  double tol = 1e-9;                // relative singular value threshold
  std::size_t stable_samples = 5;   // consecutive non-growing samples to stop
  std::size_t max_samples = 0;      // 0: 2 * block size + 20
};

struct ComponentBasis {
  Partition lambda;
  TriplePars pars;
  std::uint64_t seed = 0;
  double tol = 0;
  std::size_t stable_samples = 0;
  std::size_t samples = 0;      // orbit vectors used, including N^lambda itself
  std::vector<ComplexPolynomial> basis;
  std::size_t dim = 0;
  double residual = 0;          // first discarded singular value / largest
  Eigen::MatrixXcd coords;      // block coordinates of the basis, one column each
};

inline ComponentBasis span_basis(const Partition &lambda, const TriplePars &pars,
                                 std::uint64_t seed, const SpanOptions &opt = {}) {
  if (lambda.rank() != pars.r())
    throw RankMismatch("span_basis: partition rank differs from r");
  const DegreeBlock block(pars, static_cast<std::uint32_t>(lambda.weight()));
  const std::size_t cap = opt.max_samples ? opt.max_samples : 2 * block.size() + 20;

  const ComplexPolynomial seed_poly = to_complex(conical_poly<Rational>(lambda, pars));
  std::mt19937_64 rng(seed);

  std::vector<Eigen::VectorXcd> cols{block.to_coords(seed_poly)};
  auto numerical_rank = [&](const Eigen::VectorXd &sv) {
    std::size_t k = 0;
    if (sv.size() == 0 || sv(0) == 0.0)
      return k;
    while (k < static_cast<std::size_t>(sv.size()) && sv(static_cast<Eigen::Index>(k)) > opt.tol * sv(0))
      ++k;
    return k;
  };
  auto assemble = [&] {
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(block.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
      m.col(static_cast<Eigen::Index>(j)) = cols[j];
    return m;
  };

  std::size_t rank = 1;
  std::size_t stable = 0;
  while (stable < opt.stable_samples) {
    if (cols.size() >= cap)
      throw ConvergenceError("span_basis " + lambda.str() + ": rank " + std::to_string(rank) +
                             " still growing after " + std::to_string(cols.size()) + " samples");
    Eigen::MatrixXcd u = random_unitary(pars.r(), rng);
    Eigen::MatrixXcd v = random_unitary(pars.s(), rng);
    cols.push_back(block.to_coords(group_act(seed_poly, from_eigen(u), from_eigen(v))));
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(assemble());
    std::size_t k = numerical_rank(svd.singularValues());
    if (k > rank) {
      rank = k;
      stable = 0;
    } else {
      ++stable;
    }
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(assemble(), Eigen::ComputeThinU);
  const Eigen::VectorXd &sv = svd.singularValues();
  ComponentBasis out;
  out.lambda = lambda;
  out.pars = pars;
  out.seed = seed;
  out.tol = opt.tol;
  out.stable_samples = opt.stable_samples;
  out.samples = cols.size();
  out.dim = numerical_rank(sv);
  out.residual = static_cast<Eigen::Index>(out.dim) < sv.size() ? sv(static_cast<Eigen::Index>(out.dim)) / sv(0) : 0.0;
  out.coords = svd.matrixU().leftCols(static_cast<Eigen::Index>(out.dim));
  for (std::size_t i = 0; i < out.dim; ++i)
    out.basis.push_back(block.from_coords(out.coords.col(static_cast<Eigen::Index>(i))));
  return out;
}

// E^lambda(z, zeta) = sum_i phi_i(z) conj(phi_i(zeta)).
inline Complex kernel_E(const ComponentBasis &b, const ComplexMatrix &z, const ComplexMatrix &zeta) {
  Complex total(0.0, 0.0);
  for (const auto &phi : b.basis)
    total += phi.evaluate(z) * std::conj(phi.evaluate(zeta));
  return total;
}

// E^lambda_zeta as a polynomial in z.
inline ComplexPolynomial kernel_section(const ComponentBasis &b, const ComplexMatrix &zeta) {
  ComplexPolynomial out(b.pars);
  for (const auto &phi : b.basis)
    out += phi * std::conj(phi.evaluate(zeta));
  return out;
}

// p(d/d conj(zeta)) applied to E^lambda(z, zeta), as a polynomial in z.
inline ComplexPolynomial kernel_antiholomorphic_derivative(const ComponentBasis &b,
                                                           const ComplexPolynomial &p,
                                                           const ComplexMatrix &zeta) {
  ComplexMatrix wbar(zeta.rows(), zeta.cols());
  for (std::size_t i = 0; i < zeta.rows(); ++i)
    for (std::size_t j = 0; j < zeta.cols(); ++j)
      wbar(i, j) = std::conj(zeta(i, j));
  ComplexPolynomial out(b.pars);
  for (const auto &phi : b.basis) {
    // conj(phi(zeta)) = phibar(conj zeta), holomorphic in w = conj zeta.
    ComplexPolynomial phibar(b.pars);
    for (const auto &[e, c] : phi.terms())
      phibar.add_term(e, std::conj(c));
    out += phi * apply_operator(p, phibar, false).evaluate(wbar);
  }
  return out;
}

// Fischer-orthogonal projection onto the component.
inline ComplexPolynomial project_component(const ComplexPolynomial &f, const ComponentBasis &b) {
  f.require_same_pars(b.basis.empty() ? f : b.basis.front());
  ComplexPolynomial out(f.pars());
  for (const auto &phi : b.basis)
    out += phi * fischer_inner(phi, f);
  return out;
}

// Components are cached per partition; every basis is built from the same seed.
class ComponentCache {
public:
  ComponentCache(TriplePars pars, std::uint64_t seed, SpanOptions opt = {})
      : pars_(pars), seed_(seed), opt_(opt) {}

  const ComponentBasis &get(const Partition &lambda) {
    auto it = cache_.find(lambda);
    if (it == cache_.end())
      it = cache_.emplace(lambda, span_basis(lambda, pars_, seed_, opt_)).first;
    return it->second;
  }

  const TriplePars &pars() const noexcept { return pars_; }

private:
  TriplePars pars_;
  std::uint64_t seed_;
  SpanOptions opt_;
  std::map<Partition, ComponentBasis> cache_;
};

// ---------------------------------------------------------------------------
// Shift identities for the determinant N_e of the maximal diagonal tripotent:
//   E^lambda(z,zeta)            = C N_e^n(z) conj(N_e(zeta))^n E^(lambda-n^(r))(z,zeta)
//   conj(N_e)^n(d_z) E^lambda_zeta  = conj(N_e(zeta))^n E^(lambda-n^(r))_zeta
//   N_e^n(d_conj(zeta)) E^lambda_zeta = N_e^n E^(lambda-n^(r))_zeta
// for zeta in the Peirce 2-space of e (the first r columns).

struct ShiftReport {
  Partition lambda;
  Int n = 0;
  TriplePars pars;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  Rational c_constant;
  std::size_t d_lambda = 0;
  std::size_t d_lower = 0;
  double residual20 = 0; // max relative deviation of the kernel identity
  double residual21 = 0; // max relative Fischer-norm deviation, derivative in z
  double residual22 = 0; // max relative Fischer-norm deviation, derivative in conj(zeta)
  std::size_t span_samples_lambda = 0;
  std::size_t span_samples_lower = 0;
};

template <class Rng>
ComplexMatrix random_point(std::size_t rows, std::size_t cols, std::size_t active_cols, Rng &rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < active_cols; ++j) {
      double re = gauss(rng);
      double im = gauss(rng);
      m(i, j) = Complex(re, im) / std::sqrt(2.0);
    }
  return m;
}

inline ShiftReport verify_shift_identity(const Partition &lambda, Int n, const TriplePars &pars,
                                         std::uint64_t seed, std::size_t samples,
                                         const SpanOptions &opt = {}) {
  if (lambda.rank() != pars.r())
    throw RankMismatch("verify_shift_identity: partition rank differs from r");
  if (pars.r() == 0)
    throw DomainError("verify_shift_identity: rank must be positive");
  if (n < 0 || lambda.last() < n)
    throw DomainError("verify_shift_identity: " + lambda.str() + " is too short for n=" +
                      std::to_string(n));
  const Partition lower = subtract_rect(lambda, n);
  ShiftReport rep;
  rep.lambda = lambda;
  rep.n = n;
  rep.pars = pars;
  rep.seed = seed;
  rep.samples = samples;
  rep.c_constant = cconst(pars.r(), n, lambda, Rational(pars.a()));

  const ComponentBasis top = span_basis(lambda, pars, seed, opt);
  const ComponentBasis low = span_basis(lower, pars, seed, opt);
  rep.d_lambda = top.dim;
  rep.d_lower = low.dim;
  rep.span_samples_lambda = top.samples;
  rep.span_samples_lower = low.samples;

  const double c = to_double(rep.c_constant);
  const ComplexPolynomial det_n =
      to_complex(minor_poly<Rational>(pars.r(), pars).pow(static_cast<std::uint64_t>(n)));

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t k = 0; k < samples; ++k) {
    const ComplexMatrix z = random_point(pars.r(), pars.s(), pars.s(), rng);
    const ComplexMatrix zeta = random_point(pars.r(), pars.s(), pars.r(), rng);
    const Complex nz = det_n.evaluate(z);
    const Complex nzeta_bar = std::conj(det_n.evaluate(zeta));

    const Complex lhs = kernel_E(top, z, zeta);
    const Complex rhs = c * nz * nzeta_bar * kernel_E(low, z, zeta);
    rep.residual20 = std::max(rep.residual20,
                              std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1e-300}));

    const ComplexPolynomial low_section = kernel_section(low, zeta);
    const ComplexPolynomial d21 = apply_operator(det_n, kernel_section(top, zeta), true);
    const ComplexPolynomial r21 = low_section * nzeta_bar;
    rep.residual21 = std::max(rep.residual21,
                              fischer_norm(d21 - r21) / std::max(fischer_norm(r21), 1e-300));

    const ComplexPolynomial d22 = kernel_antiholomorphic_derivative(top, det_n, zeta);
    const ComplexPolynomial r22 = det_n * low_section;
    rep.residual22 = std::max(rep.residual22,
                              fischer_norm(d22 - r22) / std::max(fischer_norm(r22), 1e-300));
  }
  return rep;
}

} // namespace stratmod
