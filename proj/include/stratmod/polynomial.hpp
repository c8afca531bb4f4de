#pragma once

// Sparse polynomials in the entries z_ij of an r x s matrix, with exact
// rational or complex floating coefficients. Terms are kept in graded order
// (total degree first, then lexicographic exponents) so the lowest-degree
// part of a polynomial is its first terms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "stratmod/partition.hpp"
#include "stratmod/rational.hpp"

namespace stratmod {

// Rectangular matrix triple C^{r x s}: rank r, multiplicities a = 2 and
// b = s - r, dimension d = r s.
class TriplePars {
public:
  TriplePars() = default;
  TriplePars(std::size_t r, std::size_t s) : r_(r), s_(s) {
    if (s < r)
      throw DomainError("triple parameters need s >= r");
    // d/r = 1 + (a/2)(r-1) + b, multiplied through by r.
    if (r > 0 && static_cast<Int>(d()) != static_cast<Int>(r) * (1 + (a() / 2) * static_cast<Int>(r - 1) + b()))
      throw DomainError("inconsistent triple multiplicities");
  }

  std::size_t r() const noexcept { return r_; }
  std::size_t s() const noexcept { return s_; }
  Int a() const noexcept { return 2; }
  Int b() const noexcept { return static_cast<Int>(s_) - static_cast<Int>(r_); }
  std::size_t d() const noexcept { return r_ * s_; }
  std::size_t nvars() const noexcept { return r_ * s_; }
  std::size_t var(std::size_t i, std::size_t j) const noexcept { return i * s_ + j; }

  // d / r as an exact rational; s for the matrix triple.
  Rational genus_ratio() const { return Rational(static_cast<Int>(s_)); }

  friend bool operator==(const TriplePars &, const TriplePars &) = default;

private:
  std::size_t r_ = 0;
  std::size_t s_ = 0;
};

template <class S>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = S(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  S &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<S> &data() const noexcept { return data_; }

  Matrix operator*(const Matrix &o) const {
    if (cols_ != o.rows_)
      throw DomainError("matrix product shape mismatch");
    Matrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k)
        for (std::size_t j = 0; j < o.cols_; ++j)
          out(i, j) += (*this)(i, k) * o(k, j);
    return out;
  }

  Matrix adjoint() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        out(j, i) = conj_scalar((*this)(i, j));
    return out;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

using RationalMatrix = Matrix<Rational>;
using ComplexMatrix = Matrix<Complex>;

// e_[ell] = E_11 + ... + E_ll.
template <class S = Rational>
Matrix<S> diagonal_tripotent(std::size_t ell, const TriplePars &pars) {
  if (ell > pars.r())
    throw DomainError("tripotent rank exceeds r");
  Matrix<S> m(pars.r(), pars.s());
  for (std::size_t i = 0; i < ell; ++i)
    m(i, i) = S(1);
  return m;
}

using Exponent = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const Exponent &e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

struct GradedLess {
  bool operator()(const Exponent &a, const Exponent &b) const {
    auto da = total_degree(a), db = total_degree(b);
    if (da != db)
      return da < db;
    return a < b;
  }
};

template <class S>
class Polynomial {
public:
  using Scalar = S;
  using TermMap = std::map<Exponent, S, GradedLess>;

  Polynomial() = default;
  explicit Polynomial(const TriplePars &pars) : pars_(pars) {}

  static Polynomial constant(const TriplePars &pars, const S &c) {
    Polynomial p(pars);
    p.add_term(Exponent(pars.nvars(), 0), c);
    return p;
  }

  // z_ij with 0-based indices.
  static Polynomial variable(const TriplePars &pars, std::size_t i, std::size_t j) {
    if (i >= pars.r() || j >= pars.s())
      throw DomainError("variable index out of range");
    Exponent e(pars.nvars(), 0);
    e[pars.var(i, j)] = 1;
    Polynomial p(pars);
    p.add_term(std::move(e), S(1));
    return p;
  }

  const TriplePars &pars() const noexcept { return pars_; }
  const TermMap &terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Exponent &e, const S &c) {
    if (e.size() != pars_.nvars())
      throw DomainError("exponent length does not match the number of variables");
    if (is_zero_scalar(c))
      return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_scalar(it->second))
        terms_.erase(it);
    }
  }

  S coefficient(const Exponent &e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? S(0) : it->second;
  }

  std::uint64_t degree() const {
    return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first);
  }

  // Lowest total degree among the terms.
  std::uint64_t min_degree() const {
    if (terms_.empty())
      throw UndefinedOrder("min_degree of the zero polynomial");
    return total_degree(terms_.begin()->first);
  }

  bool is_homogeneous() const {
    return terms_.empty() || min_degree() == degree();
  }

  Polynomial &operator+=(const Polynomial &o) {
    require_same_pars(o);
    for (const auto &[e, c] : o.terms_)
      add_term(e, c);
    return *this;
  }

  Polynomial &operator-=(const Polynomial &o) {
    require_same_pars(o);
    for (const auto &[e, c] : o.terms_)
      add_term(e, -c);
    return *this;
  }

  Polynomial &operator*=(const S &c) {
    if (is_zero_scalar(c)) {
      terms_.clear();
      return *this;
    }
    for (auto &[e, v] : terms_)
      v *= c;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const S &c) { return a *= c; }
  friend Polynomial operator*(const S &c, Polynomial a) { return a *= c; }

  friend Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    a.require_same_pars(b);
    Polynomial out(a.pars_);
    Exponent e(a.pars_.nvars());
    for (const auto &[ea, ca] : a.terms_)
      for (const auto &[eb, cb] : b.terms_) {
        for (std::size_t v = 0; v < e.size(); ++v)
          e[v] = ea[v] + eb[v];
        out.add_term(e, ca * cb);
      }
    return out;
  }

  Polynomial &operator*=(const Polynomial &o) { return *this = *this * o; }

  Polynomial pow(std::uint64_t k) const {
    Polynomial result = constant(pars_, S(1));
    Polynomial base = *this;
    while (k) {
      if (k & 1)
        result *= base;
      k >>= 1;
      if (k)
        base *= base;
    }
    return result;
  }

  S evaluate(const Matrix<S> &z) const {
    if (z.rows() != pars_.r() || z.cols() != pars_.s())
      throw DomainError("evaluation point has the wrong shape");
    S total(0);
    for (const auto &[e, c] : terms_) {
      S term = c;
      for (std::size_t v = 0; v < e.size(); ++v)
        for (std::uint32_t k = 0; k < e[v]; ++k)
          term *= z.data()[v];
      total += term;
    }
    return total;
  }

  // Homogeneous part of the given degree.
  Polynomial graded_part(std::uint64_t deg) const {
    Polynomial out(pars_);
    for (const auto &[e, c] : terms_)
      if (total_degree(e) == deg)
        out.terms_.emplace(e, c);
    return out;
  }

  friend bool operator==(const Polynomial &a, const Polynomial &b) {
    return a.pars_ == b.pars_ && a.terms_ == b.terms_;
  }

  void require_same_pars(const Polynomial &o) const {
    if (!(pars_ == o.pars_))
      throw RankMismatch("polynomials live on different matrix spaces");
  }

private:
  TriplePars pars_;
  TermMap terms_;
};

using RationalPolynomial = Polynomial<Rational>;
using ComplexPolynomial = Polynomial<Complex>;

template <class S>
S factorial_scalar(std::uint32_t n) {
  S f(1);
  for (std::uint32_t k = 2; k <= n; ++k)
    f *= S(static_cast<Int>(k));
  return f;
}

// alpha! = prod_v alpha_v!
template <class S>
S multi_factorial(const Exponent &e) {
  S f(1);
  for (auto x : e)
    if (x > 1)
      f *= factorial_scalar<S>(x);
  return f;
}

inline ComplexPolynomial to_complex(const RationalPolynomial &p) {
  ComplexPolynomial out(p.pars());
  for (const auto &[e, c] : p.terms())
    out.add_term(e, to_complex(c));
  return out;
}

inline ComplexMatrix to_complex(const RationalMatrix &m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = to_complex(m(i, j));
  return out;
}

// Leading principal m x m minor N_m(z) = det(z_ij)_{i,j<m}, expanded over
// permutations.
template <class S = Rational>
Polynomial<S> minor_poly(std::size_t m, const TriplePars &pars) {
  if (m < 1 || m > pars.r())
    throw DomainError("minor size must lie in [1, r]");
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial<S> out(pars);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (perm[i] > perm[j])
          ++inversions;
    Exponent e(pars.nvars(), 0);
    for (std::size_t i = 0; i < m; ++i)
      e[pars.var(i, perm[i])] = 1;
    out.add_term(e, S(inversions % 2 ? -1 : 1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// N^lambda = N_1^(l1-l2) N_2^(l2-l3) ... N_r^(lr).
template <class S = Rational>
Polynomial<S> conical_poly(const Partition &lambda, const TriplePars &pars) {
  if (lambda.rank() != pars.r())
    throw RankMismatch("conical_poly: partition rank " + std::to_string(lambda.rank()) +
                       " differs from r=" + std::to_string(pars.r()));
  auto out = Polynomial<S>::constant(pars, S(1));
  for (std::size_t m = 1; m <= pars.r(); ++m) {
    Int next = m < pars.r() ? lambda[m] : 0;
    Int k = lambda[m - 1] - next;
    if (k > 0)
      out *= minor_poly<S>(m, pars).pow(static_cast<std::uint64_t>(k));
  }
  return out;
}

// pi_c f(w) = f(c + w) for c = e_[ell], with w on the Peirce 0-space: the
// bottom-right (r-ell) x (s-ell) block. Every other coordinate is frozen at
// its value in c.
template <class S>
Polynomial<S> normal_project(const Polynomial<S> &f, std::size_t ell) {
  const TriplePars &pars = f.pars();
  if (ell > pars.r())
    throw DomainError("normal_project: ell exceeds r");
  TriplePars sub(pars.r() - ell, pars.s() - ell);
  Polynomial<S> out(sub);
  for (const auto &[e, c] : f.terms()) {
    bool vanishes = false;
    Exponent we(sub.nvars(), 0);
    for (std::size_t i = 0; i < pars.r() && !vanishes; ++i)
      for (std::size_t j = 0; j < pars.s(); ++j) {
        auto x = e[pars.var(i, j)];
        if (x == 0)
          continue;
        if (i >= ell && j >= ell)
          we[sub.var(i - ell, j - ell)] = x;
        else if (i != j) { // frozen at 0
          vanishes = true;
          break;
        }
        // frozen at 1 on the diagonal of c: factor 1
      }
    if (!vanishes)
      out.add_term(we, c);
  }
  return out;
}

// Fischer-Fock product (p|q) = sum_alpha conj(p_alpha) q_alpha alpha!,
// anti-linear in p.
template <class S>
S fischer_inner(const Polynomial<S> &p, const Polynomial<S> &q) {
  p.require_same_pars(q);
  S total(0);
  const auto &small = p.size() <= q.size() ? p.terms() : q.terms();
  const auto &large = p.size() <= q.size() ? q.terms() : p.terms();
  for (const auto &[e, c] : small) {
    auto it = large.find(e);
    if (it == large.end())
      continue;
    const S &pc = p.size() <= q.size() ? c : it->second;
    const S &qc = p.size() <= q.size() ? it->second : c;
    total += conj_scalar(pc) * qc * multi_factorial<S>(e);
  }
  return total;
}

inline double fischer_norm(const ComplexPolynomial &p) {
  return std::sqrt(std::max(0.0, fischer_inner(p, p).real()));
}

// f(zeta + z) as a polynomial in z, by exact binomial expansion.
template <class S>
Polynomial<S> shift(const Polynomial<S> &f, const Matrix<S> &zeta) {
  const TriplePars &pars = f.pars();
  if (zeta.rows() != pars.r() || zeta.cols() != pars.s())
    throw DomainError("shift point has the wrong shape");
  Polynomial<S> out(pars);
  const std::size_t nv = pars.nvars();
  std::vector<std::pair<Exponent, S>> partial, next;
  for (const auto &[e, c] : f.terms()) {
    partial.assign(1, {Exponent(nv, 0), c});
    for (std::size_t v = 0; v < nv; ++v) {
      const std::uint32_t k = e[v];
      if (k == 0)
        continue;
      const S &a = zeta.data()[v];
      next.clear();
      for (auto &[pe, pc] : partial) {
        if (is_zero_scalar(a)) {
          pe[v] = k;
          next.emplace_back(std::move(pe), std::move(pc));
          continue;
        }
        // (a + z_v)^k = sum_i C(k,i) a^(k-i) z_v^i
        S apow(1);
        std::vector<S> powers(k + 1);
        for (std::uint32_t i = 0; i <= k; ++i) {
          powers[k - i] = apow;
          apow *= a;
        }
        S binom(1);
        for (std::uint32_t i = 0; i <= k; ++i) {
          Exponent ne = pe;
          ne[v] = i;
          next.emplace_back(std::move(ne), pc * binom * powers[i]);
          binom = binom * S(static_cast<Int>(k - i)) / S(static_cast<Int>(i + 1));
        }
      }
      std::swap(partial, next);
    }
    for (const auto &[pe, pc] : partial)
      out.add_term(pe, pc);
  }
  return out;
}

// ord_zeta(f): lowest total degree in the Taylor expansion of f at zeta.
template <class S>
std::uint64_t vanishing_order(const Polynomial<S> &f, const Matrix<S> &zeta) {
  if (f.is_zero())
    throw UndefinedOrder("the zero polynomial vanishes to infinite order");
  return shift(f, zeta).min_degree();
}

// Substitutes z_v -> forms[v] for every variable. forms live on the target space.
template <class S>
Polynomial<S> substitute_linear(const Polynomial<S> &f, const std::vector<Polynomial<S>> &forms,
                                const TriplePars &target) {
  if (forms.size() != f.pars().nvars())
    throw DomainError("substitute_linear: one form per variable required");
  std::vector<std::vector<Polynomial<S>>> powers(forms.size());
  Polynomial<S> out(target);
  for (const auto &[e, c] : f.terms()) {
    auto term = Polynomial<S>::constant(target, c);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0)
        continue;
      auto &pw = powers[v];
      if (pw.empty())
        pw.push_back(Polynomial<S>::constant(target, S(1)));
      while (pw.size() <= e[v])
        pw.push_back(pw.back() * forms[v]);
      term *= pw[e[v]];
    }
    out += term;
  }
  return out;
}

// (k.f)(z) = f(u^* z v) for k = (u, v) in U(r) x U(s).
inline ComplexPolynomial group_act(const ComplexPolynomial &f, const ComplexMatrix &u,
                                   const ComplexMatrix &v) {
  const TriplePars &pars = f.pars();
  if (u.rows() != u.cols() || v.rows() != v.cols())
    throw DomainError("group_act: u and v must be square");
  if (u.rows() != pars.r() || v.rows() != pars.s())
    throw DomainError("group_act: u must be r x r and v must be s x s");
  // (u^* z v)_ij = sum_kl conj(u_ki) z_kl v_lj
  std::vector<ComplexPolynomial> forms;
  forms.reserve(pars.nvars());
  for (std::size_t i = 0; i < pars.r(); ++i)
    for (std::size_t j = 0; j < pars.s(); ++j) {
      ComplexPolynomial form(pars);
      for (std::size_t k = 0; k < pars.r(); ++k)
        for (std::size_t l = 0; l < pars.s(); ++l) {
          Complex c = std::conj(u(k, i)) * v(l, j);
          if (c == Complex(0.0, 0.0))
            continue;
          Exponent e(pars.nvars(), 0);
          e[pars.var(k, l)] = 1;
          form.add_term(e, c);
        }
      forms.push_back(std::move(form));
    }
  return substitute_linear(f, forms, pars);
}

// d^alpha f.
template <class S>
Polynomial<S> differentiate(const Polynomial<S> &f, const Exponent &alpha) {
  Polynomial<S> out(f.pars());
  for (const auto &[e, c] : f.terms()) {
    bool ok = true;
    S coeff = c;
    Exponent ne = e;
    for (std::size_t v = 0; v < e.size() && ok; ++v) {
      if (alpha[v] > e[v]) {
        ok = false;
        break;
      }
      for (std::uint32_t k = 0; k < alpha[v]; ++k)
        coeff *= S(static_cast<Int>(e[v] - k));
      ne[v] = e[v] - alpha[v];
    }
    if (ok)
      out.add_term(ne, coeff);
  }
  return out;
}

// Constant-coefficient operator p(d) f = sum_alpha p_alpha d^alpha f. With
// conjugate = true the operator is conj(p)(d), the one whose adjoint for the
// Fischer product is multiplication by p.
template <class S>
Polynomial<S> apply_operator(const Polynomial<S> &p, const Polynomial<S> &f, bool conjugate) {
  p.require_same_pars(f);
  Polynomial<S> out(f.pars());
  for (const auto &[alpha, c] : p.terms())
    out += differentiate(f, alpha) * (conjugate ? conj_scalar(c) : c);
  return out;
}

} // namespace stratmod
