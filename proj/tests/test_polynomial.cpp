#include <gtest/gtest.h>

#include <random>

#include "stratmod/determinantal.hpp"
#include "stratmod/peter_weyl.hpp"
#include "stratmod/polynomial.hpp"

using namespace stratmod;

namespace {

Exponent mono(const TriplePars &P, std::initializer_list<std::tuple<int, int, int>> vars) {
  Exponent e(P.nvars(), 0);
  for (auto [i, j, k] : vars)
    e[P.var(i, j)] = static_cast<std::uint32_t>(k);
  return e;
}

RationalPolynomial monomial(const TriplePars &P, const Exponent &e, Rational c = 1) {
  RationalPolynomial p(P);
  p.add_term(e, c);
  return p;
}

// Determinant by Gaussian elimination over the rationals.
Rational gauss_det(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0)
      ++piv;
    if (piv == n)
      return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k)
        a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

RationalMatrix random_rational(std::mt19937_64 &rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = Rational(num(rng), den(rng));
  return m;
}

RationalMatrix rational_product(const RationalMatrix &a, const RationalMatrix &b) { return a * b; }

ComplexPolynomial random_complex_poly(std::mt19937_64 &rng, const TriplePars &P, std::uint32_t deg,
                                      int terms) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> var(0, P.nvars() - 1);
  ComplexPolynomial p(P);
  for (int t = 0; t < terms; ++t) {
    Exponent e(P.nvars(), 0);
    for (std::uint32_t k = 0; k < deg; ++k)
      ++e[var(rng)];
    p.add_term(e, Complex(g(rng), g(rng)));
  }
  return p;
}

ComplexMatrix unitary(std::mt19937_64 &rng, std::size_t n) { return from_eigen(random_unitary(n, rng)); }

} // namespace

TEST(TriplePars, DimensionIdentity) {
  TriplePars P(2, 3);
  EXPECT_EQ(P.d(), 6u);
  EXPECT_EQ(P.b(), 1);
  EXPECT_EQ(P.nvars(), 6u);
  EXPECT_THROW(TriplePars(3, 2), DomainError);
}

TEST(Polynomial, ArithmeticDropsZeros) {
  TriplePars P(2, 2);
  auto x = RationalPolynomial::variable(P, 0, 0);
  auto y = RationalPolynomial::variable(P, 1, 1);
  auto f = (x + y) * (x - y);
  EXPECT_EQ(f, x * x - y * y);
  EXPECT_EQ(f.size(), 2u);
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ((x + y).pow(3).degree(), 3u);
  EXPECT_TRUE((x + y).pow(3).is_homogeneous());
}

TEST(Polynomial, ModeMismatchIsRejected) {
  auto a = RationalPolynomial::variable(TriplePars(2, 2), 0, 0);
  auto b = RationalPolynomial::variable(TriplePars(2, 3), 0, 0);
  EXPECT_THROW(a + b, RankMismatch);
  EXPECT_THROW(fischer_inner(a, b), RankMismatch);
}

TEST(Minor, Examples) {
  TriplePars P2(2, 2);
  EXPECT_EQ(minor_poly(1, P2), RationalPolynomial::variable(P2, 0, 0));
  auto det = RationalPolynomial::variable(P2, 0, 0) * RationalPolynomial::variable(P2, 1, 1) -
             RationalPolynomial::variable(P2, 0, 1) * RationalPolynomial::variable(P2, 1, 0);
  EXPECT_EQ(minor_poly(2, P2), det);
  EXPECT_THROW(minor_poly(3, P2), DomainError);
  EXPECT_THROW(minor_poly(0, P2), DomainError);

  TriplePars P3(3, 3);
  auto m3 = minor_poly(3, P3);
  EXPECT_EQ(m3.size(), 6u);
  EXPECT_EQ(m3.degree(), 3u);
  EXPECT_EQ(m3.evaluate(RationalMatrix::identity(3)), 1);
}

TEST(Minor, AgreesWithEliminationAtRandomPoints) {
  std::mt19937_64 rng(31);
  TriplePars P(3, 4);
  for (std::size_t m = 1; m <= 3; ++m) {
    auto f = minor_poly(m, P);
    for (int k = 0; k < 10; ++k) {
      auto z = random_rational(rng, 3, 4);
      std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          a[i][j] = z(i, j);
      EXPECT_EQ(f.evaluate(z), gauss_det(a));
    }
  }
}

TEST(Conical, Examples) {
  TriplePars P(2, 2);
  EXPECT_EQ(conical_poly(Partition{1, 0}, P), RationalPolynomial::variable(P, 0, 0));
  EXPECT_EQ(conical_poly(Partition{1, 1}, P), minor_poly(2, P));
  EXPECT_EQ(conical_poly(Partition{0, 0}, P), RationalPolynomial::constant(P, 1));
  EXPECT_THROW(conical_poly(Partition{1, 0, 0}, P), RankMismatch);
  RationalMatrix d(2, 2);
  d(0, 0) = 2;
  d(1, 1) = 3;
  EXPECT_EQ(conical_poly(Partition{2, 1}, P).evaluate(d), 12);
}

TEST(Conical, DiagonalValuesArePowerProducts) {
  std::mt19937_64 rng(32);
  for (std::size_t r = 1; r <= 3; ++r) {
    TriplePars P(r, r + 1);
    for (const auto &lam : partitions_up_to_weight(4, r)) {
      auto f = conical_poly(lam, P);
      EXPECT_EQ(f.degree(), static_cast<std::uint64_t>(lam.weight()));
      for (int k = 0; k < 5; ++k) {
        RationalMatrix z(r, r + 1);
        Rational expect = 1;
        for (std::size_t i = 0; i < r; ++i) {
          z(i, i) = Rational(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 3));
          for (Int p = 0; p < lam[i]; ++p)
            expect *= z(i, i);
        }
        EXPECT_EQ(f.evaluate(z), expect);
      }
    }
  }
}

TEST(NormalProject, MinorsBecomeSubMinors) {
  for (std::size_t r = 1; r <= 3; ++r) {
    TriplePars P(r, r + 1);
    for (std::size_t ell = 0; ell <= r; ++ell) {
      TriplePars sub(r - ell, r + 1 - ell);
      for (std::size_t m = 1; m <= r; ++m) {
        auto got = normal_project(minor_poly(m, P), ell);
        if (m > ell)
          EXPECT_EQ(got, minor_poly(m - ell, sub));
        else
          EXPECT_EQ(got, RationalPolynomial::constant(sub, 1));
      }
    }
  }
}

TEST(NormalProject, ZeroIsIdentity) {
  TriplePars P(2, 3);
  auto f = conical_poly(Partition{3, 1}, P) + RationalPolynomial::variable(P, 1, 2);
  EXPECT_EQ(normal_project(f, 0), f);
}

TEST(NormalProject, ConicalOnDiagonalGivesTruncatedPowers) {
  std::mt19937_64 rng(33);
  TriplePars P(3, 3);
  for (const auto &lam : partitions_up_to_weight(4, 3))
    for (std::size_t ell = 0; ell <= 3; ++ell) {
      auto g = normal_project(conical_poly(lam, P), ell);
      RationalMatrix w(3 - ell, 3 - ell);
      Rational expect = 1;
      for (std::size_t i = 0; i + ell < 3; ++i) {
        w(i, i) = Rational(static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 2));
        for (Int p = 0; p < lam[i + ell]; ++p)
          expect *= w(i, i);
      }
      EXPECT_EQ(g.evaluate(w), expect);
    }
}

TEST(Fischer, Examples) {
  TriplePars P(2, 2);
  auto z11 = RationalPolynomial::variable(P, 0, 0);
  auto z12 = RationalPolynomial::variable(P, 0, 1);
  EXPECT_EQ(fischer_inner(z11, z11), 1);
  EXPECT_EQ(fischer_inner(z11 * z11, z11 * z11), 2);
  EXPECT_EQ(fischer_inner(z11, z12), 0);
}

TEST(Fischer, MonomialBasisIsOrthogonalWithFactorialNorms) {
  TriplePars P(2, 2);
  for (std::uint32_t deg = 0; deg <= 4; ++deg) {
    std::vector<Exponent> monos;
    Exponent e(4, 0);
    for (e[0] = 0; e[0] <= deg; ++e[0])
      for (e[1] = 0; e[0] + e[1] <= deg; ++e[1])
        for (e[2] = 0; e[0] + e[1] + e[2] <= deg; ++e[2]) {
          e[3] = deg - e[0] - e[1] - e[2];
          monos.push_back(e);
        }
    for (const auto &a : monos)
      for (const auto &b : monos) {
        Rational expect = a == b ? multi_factorial<Rational>(a) : Rational(0);
        ASSERT_EQ(fischer_inner(monomial(P, a), monomial(P, b)), expect);
      }
  }
}

TEST(Fischer, ConjugateSymmetricAndPositive) {
  std::mt19937_64 rng(34);
  TriplePars P(2, 2);
  for (int k = 0; k < 50; ++k) {
    auto p = random_complex_poly(rng, P, 1 + k % 3, 4) + random_complex_poly(rng, P, 2, 3);
    auto q = random_complex_poly(rng, P, 1 + k % 3, 4);
    Complex pq = fischer_inner(p, q), qp = fischer_inner(q, p);
    EXPECT_NEAR(std::abs(pq - std::conj(qp)), 0.0, 1e-12);
    EXPECT_GT(fischer_inner(p, p).real(), 0.0);
    EXPECT_NEAR(fischer_inner(p, p).imag(), 0.0, 1e-12);
  }
}

TEST(Fischer, MultiplicationIsAdjointToConjugateDifferentiation) {
  std::mt19937_64 rng(35);
  TriplePars P(2, 2);
  for (int k = 0; k < 30; ++k) {
    auto p = random_complex_poly(rng, P, 1 + k % 2, 3);
    auto g = random_complex_poly(rng, P, 2, 4);
    auto f = random_complex_poly(rng, P, 2 + 1 + k % 2, 6);
    Complex lhs = fischer_inner(p * g, f);
    Complex rhs = fischer_inner(g, apply_operator(p, f, true));
    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-10 * (1 + std::abs(lhs)));
  }
}

TEST(GroupAction, Examples) {
  TriplePars P(2, 2);
  auto f = to_complex(RationalPolynomial::variable(P, 0, 0));
  auto id = ComplexMatrix::identity(2);
  EXPECT_EQ(group_act(f, id, id), f);
  ComplexMatrix swap(2, 2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  EXPECT_EQ(group_act(f, swap, swap), to_complex(RationalPolynomial::variable(P, 1, 1)));
  EXPECT_THROW(group_act(f, ComplexMatrix(2, 3), id), DomainError);
}

TEST(GroupAction, PreservesDegreeAndFischerProduct) {
  std::mt19937_64 rng(36);
  for (auto [r, s] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}}) {
    TriplePars P(r, s);
    for (std::uint32_t deg = 1; deg <= 4; ++deg) {
      auto p = random_complex_poly(rng, P, deg, 5);
      auto q = random_complex_poly(rng, P, deg, 5);
      auto u = unitary(rng, r);
      auto v = unitary(rng, s);
      auto kp = group_act(p, u, v), kq = group_act(q, u, v);
      EXPECT_EQ(kp.degree(), deg);
      EXPECT_NEAR(fischer_norm(kp), fischer_norm(p), 1e-10 * fischer_norm(p));
      EXPECT_NEAR(std::abs(fischer_inner(kp, kq) - fischer_inner(p, q)), 0.0,
                  1e-10 * fischer_norm(p) * fischer_norm(q));
    }
  }
}

TEST(GroupAction, ComposesAsLeftAction) {
  std::mt19937_64 rng(37);
  TriplePars P(2, 2);
  auto f = random_complex_poly(rng, P, 3, 6);
  auto u1 = unitary(rng, 2), v1 = unitary(rng, 2), u2 = unitary(rng, 2), v2 = unitary(rng, 2);
  auto twice = group_act(group_act(f, u1, v1), u2, v2);
  auto once = group_act(f, u2 * u1, v2 * v1);
  EXPECT_NEAR(fischer_norm(twice - once), 0.0, 1e-10 * fischer_norm(f));
}

TEST(GroupAction, DeterminantIsSemiInvariant) {
  std::mt19937_64 rng(38);
  TriplePars P(2, 2);
  auto det = to_complex(minor_poly(2, P));
  auto u = unitary(rng, 2), v = unitary(rng, 2);
  auto g = group_act(det, u, v);
  // k.det = conj(det u) det v . det
  Complex c = g.coefficient(mono(P, {{0, 0, 1}, {1, 1, 1}}));
  EXPECT_NEAR(fischer_norm(g - det * c), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(c), 1.0, 1e-12);
}

TEST(VanishingOrder, Examples) {
  TriplePars P3(3, 3), P2(2, 2);
  EXPECT_EQ(vanishing_order(conical_poly(Partition{2, 1, 0}, P3), diagonal_tripotent(1, P3)), 1u);
  EXPECT_EQ(vanishing_order(minor_poly(2, P2), RationalMatrix(2, 2)), 2u);
  EXPECT_EQ(vanishing_order(minor_poly(2, P2), diagonal_tripotent(1, P2)), 1u);
  EXPECT_THROW(vanishing_order(RationalPolynomial(P2), RationalMatrix(2, 2)), UndefinedOrder);
}

TEST(VanishingOrder, ShiftExpansionOfDeterminant) {
  TriplePars P(2, 2);
  auto z11 = RationalPolynomial::variable(P, 0, 0);
  auto z22 = RationalPolynomial::variable(P, 1, 1);
  EXPECT_EQ(shift(minor_poly(2, P), diagonal_tripotent(1, P)), z22 + minor_poly(2, P));
  EXPECT_EQ(shift(z11 * z11, diagonal_tripotent(1, P)),
            RationalPolynomial::constant(P, 1) + z11 * Rational(2) + z11 * z11);
}

TEST(VanishingOrder, StratumLawAtRankThree) {
  TriplePars P(3, 3);
  for (const auto &lam : partitions_up_to_weight(4, 3))
    for (std::size_t j = 0; j <= 3; ++j)
      ASSERT_EQ(vanishing_order(conical_poly(lam, P), diagonal_tripotent(j, P)),
                static_cast<std::uint64_t>(order_on_stratum(lam, j)))
          << lam.str() << " j=" << j;
}

// Independent route: the smallest k with a nonzero k-th partial derivative at zeta.
TEST(VanishingOrder, AgreesWithDerivativeOracle) {
  TriplePars P(2, 2);
  for (const auto &lam : partitions_up_to_weight(3, 2))
    for (std::size_t j = 0; j <= 2; ++j) {
      auto f = conical_poly(lam, P);
      auto zeta = diagonal_tripotent(j, P);
      std::uint64_t order = 0;
      bool found = false;
      for (std::uint32_t k = 0; !found && k <= f.degree(); ++k) {
        Exponent a(4, 0);
        for (a[0] = 0; a[0] <= k && !found; ++a[0])
          for (a[1] = 0; a[0] + a[1] <= k && !found; ++a[1])
            for (a[2] = 0; a[0] + a[1] + a[2] <= k && !found; ++a[2]) {
              a[3] = k - a[0] - a[1] - a[2];
              if (differentiate(f, a).evaluate(zeta) != 0) {
                order = k;
                found = true;
              }
            }
      }
      ASSERT_TRUE(found);
      EXPECT_EQ(vanishing_order(f, zeta), order);
    }
}

TEST(VanishingOrder, BoundHoldsAtRandomRankJPoints) {
  std::mt19937_64 rng(39);
  TriplePars P(3, 3);
  for (std::size_t j = 0; j <= 3; ++j)
    for (int trial = 0; trial < 3; ++trial) {
      RationalMatrix zeta = j == 0 ? RationalMatrix(3, 3)
                                   : rational_product(random_rational(rng, 3, j),
                                                      random_rational(rng, j, 3));
      for (const auto &lam : partitions_up_to_weight(4, 3)) {
        auto f = conical_poly(lam, P);
        EXPECT_GE(vanishing_order(f, zeta), static_cast<std::uint64_t>(order_on_stratum(lam, j)));
      }
    }
}
