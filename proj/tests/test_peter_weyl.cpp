#include <gtest/gtest.h>

#include <random>

#include "stratmod/kernel_coeffs.hpp"
#include "stratmod/peter_weyl.hpp"

using namespace stratmod;

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t b = 1;
  for (std::uint64_t i = 1; i <= k; ++i)
    b = b * (n - k + i) / i;
  return b;
}

ComplexMatrix rank_point(std::size_t rank, std::mt19937_64 &rng) {
  ComplexMatrix m(2, 2);
  if (rank == 0)
    return m;
  auto a = random_point(2, rank, rank, rng);
  auto b = random_point(rank, 2, 2, rng);
  return a * b;
}

} // namespace

TEST(PeterWeyl, DimensionExamples) {
  TriplePars P(2, 2);
  EXPECT_EQ(span_basis(Partition{1, 0}, P, 1).dim, 4u);
  EXPECT_EQ(span_basis(Partition{1, 1}, P, 1).dim, 1u);
  EXPECT_EQ(span_basis(Partition{2, 0}, P, 1).dim, 9u);
  EXPECT_EQ(span_basis(Partition{2, 1}, P, 1).dim, 4u);
}

TEST(PeterWeyl, RectangularDimensions) {
  // Schur functor dimensions s_lambda(1^2) s_lambda(1^3) at r=2, s=3.
  TriplePars P(2, 3);
  EXPECT_EQ(span_basis(Partition{1, 0}, P, 2).dim, 6u);
  EXPECT_EQ(span_basis(Partition{1, 1}, P, 2).dim, 3u);
  EXPECT_EQ(span_basis(Partition{2, 0}, P, 2).dim, 18u);
  EXPECT_EQ(span_basis(Partition{2, 1}, P, 2).dim, 16u);
}

TEST(PeterWeyl, GradedCompleteness) {
  TriplePars P(2, 2);
  for (Int n = 0; n <= 4; ++n) {
    std::size_t total = 0;
    for (const auto &lam : partitions_of_weight(n, 2))
      total += span_basis(lam, P, 5).dim;
    EXPECT_EQ(total, binomial(P.d() + n - 1, n)) << "n=" << n;
  }
}

TEST(PeterWeyl, BasisIsOrthonormal) {
  TriplePars P(2, 2);
  for (const auto &lam : partitions_up_to_weight(4, 2)) {
    auto b = span_basis(lam, P, 3);
    for (std::size_t i = 0; i < b.dim; ++i)
      for (std::size_t j = 0; j < b.dim; ++j) {
        Complex ip = fischer_inner(b.basis[i], b.basis[j]);
        EXPECT_NEAR(std::abs(ip - Complex(i == j ? 1.0 : 0.0, 0.0)), 0.0, 1e-9);
      }
    EXPECT_LT(b.residual, 1e-9);
    EXPECT_EQ(b.stable_samples, 5u);
  }
}

TEST(PeterWeyl, SameSeedIsBitIdentical) {
  TriplePars P(2, 2);
  auto a = span_basis(Partition{2, 1}, P, 42);
  auto b = span_basis(Partition{2, 1}, P, 42);
  EXPECT_EQ(a.samples, b.samples);
  ASSERT_EQ(a.coords.rows(), b.coords.rows());
  ASSERT_EQ(a.coords.cols(), b.coords.cols());
  for (Eigen::Index i = 0; i < a.coords.size(); ++i)
    ASSERT_EQ(a.coords.data()[i], b.coords.data()[i]);
}

TEST(PeterWeyl, SampleCapRaisesConvergenceError) {
  SpanOptions opt;
  opt.max_samples = 3;
  EXPECT_THROW(span_basis(Partition{2, 0}, TriplePars(2, 2), 1, opt), ConvergenceError);
}

TEST(PeterWeyl, RankOneClosedForm) {
  TriplePars P(1, 1);
  std::mt19937_64 rng(4);
  for (Int m = 0; m <= 5; ++m) {
    auto b = span_basis(Partition{m}, P, 9);
    ASSERT_EQ(b.dim, 1u);
    double fact = 1;
    for (Int k = 2; k <= m; ++k)
      fact *= static_cast<double>(k);
    for (int t = 0; t < 5; ++t) {
      auto z = random_point(1, 1, 1, rng), w = random_point(1, 1, 1, rng);
      Complex expect = std::pow(z(0, 0) * std::conj(w(0, 0)), static_cast<int>(m)) / fact;
      EXPECT_NEAR(std::abs(kernel_E(b, z, w) - expect), 0.0, 1e-12 * (1 + std::abs(expect)));
    }
  }
}

TEST(PeterWeyl, SchurValueAtIdentity) {
  TriplePars P(2, 2);
  auto e = diagonal_tripotent<Complex>(2, P);
  for (const auto &lam : partitions_up_to_weight(4, 2)) {
    auto b = span_basis(lam, P, 13);
    double expect = static_cast<double>(b.dim) / to_double(pochhammer(P.genus_ratio(), lam, 2));
    EXPECT_NEAR(kernel_E(b, e, e).real(), expect, 1e-8) << lam.str();
    EXPECT_NEAR(kernel_E(b, e, e).imag(), 0.0, 1e-8);
  }
}

TEST(PeterWeyl, ReproducingProperty) {
  TriplePars P(2, 2);
  std::mt19937_64 rng(14);
  std::normal_distribution<double> g;
  for (const auto &lam : partitions_up_to_weight(4, 2)) {
    auto b = span_basis(lam, P, 15);
    for (int t = 0; t < 3; ++t) {
      ComplexPolynomial p(P);
      for (const auto &phi : b.basis)
        p += phi * Complex(g(rng), g(rng));
      auto zeta = random_point(2, 2, 2, rng);
      Complex got = fischer_inner(kernel_section(b, zeta), p);
      EXPECT_NEAR(std::abs(got - p.evaluate(zeta)), 0.0, 1e-8 * fischer_norm(p)) << lam.str();
    }
  }
}

TEST(PeterWeyl, VanishesExactlyBelowLength) {
  TriplePars P(2, 2);
  std::mt19937_64 rng(16);
  for (const auto &lam : std::vector<Partition>{{0, 0}, {1, 0}, {2, 0}, {1, 1}, {2, 1}, {2, 2}}) {
    auto b = span_basis(lam, P, 17);
    for (std::size_t rank = 0; rank <= 2; ++rank)
      for (int t = 0; t < 3; ++t) {
        auto zeta = rank_point(rank, rng);
        double sup = 0;
        for (int k = 0; k < 20; ++k)
          sup = std::max(sup, std::abs(kernel_E(b, random_point(2, 2, 2, rng), zeta)));
        if (lam.length() > rank)
          EXPECT_LE(sup, 1e-8) << lam.str() << " rank " << rank;
        else
          EXPECT_GT(sup, 1e-6) << lam.str() << " rank " << rank;
      }
  }
}

TEST(PeterWeyl, ProjectComponentExamples) {
  TriplePars P(2, 2);
  auto b21 = span_basis(Partition{2, 1}, P, 18);
  auto b30 = span_basis(Partition{3, 0}, P, 18);
  auto n21 = to_complex(conical_poly(Partition{2, 1}, P));
  auto n30 = to_complex(conical_poly(Partition{3, 0}, P));
  EXPECT_NEAR(fischer_norm(project_component(n21, b21) - n21), 0.0, 1e-9);
  EXPECT_NEAR(fischer_norm(project_component(n30, b21)), 0.0, 1e-9);
  EXPECT_NEAR(fischer_norm(project_component(n21, b30)), 0.0, 1e-9);
  auto other_degree = to_complex(conical_poly(Partition{1, 1}, P));
  EXPECT_TRUE(project_component(other_degree, b21).is_zero());
}

TEST(ShiftIdentity, TwoOneAtRankTwo) {
  auto rep = verify_shift_identity(Partition{2, 1}, 1, TriplePars(2, 2), 7, 20);
  EXPECT_EQ(rep.c_constant, Rational(1, 3));
  EXPECT_EQ(rep.d_lambda, 4u);
  EXPECT_EQ(rep.d_lower, 4u);
  EXPECT_LE(rep.residual20, 1e-8);
  EXPECT_LE(rep.residual21, 1e-8);
  EXPECT_LE(rep.residual22, 1e-8);
}

TEST(ShiftIdentity, DeterminantOverTrivialComponent) {
  auto rep = verify_shift_identity(Partition{1, 1}, 1, TriplePars(2, 2), 7, 20);
  EXPECT_EQ(rep.c_constant, Rational(1, 2));
  EXPECT_EQ(rep.d_lower, 1u);
  EXPECT_LE(rep.residual20, 1e-8);
  EXPECT_LE(rep.residual21, 1e-8);
  EXPECT_LE(rep.residual22, 1e-8);
}

TEST(ShiftIdentity, RankOne) {
  for (Int m = 1; m <= 4; ++m) {
    auto rep = verify_shift_identity(Partition{m}, 1, TriplePars(1, 1), 3, 10);
    EXPECT_EQ(rep.c_constant, Rational(1, m));
    EXPECT_LE(rep.residual20, 1e-12);
  }
}

TEST(ShiftIdentity, RectangularAndHigherPower) {
  auto rep = verify_shift_identity(Partition{3, 2}, 2, TriplePars(2, 3), 7, 20);
  EXPECT_EQ(rep.c_constant, Rational(1, 24));
  EXPECT_LE(rep.residual20, 1e-8);
  EXPECT_LE(rep.residual21, 1e-8);
  EXPECT_LE(rep.residual22, 1e-8);
}

TEST(ShiftIdentity, TooShortPartitionIsRejected) {
  EXPECT_THROW(verify_shift_identity(Partition{2, 0}, 1, TriplePars(2, 2), 7, 5), DomainError);
}
