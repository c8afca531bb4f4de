#pragma once

// Joint symbolic powers of the rank stratification (determinantal ideals).
// A partition lambda lies in the support of the ideal for the vanishing
// orders nu = (n_1 >= ... >= n_r) iff lambda_j + ... + lambda_r >= n_j for
// every j.

#include <algorithm>
#include <numeric>
#include <vector>

#include "stratmod/ideal.hpp"

namespace stratmod {

class SymbolicPowerSpec {
public:
  SymbolicPowerSpec() = default;

  explicit SymbolicPowerSpec(std::vector<Int> orders) : orders_(std::move(orders)) {
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      if (orders_[i] < 0)
        throw DomainError("vanishing orders must be nonnegative");
      if (i > 0 && orders_[i] > orders_[i - 1])
        throw DomainError("vanishing orders must be weakly decreasing");
    }
  }

  SymbolicPowerSpec(std::initializer_list<Int> orders)
      : SymbolicPowerSpec(std::vector<Int>(orders)) {}

  // (n^(ell+1), 0^(r-ell-1)): order >= n along the rank <= ell matrices.
  static SymbolicPowerSpec step1(std::size_t ell, Int n, std::size_t rank) {
    if (ell >= rank)
      throw DomainError("step1: ell must be < r");
    std::vector<Int> o(rank, 0);
    std::fill_n(o.begin(), ell + 1, n);
    return SymbolicPowerSpec(std::move(o));
  }

  std::size_t rank() const noexcept { return orders_.size(); }
  const std::vector<Int> &orders() const noexcept { return orders_; }
  Int operator[](std::size_t j) const { return orders_.at(j); }

  Int total() const {
    Int t = 0;
    for (Int n : orders_)
      t = detail::checked_add(t, n);
    return t;
  }

private:
  std::vector<Int> orders_;
};

// Tail sum lambda_{j+1} + ... + lambda_r: the vanishing order of the conical
// polynomial N^lambda at the rank-j diagonal tripotent.
inline Int order_on_stratum(const Partition &lambda, std::size_t j) {
  if (j > lambda.rank())
    throw DomainError("order_on_stratum: j=" + std::to_string(j) + " exceeds rank");
  Int t = 0;
  for (std::size_t m = j; m < lambda.rank(); ++m)
    t = detail::checked_add(t, lambda[m]);
  return t;
}

inline bool in_support(const Partition &lambda, const SymbolicPowerSpec &nu) {
  if (lambda.rank() != nu.rank())
    throw RankMismatch("in_support: partition rank " + std::to_string(lambda.rank()) +
                       " vs spec rank " + std::to_string(nu.rank()));
  Int tail = 0;
  for (std::size_t j = lambda.rank(); j-- > 0;) {
    tail += lambda[j];
    if (tail < nu[j])
      return false;
  }
  return true;
}

// Minimal elements of the support. Candidates are enumerated in the box
// lambda_1 <= n_1, |lambda| <= sum_j n_j; a candidate is minimal iff every
// single-box removal that stays a partition leaves the support.
inline IdealSupport minimal_generators(const SymbolicPowerSpec &nu) {
  const std::size_t r = nu.rank();
  std::vector<Partition> mins;
  if (r == 0)
    return IdealSupport::unit(0);
  for_each_partition(r, nu[0], nu.total(), [&](const Partition &lam) {
    if (!in_support(lam, nu))
      return;
    std::vector<Int> p(lam.parts());
    for (std::size_t j = 0; j < r; ++j) {
      bool removable = p[j] > 0 && (j + 1 == r || p[j] > p[j + 1]);
      if (!removable)
        continue;
      --p[j];
      bool still = in_support(Partition(p), nu);
      ++p[j];
      if (still)
        return;
    }
    mins.push_back(lam);
  });
  return IdealSupport::minimal_full_set(r, mins);
}

// Minimal generators of the ideal of polynomials vanishing to order >= n on
// the matrices of rank <= ell: the hats of all weight-n partitions of rank r-ell.
inline IdealSupport step1_generators(std::size_t ell, Int n, std::size_t r) {
  if (ell >= r)
    throw DomainError("step1_generators: ell must be < r");
  if (n < 0)
    throw DomainError("step1_generators: negative n");
  std::vector<Partition> gens;
  for (const Partition &alpha : partitions_of_weight(n, r - ell))
    gens.push_back(hat(alpha, ell, r));
  return IdealSupport::minimal_full_set(r, gens);
}

// Comparison of a computed minimal set against an externally listed one.
struct ListedComparison {
  IdealSupport generators;
  std::vector<Partition> listed;
  bool listed_subset_ok = false;        // every listed partition is a computed generator
  std::vector<Partition> extra_minimal; // computed but not listed
  std::vector<Partition> listed_not_minimal;
};

inline ListedComparison compare_with_listed(const SymbolicPowerSpec &nu,
                                            std::vector<Partition> listed) {
  ListedComparison out{minimal_generators(nu), std::move(listed), true, {}, {}};
  const auto &gens = out.generators.generators();
  for (const Partition &p : out.listed) {
    if (std::find(gens.begin(), gens.end(), p) == gens.end()) {
      out.listed_subset_ok = false;
      out.listed_not_minimal.push_back(p);
    }
  }
  for (const Partition &g : gens)
    if (std::find(out.listed.begin(), out.listed.end(), g) == out.listed.end())
      out.extra_minimal.push_back(g);
  return out;
}

// Published minimal sets for two worked examples; empty for any other nu.
inline std::vector<Partition> published_minimal_set(const SymbolicPowerSpec &nu) {
  if (nu.orders() == std::vector<Int>{10, 5, 1})
    return {{5, 4, 1}, {5, 3, 2}};
  if (nu.orders() == std::vector<Int>{15, 5, 1})
    return {{10, 4, 1}, {9, 5, 1}, {8, 6, 1}, {10, 3, 2},
            {9, 4, 2},  {8, 5, 2}, {9, 3, 3}, {8, 4, 3}};
  return {};
}

} // namespace stratmod
