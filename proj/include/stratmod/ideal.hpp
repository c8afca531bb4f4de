#pragma once

// K-invariant ideals represented by the unique antichain of partitions whose
// partition ideals sum to the ideal. The Peter-Weyl support of the ideal is
// the up-set {mu : mu >= lambda for some generator lambda}.

#include <algorithm>
#include <functional>
#include <span>
#include <vector>

#include "stratmod/partition.hpp"

namespace stratmod {

class IdealSupport {
public:
  // The zero ideal of the given rank.
  explicit IdealSupport(std::size_t rank = 0) : rank_(rank) {}

  // Reduces an arbitrary finite generating set to its minimal elements.
  static IdealSupport minimal_full_set(std::size_t rank, std::span<const Partition> gens) {
    for (const Partition &g : gens)
      if (g.rank() != rank)
        throw RankMismatch("generator " + g.str() + " does not have rank " +
                           std::to_string(rank));
    std::vector<Partition> uniq(gens.begin(), gens.end());
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());

    IdealSupport out(rank);
    for (const Partition &cand : uniq) {
      bool dominated = std::any_of(uniq.begin(), uniq.end(), [&](const Partition &o) {
        return less(o, cand);
      });
      if (!dominated)
        out.gens_.push_back(cand);
    }
    out.normalize();
    return out;
  }

  static IdealSupport minimal_full_set(std::size_t rank, std::initializer_list<Partition> gens) {
    return minimal_full_set(rank, std::span<const Partition>(gens.begin(), gens.size()));
  }

  // The whole polynomial ring: generated by the zero partition.
  static IdealSupport unit(std::size_t rank) {
    IdealSupport out(rank);
    out.gens_.push_back(Partition::zero(rank));
    return out;
  }

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<Partition> &generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }

  bool contains(const Partition &mu) const {
    if (mu.rank() != rank_)
      throw RankMismatch("partition " + mu.str() + " does not have rank " +
                         std::to_string(rank_));
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const Partition &g) { return leq(g, mu); });
  }

  friend bool operator==(const IdealSupport &, const IdealSupport &) = default;

private:
  // Descending lexicographic order.
  void normalize() { std::sort(gens_.begin(), gens_.end(), std::greater<>()); }

  std::size_t rank_;
  std::vector<Partition> gens_;
};

inline IdealSupport minimal_full_set(std::size_t rank, std::span<const Partition> gens) {
  return IdealSupport::minimal_full_set(rank, gens);
}

inline bool contains_partition(const IdealSupport &ideal, const Partition &mu) {
  return ideal.contains(mu);
}

inline void require_same_rank(const IdealSupport &a, const IdealSupport &b) {
  if (a.rank() != b.rank())
    throw RankMismatch("ideal ranks differ: " + std::to_string(a.rank()) + " vs " +
                       std::to_string(b.rank()));
}

inline IdealSupport sum(const IdealSupport &a, const IdealSupport &b) {
  require_same_rank(a, b);
  std::vector<Partition> all(a.generators());
  all.insert(all.end(), b.generators().begin(), b.generators().end());
  return IdealSupport::minimal_full_set(a.rank(), all);
}

// Up-set intersection: the minimal elements among pairwise joins.
inline IdealSupport intersect(const IdealSupport &a, const IdealSupport &b) {
  require_same_rank(a, b);
  std::vector<Partition> joins;
  joins.reserve(a.generators().size() * b.generators().size());
  for (const Partition &x : a.generators())
    for (const Partition &y : b.generators())
      joins.push_back(join(x, y));
  return IdealSupport::minimal_full_set(a.rank(), joins);
}

// n-th power of the maximal ideal at the origin: all partitions of weight n.
inline IdealSupport power_of_max_ideal(Int n, std::size_t rank) {
  if (n < 0)
    throw DomainError("power_of_max_ideal: negative exponent");
  auto gens = partitions_of_weight(n, rank);
  return IdealSupport::minimal_full_set(rank, gens);
}

// Support of the image of the ideal under the normal projection at a
// rank-ell tripotent: truncate every generator and re-minimize.
inline IdealSupport localize(const IdealSupport &ideal, std::size_t ell) {
  if (ell > ideal.rank())
    throw DomainError("localize: ell=" + std::to_string(ell) + " exceeds rank " +
                      std::to_string(ideal.rank()));
  std::vector<Partition> cut;
  cut.reserve(ideal.generators().size());
  for (const Partition &g : ideal.generators())
    cut.push_back(truncate(g, ell));
  return IdealSupport::minimal_full_set(ideal.rank() - ell, cut);
}

// Peter-Weyl summands of the fibre at the origin.
inline std::vector<Partition> maximal_fibre(const IdealSupport &ideal) {
  return ideal.generators();
}

} // namespace stratmod
