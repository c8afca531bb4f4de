#pragma once

// Partitions of fixed rank r (weakly decreasing nonnegative tuples with
// significant trailing zeros), the containment order, and the step, hat and
// truncation constructions built on top of it.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "stratmod/error.hpp"

namespace stratmod {

using Int = std::int64_t;

namespace detail {

inline Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out))
    throw OverflowError("integer overflow in partition arithmetic");
  return out;
}

inline Int checked_sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out))
    throw OverflowError("integer overflow in partition arithmetic");
  return out;
}

} // namespace detail

class Partition {
public:
  Partition() = default;

  explicit Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0)
        throw DomainError("partition parts must be nonnegative: " + str());
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw DomainError("partition parts must be weakly decreasing: " + str());
    }
  }

  Partition(std::initializer_list<Int> parts)
      : Partition(std::vector<Int>(parts)) {}

  static Partition zero(std::size_t rank) {
    return Partition(std::vector<Int>(rank, 0));
  }

  // n repeated m times, padded with zeros to the given rank.
  static Partition rectangle(Int n, std::size_t m, std::size_t rank) {
    if (m > rank)
      throw DomainError("rectangle height exceeds rank");
    std::vector<Int> p(rank, 0);
    std::fill_n(p.begin(), m, n);
    return Partition(std::move(p));
  }

  std::size_t rank() const noexcept { return parts_.size(); }
  const std::vector<Int> &parts() const noexcept { return parts_; }
  Int operator[](std::size_t i) const { return parts_.at(i); }
  Int first() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  Int last() const noexcept { return parts_.empty() ? 0 : parts_.back(); }

  Int weight() const {
    Int w = 0;
    for (Int p : parts_)
      w = detail::checked_add(w, p);
    return w;
  }

  std::size_t length() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(parts_.begin(), parts_.end(), [](Int p) { return p != 0; }));
  }

  bool is_zero() const noexcept { return length() == 0; }

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i)
      os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
  }

  // Lexicographic order on (rank, parts); used only for containers and output
  // normalization. The containment order is leq().
  friend bool operator==(const Partition &, const Partition &) = default;
  friend std::strong_ordering operator<=>(const Partition &a, const Partition &b) {
    if (auto c = a.parts_.size() <=> b.parts_.size(); c != 0)
      return c;
    return a.parts_ <=> b.parts_;
  }

private:
  std::vector<Int> parts_;
};

inline void require_same_rank(const Partition &a, const Partition &b) {
  if (a.rank() != b.rank())
    throw RankMismatch("rank mismatch: " + a.str() + " vs " + b.str());
}

// Young diagram containment: lambda_i <= mu_i for every i.
inline bool leq(const Partition &lambda, const Partition &mu) {
  require_same_rank(lambda, mu);
  for (std::size_t i = 0; i < lambda.rank(); ++i)
    if (lambda[i] > mu[i])
      return false;
  return true;
}

inline bool less(const Partition &lambda, const Partition &mu) {
  return lambda != mu && leq(lambda, mu);
}

// Least upper bound in the containment order.
inline Partition join(const Partition &lambda, const Partition &mu) {
  require_same_rank(lambda, mu);
  std::vector<Int> p(lambda.rank());
  for (std::size_t i = 0; i < p.size(); ++i)
    p[i] = std::max(lambda[i], mu[i]);
  return Partition(std::move(p));
}

// Drops the first ell parts.
inline Partition truncate(const Partition &lambda, std::size_t ell) {
  if (ell > lambda.rank())
    throw DomainError("truncation index " + std::to_string(ell) +
                      " exceeds rank " + std::to_string(lambda.rank()));
  return Partition(std::vector<Int>(lambda.parts().begin() + static_cast<std::ptrdiff_t>(ell),
                                    lambda.parts().end()));
}

// Prepends ell copies of alpha's first part, giving a partition of rank r with
// truncate(hat(alpha, ell, r), ell) == alpha.
inline Partition hat(const Partition &alpha, std::size_t ell, std::size_t r) {
  if (alpha.rank() + ell != r)
    throw RankMismatch("hat: rank(alpha) + ell must equal r");
  std::vector<Int> p(ell, alpha.first());
  p.insert(p.end(), alpha.parts().begin(), alpha.parts().end());
  return Partition(std::move(p));
}

// lambda - n^(r). Requires lambda_r >= n.
inline Partition subtract_rect(const Partition &lambda, Int n) {
  if (n < 0)
    throw DomainError("subtract_rect: negative n");
  if (lambda.rank() > 0 && lambda.last() < n)
    throw DomainError("subtract_rect: " + lambda.str() + " does not contain " +
                      std::to_string(n) + "^(" + std::to_string(lambda.rank()) + ")");
  std::vector<Int> p(lambda.parts());
  for (Int &x : p)
    x -= n;
  return Partition(std::move(p));
}

inline Partition add_rect(const Partition &lambda, Int n) {
  if (n < 0)
    throw DomainError("add_rect: negative n");
  std::vector<Int> p(lambda.parts());
  for (Int &x : p)
    x = detail::checked_add(x, n);
  return Partition(std::move(p));
}

// ---------------------------------------------------------------------------
// Step form: lambda = (n_1^(l_1), n_2^(l_2 - l_1), ..., n_t^(l_t - l_{t-1}), 0^(r - l_t))
// with n_1 > ... > n_t > 0 and l_1 < ... < l_t <= r.

struct Step {
  Int height;       // n_k
  std::size_t cut;  // l_k
  friend bool operator==(const Step &, const Step &) = default;
};

struct StepForm {
  std::size_t rank = 0;
  std::vector<Step> steps;

  std::size_t size() const noexcept { return steps.size(); }
  const Step &operator[](std::size_t k) const { return steps.at(k); }
  friend bool operator==(const StepForm &, const StepForm &) = default;
};

inline StepForm step_form(const Partition &lambda) {
  StepForm out{lambda.rank(), {}};
  for (std::size_t i = 0; i < lambda.rank(); ++i) {
    if (lambda[i] == 0)
      break;
    if (i + 1 == lambda.rank() || lambda[i + 1] != lambda[i])
      out.steps.push_back({lambda[i], i + 1});
  }
  return out;
}

inline Partition from_step_form(const StepForm &form) {
  std::vector<Int> p;
  p.reserve(form.rank);
  std::size_t prev_cut = 0;
  Int prev_height = 0;
  for (std::size_t k = 0; k < form.steps.size(); ++k) {
    const Step &st = form.steps[k];
    if (st.height <= 0)
      throw DomainError("step heights must be positive");
    if (k > 0 && st.height >= prev_height)
      throw DomainError("step heights must be strictly decreasing");
    if (st.cut <= prev_cut || st.cut > form.rank)
      throw DomainError("step cuts must be strictly increasing and <= rank");
    p.insert(p.end(), st.cut - prev_cut, st.height);
    prev_cut = st.cut;
    prev_height = st.height;
  }
  p.resize(form.rank, 0);
  return Partition(std::move(p));
}

// A run of equal parts inside a concatenation suffix.
struct Block {
  Int height;
  std::size_t count;
};

// The slice lambda_h^k = (n_h^(l_h - l_{h-1}), ..., n_k^(l_k - l_{k-1})), with
// 1-based step indices; empty when h > k.
inline std::vector<Block> step_slice(const StepForm &form, std::size_t h, std::size_t k) {
  if (k > form.size() || h == 0)
    throw DomainError("step_slice: index out of range");
  std::vector<Block> out;
  for (std::size_t i = h; i <= k; ++i) {
    std::size_t prev = i == 1 ? 0 : form.steps[i - 2].cut;
    out.push_back({form.steps[i - 1].height, form.steps[i - 1].cut - prev});
  }
  return out;
}

// (mu, suffix). Fails if the last part of mu is below the first suffix height.
inline Partition concat(const Partition &mu, std::span<const Block> suffix) {
  std::vector<Int> p(mu.parts());
  for (const Block &b : suffix) {
    if (b.count == 0)
      continue;
    if (!p.empty() && p.back() < b.height)
      throw MonotonicityError("concat: " + mu.str() + " followed by height " +
                              std::to_string(b.height) + " is not weakly decreasing");
    p.insert(p.end(), b.count, b.height);
  }
  return Partition(std::move(p));
}

inline Partition pad(const Partition &lambda, std::size_t rank) {
  if (rank < lambda.rank())
    throw DomainError("pad: target rank below current rank");
  std::vector<Int> p(lambda.parts());
  p.resize(rank, 0);
  return Partition(std::move(p));
}

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

inline void enumerate_rec(std::vector<Int> &cur, std::size_t pos, Int max_part,
                          Int remaining,
                          const std::function<void(const Partition &)> &fn) {
  if (pos == cur.size()) {
    fn(Partition(cur));
    return;
  }
  Int hi = std::min(max_part, remaining);
  for (Int v = hi; v >= 0; --v) {
    cur[pos] = v;
    enumerate_rec(cur, pos + 1, v, remaining - v, fn);
  }
}

} // namespace detail

// Visits every partition of the given rank with first part <= max_part and
// weight <= max_weight, in descending lexicographic order.
inline void for_each_partition(std::size_t rank, Int max_part, Int max_weight,
                               const std::function<void(const Partition &)> &fn) {
  if (max_part < 0 || max_weight < 0)
    return;
  std::vector<Int> cur(rank, 0);
  detail::enumerate_rec(cur, 0, max_part, max_weight, fn);
}

inline std::vector<Partition> partitions_of_weight(Int n, std::size_t rank) {
  std::vector<Partition> out;
  if (n < 0)
    return out;
  for_each_partition(rank, n, n, [&](const Partition &p) {
    if (p.weight() == n)
      out.push_back(p);
  });
  return out;
}

inline std::vector<Partition> partitions_up_to_weight(Int n, std::size_t rank) {
  std::vector<Partition> out;
  for_each_partition(rank, n, n, [&](const Partition &p) { out.push_back(p); });
  return out;
}

} // namespace stratmod
