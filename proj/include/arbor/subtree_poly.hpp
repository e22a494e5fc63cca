#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "arbor/bigint.hpp"
#include "arbor/tree.hpp"

namespace arbor {

// Sparse polynomial in q (edge count) and r (leaf count) with positive
// coefficients. Terms iterate in lexicographic (q_exp, r_exp) order.
class BivariatePoly {
public:
  using Key = std::pair<std::size_t, std::size_t>;  // (q_exp, r_exp)
  using Terms = std::map<Key, BigInt>;

  BivariatePoly() = default;

  /// Adds to a term; zero results are erased.
  void add(std::size_t q_exp, std::size_t r_exp, const BigInt& c);

  /// Stored coefficient or 0.
  BigInt coefficient(std::size_t edges, std::size_t leaves) const;

  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t max_q_exp() const;

  /// Value at q = r = 1, i.e. the number of subtrees.
  BigInt total() const;

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

private:
  Terms terms_;
};

inline constexpr std::size_t kDefaultBruteForceCap = 22;

/// Enumerates every connected vertex subset with at least two vertices.
/// Throws CapExceeded when t.order() > cap.
BivariatePoly subtree_poly_bruteforce(const Tree& t,
                                      std::size_t cap = kDefaultBruteForceCap);

/// Rooted dynamic program; each subtree is counted at its topmost vertex.
BivariatePoly subtree_poly_fast(const Tree& t);

inline BigInt coefficient(const BivariatePoly& p, std::size_t edges,
                          std::size_t leaves) {
  return p.coefficient(edges, leaves);
}

}  // namespace arbor
