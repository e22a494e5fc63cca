#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "arbor/bigint.hpp"
#include "arbor/subtree_poly.hpp"

namespace arbor {

enum class ProfileKind { Standard, Path };

// What the subtree polynomial determines about a tree: trunk size in
// vertices and the multiset of twig lengths in edges.
struct RecoveredProfile {
  ProfileKind kind = ProfileKind::Standard;
  std::size_t n = 0;
  std::size_t leaves = 0;
  std::size_t trunk_size = 0;
  std::vector<std::size_t> twig_lengths;  // sorted ascending

  friend bool operator==(const RecoveredProfile&,
                         const RecoveredProfile&) = default;
};

// Twig counts by length as the reconstruction learns them.
struct TwigKnowledge {
  std::size_t twig_count = 0;
  std::map<std::size_t, std::size_t> known;  // length -> number of twigs
  std::size_t k = 0;                         // lengths 1..k are settled

  std::size_t known_total() const;
  std::size_t unknown_count() const { return twig_count - known_total(); }
};

// Intermediate values of one reconstruction, kept for inspection.
struct RecoveryTrace {
  std::size_t n = 0;
  std::size_t leaves = 0;
  std::size_t minimal_size = 0;          // vertices of the minimal subtree
  std::vector<BigInt> extension_counts;  // S(0), S(1), ...
  std::vector<BigInt> spread_counts;     // f for k = 1, 2, ...
  TwigKnowledge twigs;
};

struct TopTerm {
  std::size_t n;
  std::size_t leaves;
};

/// n from the top q exponent, leaf count from the unique whole-tree term.
TopTerm read_top(const BivariatePoly& p);

/// Smallest vertex count v of a subtree with `leaves` leaves. Throws NotFound
/// when no such term exists, InconsistentPoly when that subtree is not unique.
std::size_t minimal_a_leaf_size(const BivariatePoly& p, std::size_t leaves);

struct CapGroup {
  std::size_t cap;
  std::size_t multiplicity;
};

/// Number of tuples of nonnegative integers summing to `total` where each
/// group contributes `multiplicity` coordinates bounded by `cap`.
BigInt count_bounded_compositions(std::size_t total,
                                  std::span<const CapGroup> caps);

/// Recovers the profile from the polynomial alone. Throws MalformedPoly,
/// NotFound or InconsistentPoly on inputs that are not subtree polynomials.
RecoveredProfile recover_profile(const BivariatePoly& p,
                                 RecoveryTrace* trace = nullptr);

/// Profile read directly off a tree's decomposition, for comparison.
RecoveredProfile profile_of(const Tree& t);

}  // namespace arbor
