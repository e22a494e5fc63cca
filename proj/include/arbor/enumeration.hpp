#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arbor/parallel.hpp"
#include "arbor/tree.hpp"

namespace arbor {

inline constexpr std::size_t kDefaultFreeTreeCap = 20;
inline constexpr std::size_t kPruferOracleMaxOrder = 9;
inline constexpr std::size_t kDefaultCsfScanCap = 12;
inline constexpr std::size_t kDefaultSubtreeScanCap = 16;

// Rooted level-sequence generator filtered to centre-rooted canonical
// representatives, yielding one tree per isomorphism class.
class FreeTreeGenerator {
public:
  /// Throws CapExceeded when n > cap, InvalidArgument when n == 0.
  explicit FreeTreeGenerator(std::size_t n,
                             std::size_t cap = kDefaultFreeTreeCap);

  /// Next representative, or nullopt once exhausted.
  std::optional<Tree> next();

private:
  bool advance();
  bool accept() const;
  Tree build() const;

  std::size_t n_;
  std::vector<std::size_t> levels_;  // root at level 0
  bool started_ = false;
  bool done_ = false;
};

/// All representatives collected into a vector, in generation order.
std::vector<Tree> free_trees(std::size_t n,
                             std::size_t cap = kDefaultFreeTreeCap);

/// Labeled tree from a Prüfer sequence over 0..n-1 (length n-2).
Tree prufer_decode(std::size_t n, std::span<const Vertex> sequence);

/// Isomorphism classes among all n^(n-2) labeled trees.
std::size_t prufer_oracle(std::size_t n);

/// Uniform labeled tree on n vertices.
Tree random_tree(std::size_t n, std::mt19937_64& rng);

enum class Invariant { Csf, SubtreePoly, RecoveredProfile };

std::string_view invariant_name(Invariant inv);
/// Accepts "csf", "subtree", "subtree_poly", "profile", "recovered_profile".
std::optional<Invariant> parse_invariant(std::string_view s);

struct ScanReport {
  std::size_t n = 0;
  std::size_t tree_count = 0;
  Invariant invariant = Invariant::Csf;
  // Pairs of canonical codes (smaller first) sharing an invariant value,
  // sorted. For RecoveredProfile these are informational.
  std::vector<std::pair<std::string, std::string>> collisions;
  // RecoveredProfile only: canonical codes whose round trip failed.
  std::vector<std::string> roundtrip_failures;
  std::chrono::duration<double> elapsed{};
};

/// Groups the free trees of order n by invariant value. Caps default to the
/// per-invariant values above when `cap` is empty.
ScanReport scan(std::size_t n, Invariant invariant,
                std::optional<std::size_t> cap = std::nullopt,
                unsigned jobs = 1);

struct RoundtripSummary {
  std::size_t n_max = 0;
  std::size_t trees = 0;
  std::vector<std::string> failures;  // canonical codes
};

/// Checks recover_profile(subtree_poly_fast(T)) == profile_of(T) for every
/// free tree with 2 <= n <= n_max.
RoundtripSummary roundtrip_all(std::size_t n_max,
                               std::size_t cap = kDefaultFreeTreeCap,
                               unsigned jobs = 1);

}  // namespace arbor
