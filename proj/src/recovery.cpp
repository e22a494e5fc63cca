#include "arbor/recovery.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "arbor/error.hpp"

namespace arbor {

std::size_t TwigKnowledge::known_total() const {
  std::size_t sum = 0;
  for (const auto& [len, count] : known) sum += count;
  return sum;
}

TopTerm read_top(const BivariatePoly& p) {
  if (p.empty()) throw Error(ErrorCode::MalformedPoly, "polynomial has no terms");
  const std::size_t top = p.max_q_exp();
  std::size_t leaves = 0;
  std::size_t terms_at_top = 0;
  for (auto it = p.terms().lower_bound({top, 0}); it != p.terms().end(); ++it) {
    ++terms_at_top;
    leaves = it->first.second;
    if (it->second != 1)
      throw Error(ErrorCode::MalformedPoly,
                  "top term q^" + std::to_string(top) + " has coefficient " + it->second.str());
  }
  if (terms_at_top != 1)
    throw Error(ErrorCode::MalformedPoly,
                "top q-exponent " + std::to_string(top) + " carries several r-exponents");
  if (top == 0 || leaves < 2)
    throw Error(ErrorCode::MalformedPoly, "whole-tree term must have an edge and two leaves");
  return {top + 1, leaves};
}

std::size_t minimal_a_leaf_size(const BivariatePoly& p, std::size_t leaves) {
  for (const auto& [key, c] : p.terms()) {
    if (key.second != leaves) continue;
    if (c != 1)
      throw Error(ErrorCode::InconsistentPoly,
                  "minimal subtree with " + std::to_string(leaves) + " leaves is not unique");
    return key.first + 1;
  }
  throw Error(ErrorCode::NotFound, "no subtree with " + std::to_string(leaves) + " leaves");
}

BigInt count_bounded_compositions(std::size_t total, std::span<const CapGroup> caps) {
  std::vector<BigInt> ways(total + 1, 0);
  ways[0] = 1;
  std::vector<BigInt> prefix(total + 2);
  for (const auto& group : caps) {
    for (std::size_t m = 0; m < group.multiplicity; ++m) {
      // ways'[s] = sum of ways[s - j] for 0 <= j <= cap
      prefix[0] = 0;
      for (std::size_t s = 0; s <= total; ++s) prefix[s + 1] = prefix[s] + ways[s];
      for (std::size_t s = 0; s <= total; ++s) {
        const std::size_t lo = s > group.cap ? s - group.cap : 0;
        ways[s] = prefix[s + 1] - prefix[lo];
      }
    }
  }
  return ways[total];
}

namespace {

[[noreturn]] void inconsistent(const std::string& what) {
  throw Error(ErrorCode::InconsistentPoly, what);
}

std::size_t to_count(const BigInt& x, const char* what) {
  if (x < 0) inconsistent(std::string(what) + " is negative");
  if (x > BigInt(std::numeric_limits<std::size_t>::max()))
    inconsistent(std::string(what) + " is out of range");
  return x.convert_to<std::size_t>();
}

}  // namespace

RecoveredProfile recover_profile(const BivariatePoly& p, RecoveryTrace* trace) {
  const auto [n, a] = read_top(p);
  RecoveredProfile profile;
  profile.n = n;
  profile.leaves = a;

  RecoveryTrace local;
  RecoveryTrace& tr = trace ? *trace : local;
  tr = RecoveryTrace{};
  tr.n = n;
  tr.leaves = a;
  tr.twigs.twig_count = a;

  if (a == 2) {
    profile.kind = ProfileKind::Path;
    profile.twig_lengths = {n - 1, n - 1};
    return profile;
  }

  // The minimal a-leaf subtree is the trunk plus the first edge of each twig.
  const std::size_t v = minimal_a_leaf_size(p, a);
  tr.minimal_size = v;
  if (v < a + 1) inconsistent("minimal subtree leaves no room for a trunk");
  profile.trunk_size = v - a;

  // Subtrees with v+1 vertices and a leaves extend one twig of length >= 2.
  const BigInt s0 = p.coefficient(v, a);
  tr.extension_counts.push_back(s0);
  auto& twigs = tr.twigs;
  twigs.known[1] = to_count(BigInt(a) - s0, "t_1");
  twigs.k = 1;

  while (twigs.known_total() < a) {
    const std::size_t k = twigs.k;
    if (k > n) inconsistent("twig lengths did not close within n iterations");
    const BigInt sk = p.coefficient(v + k, a);

    // Extensions by k+1 vertices spread over several twigs: a twig of known
    // length i takes at most i-1 more, an unknown one (length >= k+1) at most
    // k. Putting all k+1 into one unknown twig is the separate tail term.
    std::vector<CapGroup> caps;
    for (const auto& [len, count] : twigs.known) caps.push_back({len - 1, count});
    caps.push_back({k, twigs.unknown_count()});
    const BigInt spread = count_bounded_compositions(k + 1, caps);
    tr.extension_counts.push_back(sk);
    tr.spread_counts.push_back(spread);

    const std::size_t longer = to_count(sk - spread, "twig tail count");
    if (longer > twigs.unknown_count()) inconsistent("more long twigs than unknown twigs");
    twigs.known[k + 1] = twigs.unknown_count() - longer;
    twigs.k = k + 1;
  }

  std::size_t covered = profile.trunk_size;
  for (const auto& [len, count] : twigs.known) {
    covered += len * count;
    profile.twig_lengths.insert(profile.twig_lengths.end(), count, len);
  }
  if (covered != n)
    inconsistent("trunk and twigs cover " + std::to_string(covered) + " vertices, expected " +
                 std::to_string(n));
  return profile;
}

RecoveredProfile profile_of(const Tree& t) {
  const auto d = decompose(t);
  RecoveredProfile profile;
  profile.n = t.order();
  profile.leaves = t.leaf_count();
  if (d.degenerate) {
    profile.kind = ProfileKind::Path;
    profile.twig_lengths = {t.order() - 1, t.order() - 1};
    return profile;
  }
  profile.trunk_size = d.trunk_size();
  profile.twig_lengths = d.twig_lengths();
  return profile;
}

}  // namespace arbor
