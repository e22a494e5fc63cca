#include "arbor/enumeration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "arbor/csf.hpp"
#include "arbor/error.hpp"
#include "arbor/recovery.hpp"
#include "arbor/serialize.hpp"
#include "arbor/subtree_poly.hpp"
#include "fnv.hpp"

namespace arbor {

FreeTreeGenerator::FreeTreeGenerator(std::size_t n, std::size_t cap) : n_(n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "free trees need n >= 1");
  if (n > cap)
    throw Error(ErrorCode::CapExceeded,
                "free-tree generation is capped at n = " + std::to_string(cap));
  levels_.resize(n);
  std::iota(levels_.begin(), levels_.end(), std::size_t{0});
}

// Successor in the reverse-lexicographic order of canonical rooted level
// sequences: copy the block under the last non-root-child vertex's parent.
bool FreeTreeGenerator::advance() {
  std::size_t p = n_;
  for (std::size_t i = n_; i-- > 1;)
    if (levels_[i] > 1) {
      p = i;
      break;
    }
  if (p == n_) return false;
  std::size_t q = p;
  while (levels_[--q] != levels_[p] - 1) {
  }
  const std::size_t shift = p - q;
  for (std::size_t i = p; i < n_; ++i) levels_[i] = levels_[i - shift];
  return true;
}

// Keeps the rooting at a centre; for two centres, the rooting with the
// smaller rooted code.
bool FreeTreeGenerator::accept() const {
  if (n_ <= 2) return true;
  // Children of the root come in decreasing canonical order, so the first
  // branch is a deepest one.
  std::size_t deepest = 0;
  std::size_t second = 0;
  std::size_t current = 0;
  for (std::size_t i = 1; i <= n_; ++i) {
    if (i == n_ || levels_[i] == 1) {
      if (i > 1) {
        if (deepest == 0)
          deepest = current;
        else
          second = std::max(second, current);
      }
      current = 1;
    } else {
      current = std::max(current, levels_[i]);
    }
  }
  if (second == deepest) return true;
  if (second + 1 != deepest) return false;
  const Tree t = build();
  return rooted_code(t, 0) <= rooted_code(t, 1);
}

Tree FreeTreeGenerator::build() const {
  std::vector<Edge> edges;
  std::vector<Vertex> last_at_level(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t level = levels_[i];
    if (level > 0) edges.emplace_back(last_at_level[level - 1], static_cast<Vertex>(i));
    last_at_level[level] = static_cast<Vertex>(i);
  }
  return Tree(n_, edges);
}

std::optional<Tree> FreeTreeGenerator::next() {
  while (!done_) {
    if (started_ && !advance()) {
      done_ = true;
      break;
    }
    started_ = true;
    if (accept()) return build();
  }
  return std::nullopt;
}

std::vector<Tree> free_trees(std::size_t n, std::size_t cap) {
  std::vector<Tree> out;
  FreeTreeGenerator gen(n, cap);
  while (auto t = gen.next()) out.push_back(std::move(*t));
  return out;
}

Tree prufer_decode(std::size_t n, std::span<const Vertex> sequence) {
  if (n < 2 || sequence.size() != n - 2)
    throw Error(ErrorCode::InvalidArgument, "Prüfer sequence must have length n - 2");
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : sequence) {
    if (v >= n) throw Error(ErrorCode::OutOfRange, "Prüfer entry out of range");
    ++degree[v];
  }
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  std::vector<Edge> edges;
  for (Vertex v : sequence) {
    const Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.insert(v);
  }
  edges.emplace_back(*leaves.begin(), *std::next(leaves.begin()));
  return Tree(n, edges);
}

std::size_t prufer_oracle(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "Prüfer oracle needs n >= 2");
  if (n > kPruferOracleMaxOrder)
    throw Error(ErrorCode::CapExceeded,
                "Prüfer oracle is capped at n = " + std::to_string(kPruferOracleMaxOrder));
  std::set<std::string> classes;
  std::vector<Vertex> seq(n - 2, 0);
  while (true) {
    classes.insert(canonical_code(prufer_decode(n, seq)));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return classes.size();
}

Tree random_tree(std::size_t n, std::mt19937_64& rng) {
  if (n == 1) return Tree::single_vertex();
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> seq(n - 2);
  for (auto& v : seq) v = pick(rng);
  return prufer_decode(n, seq);
}

std::string_view invariant_name(Invariant inv) {
  switch (inv) {
    case Invariant::Csf: return "csf";
    case Invariant::SubtreePoly: return "subtree_poly";
    case Invariant::RecoveredProfile: return "recovered_profile";
  }
  return "unknown";
}

std::optional<Invariant> parse_invariant(std::string_view s) {
  if (s == "csf") return Invariant::Csf;
  if (s == "subtree" || s == "subtree_poly") return Invariant::SubtreePoly;
  if (s == "profile" || s == "recovered_profile") return Invariant::RecoveredProfile;
  return std::nullopt;
}

namespace {

struct ScanItem {
  std::string code;
  std::string value;  // full serialized invariant
  std::uint64_t fingerprint = 0;
  bool roundtrip_ok = true;
};

}  // namespace

ScanReport scan(std::size_t n, Invariant invariant, std::optional<std::size_t> cap,
                unsigned jobs) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t limit =
      cap.value_or(invariant == Invariant::Csf ? kDefaultCsfScanCap : kDefaultSubtreeScanCap);
  if (n > limit)
    throw Error(ErrorCode::CapExceeded, std::string("scan of ") +
                                            std::string(invariant_name(invariant)) +
                                            " is capped at n = " + std::to_string(limit));
  if (invariant == Invariant::RecoveredProfile && n < 2)
    throw Error(ErrorCode::InvalidArgument, "profile scan needs n >= 2");

  const auto trees = free_trees(n, std::max(limit, n));
  std::vector<ScanItem> items(trees.size());
  parallel_for(trees.size(), jobs, [&](std::size_t i) {
    const Tree& t = trees[i];
    ScanItem& item = items[i];
    item.code = canonical_code(t);
    switch (invariant) {
      case Invariant::Csf:
        item.value = csf_serialize(csf(t, std::max(limit, n)));
        break;
      case Invariant::SubtreePoly:
        item.value = json::to_json(subtree_poly_fast(t), n);
        break;
      case Invariant::RecoveredProfile: {
        const auto expected = profile_of(t);
        try {
          const auto got = recover_profile(subtree_poly_fast(t));
          item.roundtrip_ok = got == expected;
        } catch (const Error&) {
          item.roundtrip_ok = false;
        }
        item.value = json::to_json(expected);
        break;
      }
    }
    item.fingerprint = detail::fnv1a64(item.value);
  });

  ScanReport report;
  report.n = n;
  report.tree_count = trees.size();
  report.invariant = invariant;

  // Fingerprint buckets, then full-value classes inside each bucket. Every
  // member of a class is paired with the class's smallest code.
  std::map<std::uint64_t, std::vector<const ScanItem*>> buckets;
  for (const auto& item : items) {
    buckets[item.fingerprint].push_back(&item);
    if (!item.roundtrip_ok) report.roundtrip_failures.push_back(item.code);
  }
  for (const auto& [fp, members] : buckets) {
    std::map<std::string_view, std::vector<std::string_view>> classes;
    for (const auto* m : members) classes[m->value].push_back(m->code);
    for (auto& [value, codes] : classes) {
      std::sort(codes.begin(), codes.end());
      for (std::size_t i = 1; i < codes.size(); ++i)
        report.collisions.emplace_back(std::string(codes[0]), std::string(codes[i]));
    }
  }
  std::sort(report.collisions.begin(), report.collisions.end());
  std::sort(report.roundtrip_failures.begin(), report.roundtrip_failures.end());
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

RoundtripSummary roundtrip_all(std::size_t n_max, std::size_t cap, unsigned jobs) {
  if (n_max > cap)
    throw Error(ErrorCode::CapExceeded,
                "round trip is capped at n = " + std::to_string(cap));
  RoundtripSummary summary;
  summary.n_max = n_max;
  for (std::size_t n = 2; n <= n_max; ++n) {
    const auto trees = free_trees(n, cap);
    std::vector<char> ok(trees.size(), 1);
    parallel_for(trees.size(), jobs, [&](std::size_t i) {
      try {
        ok[i] = recover_profile(subtree_poly_fast(trees[i])) == profile_of(trees[i]);
      } catch (const Error&) {
        ok[i] = 0;
      }
    });
    summary.trees += trees.size();
    for (std::size_t i = 0; i < trees.size(); ++i)
      if (!ok[i]) summary.failures.push_back(canonical_code(trees[i]));
  }
  return summary;
}

}  // namespace arbor
