#include "arbor/subtree_poly.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "arbor/error.hpp"

namespace arbor {

void BivariatePoly::add(std::size_t q_exp, std::size_t r_exp, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({q_exp, r_exp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt BivariatePoly::coefficient(std::size_t edges, std::size_t leaves) const {
  auto it = terms_.find({edges, leaves});
  return it == terms_.end() ? BigInt{0} : it->second;
}

std::size_t BivariatePoly::max_q_exp() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.first;
}

BigInt BivariatePoly::total() const {
  BigInt sum = 0;
  for (const auto& [key, c] : terms_) sum += c;
  return sum;
}

namespace {

class SubsetEnumerator {
public:
  SubsetEnumerator(const Tree& t, BivariatePoly& out) : out_(out), nbr_(t.order(), 0) {
    for (Vertex v = 0; v < t.order(); ++v)
      for (Vertex w : t.neighbors(v)) nbr_[v] |= bit(w);
  }

  void run() {
    const std::size_t n = nbr_.size();
    for (std::size_t s = 0; s < n; ++s) {
      allowed_ = (s + 1 >= 64) ? 0 : ~((bit(s + 1)) - 1);
      extend(bit(s), nbr_[s] & allowed_, 0);
    }
  }

private:
  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

  // Every connected set containing the current start vertex, drawn from
  // `allowed_`, is reached at exactly one leaf of this recursion.
  void extend(std::uint64_t current, std::uint64_t frontier, std::uint64_t banned) {
    if (frontier == 0) {
      record(current);
      return;
    }
    const auto u = static_cast<std::size_t>(std::countr_zero(frontier));
    const std::uint64_t rest = frontier & ~bit(u);
    const std::uint64_t grown = current | bit(u);
    extend(grown, rest | (nbr_[u] & allowed_ & ~grown & ~banned), banned);
    extend(current, rest, banned | bit(u));
  }

  void record(std::uint64_t set) {
    const auto size = static_cast<std::size_t>(std::popcount(set));
    if (size < 2) return;
    std::size_t leaves = 0;
    for (std::uint64_t rest = set; rest; rest &= rest - 1) {
      auto v = static_cast<std::size_t>(std::countr_zero(rest));
      if (std::popcount(nbr_[v] & set) == 1) ++leaves;
    }
    out_.add(size - 1, leaves, 1);
  }

  BivariatePoly& out_;
  std::vector<std::uint64_t> nbr_;
  std::uint64_t allowed_ = 0;
};

// Dense polynomial grid indexed by (edges, leaves).
class Grid {
public:
  Grid() = default;
  Grid(std::size_t max_edges, std::size_t max_leaves)
      : rows_(max_edges + 1), cols_(max_leaves + 1), cells_(rows_ * cols_) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& at(std::size_t e, std::size_t l) { return cells_[e * cols_ + l]; }
  const BigInt& at(std::size_t e, std::size_t l) const { return cells_[e * cols_ + l]; }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> cells_;
};

}  // namespace

BivariatePoly subtree_poly_bruteforce(const Tree& t, std::size_t cap) {
  if (t.order() > cap)
    throw Error(ErrorCode::CapExceeded, "brute-force subtree enumeration is capped at n = " +
                                            std::to_string(cap));
  if (t.order() > 64)
    throw Error(ErrorCode::CapExceeded, "brute-force subtree enumeration supports n <= 64");
  BivariatePoly p;
  SubsetEnumerator(t, p).run();
  return p;
}

BivariatePoly subtree_poly_fast(const Tree& t) {
  const std::size_t n = t.order();
  constexpr Vertex kNone = static_cast<Vertex>(-1);

  std::vector<Vertex> order{0};
  std::vector<Vertex> parent(n, kNone);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex w : t.neighbors(order[i]))
      if (w != parent[order[i]]) {
        parent[w] = order[i];
        order.push_back(w);
      }

  // below[v]: subtrees with topmost vertex v and at least one child chosen,
  // graded by edges and by leaves strictly below v.
  std::vector<Grid> below(n);
  std::vector<std::size_t> size(n, 1);
  // Leaves strictly below v in a chosen subtree form an antichain, so their
  // number is bounded by the rooted leaves of v's branch.
  std::vector<std::size_t> tips(n, 1);
  BivariatePoly result;
  BigInt scratch;

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    std::size_t max_edges = 0;
    std::size_t max_leaves = 0;
    for (Vertex c : t.neighbors(v))
      if (c != parent[v]) {
        max_edges += size[c];
        max_leaves += tips[c];
      }

    Grid product(max_edges, max_leaves);  // 1 + B_v, built factor by factor
    Grid single(max_edges, max_leaves);   // exactly one child chosen
    product.at(0, 0) = 1;
    std::size_t used = 0;
    std::size_t used_leaves = 0;

    for (Vertex c : t.neighbors(v)) {
      if (c == parent[v]) continue;
      // Contribution through edge v-c: q*r when c is a leaf of the subtree,
      // q*B_c otherwise.
      const Grid& bc = below[c];
      Grid factor(size[c], tips[c]);
      factor.at(1, 1) = 1;
      for (std::size_t e = 0; e < bc.rows(); ++e)
        for (std::size_t l = 0; l < bc.cols(); ++l)
          if (bc.at(e, l) != 0) factor.at(e + 1, l) += bc.at(e, l);

      for (std::size_t e = 0; e < factor.rows(); ++e)
        for (std::size_t l = 0; l < factor.cols(); ++l)
          if (factor.at(e, l) != 0) single.at(e, l) += factor.at(e, l);

      // In-place knapsack merge: every factor term has at least one edge, so
      // descending over e1 reads each source before it is overwritten.
      for (std::size_t e1 = used + 1; e1-- > 0;)
        for (std::size_t l1 = 0; l1 <= std::min(e1, used_leaves); ++l1) {
          const BigInt& a = product.at(e1, l1);
          if (a == 0) continue;
          for (std::size_t e2 = 1; e2 < factor.rows(); ++e2)
            for (std::size_t l2 = 0; l2 < factor.cols(); ++l2) {
              const BigInt& b = factor.at(e2, l2);
              if (b == 0) continue;
              scratch = a;
              scratch *= b;
              product.at(e1 + e2, l1 + l2) += scratch;
            }
        }
      used += size[c];
      used_leaves += tips[c];
      below[c] = Grid{};
    }
    size[v] = used + 1;
    if (max_edges > 0) tips[v] = max_leaves;

    // Rooted at v: v is a leaf exactly when one child is chosen.
    for (std::size_t e = 1; e <= max_edges; ++e)
      for (std::size_t l = 0; l <= std::min(e, max_leaves); ++l) {
        const BigInt& all = product.at(e, l);
        if (all == 0) continue;
        const BigInt& one = single.at(e, l);
        result.add(e, l + 1, one);
        result.add(e, l, all - one);
      }
    product.at(0, 0) = 0;
    below[v] = std::move(product);
  }
  return result;
}

}  // namespace arbor
