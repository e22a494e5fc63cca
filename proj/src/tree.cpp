#include "arbor/tree.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "arbor/error.hpp"
#include "fnv.hpp"

namespace arbor {
namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

std::string edge_text(const Edge& e) {
  return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
}

}  // namespace

Tree::Tree(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "tree needs at least one vertex");

  std::set<Edge> seen;
  DisjointSets components(n);
  for (const auto& e : edges) {
    auto [u, v] = e;
    if (u >= n || v >= n)
      throw Error(ErrorCode::OutOfRange,
                  "edge " + edge_text(e) + " references a vertex >= " + std::to_string(n));
    if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
    if (!seen.insert(std::minmax(u, v)).second)
      throw Error(ErrorCode::DuplicateEdge, "duplicate edge " + edge_text(e));
    if (!components.unite(u, v))
      throw Error(ErrorCode::Cycle, "edge " + edge_text(e) + " closes a cycle");
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  if (edges.size() != n - 1)
    throw Error(ErrorCode::Disconnected,
                std::to_string(n) + " vertices but only " + std::to_string(edges.size()) +
                    " edges");
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

Tree Tree::path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Tree(n, edges);
}

Tree Tree::star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Tree(leaves + 1, edges);
}

Tree Tree::spider(std::span<const std::size_t> legs) {
  std::vector<Edge> edges;
  Vertex next = 1;
  for (std::size_t len : legs) {
    if (len == 0) throw Error(ErrorCode::InvalidArgument, "spider legs need length >= 1");
    Vertex prev = 0;
    for (std::size_t i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Tree(next, edges);
}

std::size_t Tree::leaf_count() const {
  return static_cast<std::size_t>(std::count_if(
      adjacency_.begin(), adjacency_.end(), [](const auto& a) { return a.size() == 1; }));
}

std::size_t Tree::max_degree() const {
  std::size_t best = 0;
  for (const auto& a : adjacency_) best = std::max(best, a.size());
  return best;
}

std::vector<Edge> Tree::edges() const {
  std::vector<Edge> out;
  out.reserve(order() - 1);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Tree Tree::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != order())
    throw Error(ErrorCode::InvalidArgument, "permutation size does not match tree order");
  std::vector<Edge> out;
  for (auto [u, v] : edges()) out.emplace_back(perm[u], perm[v]);
  return Tree(order(), out);
}

Tree parse_tree(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;

  auto parse_uint = [](std::string_view tok, std::size_t lineno) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw Error(ErrorCode::Parse,
                  "line " + std::to_string(lineno) + ": expected a nonnegative integer, got '" +
                      std::string(tok) + "'");
    return value;
  };

  std::size_t lineno = 0;
  std::optional<std::uint64_t> n;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::vector<std::string> toks;
    for (std::string tok; fields >> tok;) toks.push_back(tok);
    if (toks.empty()) continue;
    if (!n) {
      if (toks.size() != 1)
        throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": expected vertex count");
      n = parse_uint(toks[0], lineno);
      if (*n == 0) throw Error(ErrorCode::Parse, "vertex count must be at least 1");
      continue;
    }
    if (toks.size() != 2)
      throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": expected 'u v'");
    auto u = parse_uint(toks[0], lineno);
    auto v = parse_uint(toks[1], lineno);
    if (u >= *n || v >= *n)
      throw Error(ErrorCode::OutOfRange, "line " + std::to_string(lineno) + ": vertex id out of range");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!n) throw Error(ErrorCode::Parse, "empty tree document");
  return Tree(*n, edges);
}

std::string to_edge_list(const Tree& t) {
  std::string out = std::to_string(t.order()) + "\n";
  for (auto [u, v] : t.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::vector<std::size_t> degree_sequence(const Tree& t) {
  std::vector<std::size_t> degs(t.order());
  for (Vertex v = 0; v < t.order(); ++v) degs[v] = t.degree(v);
  std::sort(degs.rbegin(), degs.rend());
  return degs;
}

std::vector<Vertex> centers(const Tree& t) {
  const std::size_t n = t.order();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{0});
    return all;
  }
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer)
      for (Vertex w : t.neighbors(leaf))
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string rooted_code(const Tree& t, Vertex root) {
  const std::size_t n = t.order();
  constexpr Vertex kNone = static_cast<Vertex>(-1);
  std::vector<Vertex> order{root};
  std::vector<Vertex> parent(n, kNone);
  order.reserve(n);
  for (std::size_t i = 0; i < order.size(); ++i) {
    Vertex u = order[i];
    for (Vertex w : t.neighbors(u)) {
      if (w == parent[u]) continue;
      parent[w] = u;
      order.push_back(w);
    }
  }
  std::vector<std::vector<std::string>> child_codes(n);
  std::string result;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex u = *it;
    auto& kids = child_codes[u];
    std::sort(kids.begin(), kids.end());
    std::string code = "(";
    for (auto& k : kids) code += k;
    code += ")";
    kids.clear();
    kids.shrink_to_fit();
    if (u == root)
      result = std::move(code);
    else
      child_codes[parent[u]].push_back(std::move(code));
  }
  return result;
}

std::string canonical_code(const Tree& t) {
  auto c = centers(t);
  std::string best = rooted_code(t, c[0]);
  if (c.size() == 2) best = std::min(best, rooted_code(t, c[1]));
  return best;
}

std::string canonical_hash(const Tree& t) {
  return detail::hex64(detail::fnv1a64(canonical_code(t)));
}

std::vector<std::size_t> Decomposition::twig_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& tw : twigs) out.push_back(tw.length());
  std::sort(out.begin(), out.end());
  return out;
}

Decomposition decompose(const Tree& t) {
  const std::size_t n = t.order();
  if (n < 2) throw Error(ErrorCode::NoEdges, "a single vertex has no subtrees");

  Decomposition d;
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (t.degree(v) == 1) leaves.push_back(v);

  if (t.max_degree() <= 2) {
    d.degenerate = true;
    // Both leaf-wise twigs are the whole path.
    std::vector<Vertex> walk{leaves[1]};
    Vertex prev = leaves[1];
    Vertex cur = t.neighbors(leaves[1])[0];
    walk.push_back(cur);
    while (cur != leaves[0]) {
      Vertex next = t.neighbors(cur)[0] == prev ? t.neighbors(cur)[1] : t.neighbors(cur)[0];
      prev = cur;
      cur = next;
      walk.push_back(cur);
    }
    d.twigs.push_back({leaves[1], walk});
    std::reverse(walk.begin(), walk.end());
    d.twigs.push_back({leaves[0], walk});
    std::sort(d.twigs.begin(), d.twigs.end(),
              [](const Twig& a, const Twig& b) { return a.path.back() < b.path.back(); });
    return d;
  }

  // Trunk: strip leaves of T-degree < 3 until every remaining leaf has
  // T-degree >= 3.
  std::vector<std::size_t> remaining_degree(n);
  std::vector<bool> removed(n, false);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    remaining_degree[v] = t.degree(v);
    if (t.degree(v) == 1) queue.push_back(v);
  }
  while (!queue.empty()) {
    Vertex v = queue.back();
    queue.pop_back();
    if (removed[v]) continue;
    removed[v] = true;
    for (Vertex w : t.neighbors(v)) {
      if (removed[w]) continue;
      if (--remaining_degree[w] <= 1 && t.degree(w) < 3) queue.push_back(w);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (!removed[v]) d.trunk.push_back(v);

  for (Vertex leaf : leaves) {
    std::vector<Vertex> walk{leaf};
    Vertex prev = leaf;
    Vertex cur = t.neighbors(leaf)[0];
    walk.push_back(cur);
    while (t.degree(cur) == 2) {
      Vertex next = t.neighbors(cur)[0] == prev ? t.neighbors(cur)[1] : t.neighbors(cur)[0];
      prev = cur;
      cur = next;
      walk.push_back(cur);
    }
    std::reverse(walk.begin(), walk.end());
    d.twigs.push_back({cur, std::move(walk)});
  }
  return d;
}

}  // namespace arbor
