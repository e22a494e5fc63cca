#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arbor {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected tree on vertices 0..n-1. Construction validates the
// edge list; once built the value is immutable.
class Tree {
public:
  /// Throws arbor::Error (OutOfRange, SelfLoop, DuplicateEdge, Cycle,
  /// Disconnected) when the edges do not form a tree on n vertices.
  Tree(std::size_t n, std::span<const Edge> edges);

  static Tree single_vertex() { return Tree(1, {}); }
  static Tree path(std::size_t n);
  static Tree star(std::size_t leaves);
  /// One centre with a leg of each given length (edge count).
  static Tree spider(std::span<const std::size_t> legs);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t leaf_count() const;
  std::size_t max_degree() const;

  /// Edges with u < v, sorted.
  std::vector<Edge> edges() const;

  /// Tree with vertex v renamed to perm[v].
  Tree relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Tree&, const Tree&) = default;

private:
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Edge-list document: first token n, then one "u v" pair per line.
Tree parse_tree(std::string_view text);

/// Inverse of parse_tree.
std::string to_edge_list(const Tree& t);

/// Degrees sorted weakly decreasing.
std::vector<std::size_t> degree_sequence(const Tree& t);

/// One or two central vertices (midpoints of a longest path).
std::vector<Vertex> centers(const Tree& t);

/// AHU-style nested encoding rooted at the centre; for bicentral trees the
/// lexicographically smaller of the two rootings. Equal codes iff isomorphic.
std::string canonical_code(const Tree& t);

/// 16 hex digits hashing canonical_code; used to name exported tree files.
std::string canonical_hash(const Tree& t);

/// Rooted nested encoding with children sorted; used by canonical_code and by
/// the free-tree generator's canonicity filter.
std::string rooted_code(const Tree& t, Vertex root);

struct Twig {
  Vertex attachment;
  std::vector<Vertex> path;  // attachment first, leaf last
  std::size_t length() const { return path.size() - 1; }
};

struct Decomposition {
  std::vector<Vertex> trunk;  // sorted
  std::vector<Twig> twigs;    // ordered by leaf id
  bool degenerate = false;

  std::size_t trunk_size() const { return trunk.size(); }
  std::vector<std::size_t> twig_lengths() const;  // sorted ascending
};

/// Trunk (smallest connected subgraph holding every vertex of degree >= 3)
/// plus one twig per leaf. Paths come back degenerate with an empty trunk and
/// the whole path as each leaf's twig. Throws NoEdges for n = 1.
Decomposition decompose(const Tree& t);

}  // namespace arbor
