#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "arbor/enumeration.hpp"
#include "arbor/error.hpp"
#include "arbor/serialize.hpp"
#include "arbor/tree.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace arbor;

namespace {

ErrorCode parse_error(std::string_view text) {
  try {
    parse_tree(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse failure for: " << text);
  return ErrorCode::Parse;
}

}  // namespace

TEST_CASE("parse_tree accepts edge lists") {
  const Tree k2 = parse_tree("2\n0 1");
  CHECK(k2.order() == 2);
  CHECK(k2.edges() == std::vector<Edge>{{0, 1}});

  const Tree p3 = parse_tree("3\n0 1\n1 2\n");
  CHECK(p3 == Tree::path(3));

  // Blank lines and input order carry no meaning.
  CHECK(parse_tree("\n3\n\n2 1\n  1 0  \n") == p3);
  CHECK(parse_tree("1\n").order() == 1);
}

TEST_CASE("parse_tree reports each violation distinctly") {
  CHECK(parse_error("3\n0 1\n0 1") == ErrorCode::DuplicateEdge);
  CHECK(parse_error("3\n0 1\n1 0") == ErrorCode::DuplicateEdge);
  CHECK(parse_error("3\n0 1\n1 2\n2 0") == ErrorCode::Cycle);
  CHECK(parse_error("4\n0 1\n2 3") == ErrorCode::Disconnected);
  CHECK(parse_error("3\n0 1\n1 3") == ErrorCode::OutOfRange);
  CHECK(parse_error("3\n0 0\n1 2") == ErrorCode::SelfLoop);
  CHECK(parse_error("") == ErrorCode::Parse);
  CHECK(parse_error("three\n") == ErrorCode::Parse);
  CHECK(parse_error("3\n0 1 2\n") == ErrorCode::Parse);
  CHECK(parse_error("3\n0 -1\n") == ErrorCode::Parse);
  CHECK(parse_error("0\n") == ErrorCode::Parse);
}

TEST_CASE("edge list round trip") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const Tree t = random_tree(2 + i, rng);
    CHECK(parse_tree(to_edge_list(t)) == t);
  }
}

TEST_CASE("degree_sequence") {
  using V = std::vector<std::size_t>;
  CHECK(degree_sequence(Tree::path(3)) == V{2, 1, 1});
  CHECK(degree_sequence(Tree::star(3)) == V{3, 1, 1, 1});
  CHECK(degree_sequence(fixtures::figure1()) == V{4, 3, 3, 2, 2, 1, 1, 1, 1, 1, 1});
  for (std::size_t n = 1; n <= 9; ++n)
    for (const auto& t : free_trees(n)) {
      const auto d = degree_sequence(t);
      std::size_t sum = 0;
      for (auto x : d) sum += x;
      CHECK(sum == 2 * (n - 1));
      CHECK(std::is_sorted(d.rbegin(), d.rend()));
    }
}

TEST_CASE("decompose the figure tree") {
  const auto d = decompose(fixtures::figure1());
  CHECK_FALSE(d.degenerate);
  CHECK(d.trunk == std::vector<Vertex>{1, 3, 6, 7});
  CHECK(d.trunk_size() == 4);
  CHECK(d.twig_lengths() == std::vector<std::size_t>{1, 1, 1, 1, 1, 2});
  // The length-two twig runs v8 -> vt -> ve.
  const auto it = std::find_if(d.twigs.begin(), d.twigs.end(),
                               [](const Twig& tw) { return tw.length() == 2; });
  REQUIRE(it != d.twigs.end());
  CHECK(it->path == std::vector<Vertex>{7, 9, 10});
  CHECK(it->attachment == 7);
}

TEST_CASE("decompose a spider") {
  const std::vector<std::size_t> legs{2, 2, 3};
  const Tree t = Tree::spider(legs);
  const auto d = decompose(t);
  CHECK(d.trunk == std::vector<Vertex>{0});
  CHECK(d.twig_lengths() == std::vector<std::size_t>{2, 2, 3});

  const auto [mask, unique] = oracle::minimal_trunk(t);
  CHECK(unique);
  CHECK(mask == 1u);
}

TEST_CASE("decompose paths and tiny trees") {
  const auto p5 = decompose(Tree::path(5));
  CHECK(p5.degenerate);
  CHECK(p5.trunk.empty());
  CHECK(p5.twig_lengths() == std::vector<std::size_t>{4, 4});
  CHECK(p5.twigs[0].path.back() == 0);
  CHECK(p5.twigs[1].path.back() == 4);

  const auto k2 = decompose(Tree::path(2));
  CHECK(k2.degenerate);
  CHECK(k2.twig_lengths() == std::vector<std::size_t>{1, 1});

  CHECK_THROWS_AS(decompose(Tree::single_vertex()), Error);
  try {
    decompose(Tree::single_vertex());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoEdges);
  }

  const auto star = decompose(Tree::star(3));
  CHECK(star.trunk == std::vector<Vertex>{0});
  CHECK(star.twig_lengths() == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("decomposition invariants over all free trees up to 12") {
  for (std::size_t n = 2; n <= 12; ++n)
    for (const auto& t : free_trees(n)) {
      const auto d = decompose(t);
      if (t.max_degree() <= 2) {
        CHECK(d.degenerate);
        continue;
      }
      CAPTURE(canonical_code(t));
      std::set<Vertex> trunk(d.trunk.begin(), d.trunk.end());
      std::size_t twig_total = 0;
      for (const auto& tw : d.twigs) twig_total += tw.length();
      std::size_t trunk_edges = 0;
      for (auto [u, v] : t.edges()) trunk_edges += trunk.count(u) && trunk.count(v);

      CHECK(trunk.size() + twig_total == n);
      CHECK(trunk_edges + twig_total == n - 1);
      CHECK(d.twigs.size() == t.leaf_count());
      const auto degs = degree_sequence(t);
      CHECK(d.twigs.size() == static_cast<std::size_t>(std::count(degs.begin(), degs.end(), 1u)));

      std::set<Vertex> outside;
      for (const auto& tw : d.twigs) {
        CHECK(trunk.count(tw.attachment) == 1);
        CHECK(t.degree(tw.path.back()) == 1);
        for (std::size_t i = 1; i + 1 < tw.path.size(); ++i) CHECK(t.degree(tw.path[i]) == 2);
        for (std::size_t i = 1; i < tw.path.size(); ++i) {
          CHECK(trunk.count(tw.path[i]) == 0);
          CHECK(outside.insert(tw.path[i]).second);
        }
      }
      // Minimal: every trunk vertex with at most one trunk neighbour has
      // degree >= 3 in T.
      for (Vertex v : d.trunk) {
        std::size_t inner = 0;
        for (Vertex w : t.neighbors(v)) inner += trunk.count(w);
        if (inner <= 1) CHECK(t.degree(v) >= 3);
      }
      if (n <= 12) {
        const auto [mask, unique] = oracle::minimal_trunk(t);
        std::uint32_t ours = 0;
        for (Vertex v : d.trunk) ours |= 1u << v;
        CHECK(unique);
        CHECK(mask == ours);
      }
    }
}

TEST_CASE("decompose is relabeling-equivariant") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Tree t = random_tree(4 + trial % 14, rng);
    const auto perm = fixtures::random_permutation(t.order(), rng);
    const auto d = decompose(t);
    const auto dr = decompose(t.relabeled(perm));
    std::vector<Vertex> mapped;
    for (Vertex v : d.trunk) mapped.push_back(perm[v]);
    std::sort(mapped.begin(), mapped.end());
    CHECK(dr.trunk == mapped);
    std::set<std::vector<Vertex>> paths, relabeled_paths;
    for (const auto& tw : d.twigs) {
      std::vector<Vertex> p;
      for (Vertex v : tw.path) p.push_back(perm[v]);
      paths.insert(p);
    }
    for (const auto& tw : dr.twigs) relabeled_paths.insert(tw.path);
    CHECK(paths == relabeled_paths);
  }
}

TEST_CASE("canonical_code examples") {
  const std::vector<Edge> relabeled{{0, 2}, {2, 1}};
  CHECK(canonical_code(Tree::path(3)) == canonical_code(Tree(3, relabeled)));
  CHECK(canonical_code(Tree::star(3)) != canonical_code(Tree::path(4)));

  // 16 labeled trees on 4 vertices fall into exactly two classes, agreeing
  // with brute-force isomorphism.
  const auto labeled = oracle::labeled_trees(4);
  REQUIRE(labeled.size() == 16);
  std::set<std::string> codes;
  for (const auto& t : labeled) codes.insert(canonical_code(t));
  CHECK(codes.size() == 2);
  for (const auto& a : labeled)
    for (const auto& b : labeled)
      CHECK((canonical_code(a) == canonical_code(b)) == oracle::isomorphic(a, b));
}

TEST_CASE("canonical_code agrees with brute-force isomorphism on 6 vertices") {
  const auto labeled = oracle::labeled_trees(6);
  REQUIRE(labeled.size() == 1296);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, labeled.size() - 1);
  for (int i = 0; i < 300; ++i) {
    const auto& a = labeled[pick(rng)];
    const auto& b = labeled[pick(rng)];
    CHECK((canonical_code(a) == canonical_code(b)) == oracle::isomorphic(a, b));
  }
}

TEST_CASE("canonical_code is invariant under relabeling") {
  std::mt19937_64 rng(5);
  for (std::size_t n : {5u, 9u, 14u, 20u, 40u}) {
    const Tree t = random_tree(n, rng);
    const auto code = canonical_code(t);
    for (int i = 0; i < 100; ++i)
      CHECK(canonical_code(t.relabeled(fixtures::random_permutation(n, rng))) == code);
  }
}

TEST_CASE("centers") {
  CHECK(centers(Tree::path(5)) == std::vector<Vertex>{2});
  CHECK(centers(Tree::path(4)) == std::vector<Vertex>{1, 2});
  CHECK(centers(Tree::star(4)) == std::vector<Vertex>{0});
  CHECK(centers(Tree::single_vertex()) == std::vector<Vertex>{0});
}

TEST_CASE("decomposition JSON") {
  const auto doc = json::to_json(decompose(Tree::star(3)));
  CHECK(doc ==
        R"({"trunk":[0],"trunk_size":1,"twigs":[{"attach":0,"path":[0,1],"length":1},)"
        R"({"attach":0,"path":[0,2],"length":1},{"attach":0,"path":[0,3],"length":1}],)"
        R"("twig_lengths":[1,1,1],"degenerate":false})");
}

TEST_CASE("builders") {
  CHECK(Tree::star(3).leaf_count() == 3);
  const std::vector<std::size_t> legs{1, 2};
  CHECK(Tree::spider(legs) == Tree::path(4).relabeled(std::vector<Vertex>{1, 0, 2, 3}));
  CHECK_THROWS_AS(Tree(0, {}), Error);
}
