// Command-line front end over the arbor C API.
//
//   arbor gen --n 7
//   arbor decompose --in tree.txt
//   arbor subtree-poly --in tree.txt | arbor recover --poly-in -
//   arbor roundtrip --n-max 10 --jobs 4
//   arbor scan --n 10 --invariant csf
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "arbor/arbor.h"

namespace {

using Json = nlohmann::ordered_json;

// Raised for failures that map to exit code 1.
struct DomainFailure {
  std::string code;
  std::string detail;
};

struct StringDeleter {
  void operator()(char* s) const { arbor_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct TreeDeleter {
  void operator()(arbor_tree* t) const { arbor_tree_free(t); }
};
struct PolyDeleter {
  void operator()(arbor_poly* p) const { arbor_poly_free(p); }
};
struct CsfDeleter {
  void operator()(arbor_csf* c) const { arbor_csf_free(c); }
};
struct ProfileDeleter {
  void operator()(arbor_profile* p) const { arbor_profile_free(p); }
};
using TreeHandle = std::unique_ptr<arbor_tree, TreeDeleter>;
using PolyHandle = std::unique_ptr<arbor_poly, PolyDeleter>;
using CsfHandle = std::unique_ptr<arbor_csf, CsfDeleter>;
using ProfileHandle = std::unique_ptr<arbor_profile, ProfileDeleter>;

void check(arbor_status status) {
  if (status != ARBOR_OK) throw DomainFailure{arbor_status_name(status), arbor_last_error()};
}

std::string take(char* s) {
  OwnedString owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainFailure{"IoError", "cannot read " + path};
  buf << in.rdbuf();
  return buf.str();
}

TreeHandle load_tree(const std::string& path) {
  arbor_tree* t = nullptr;
  check(arbor_tree_parse(read_input(path).c_str(), &t));
  return TreeHandle(t);
}

// Renders a JSON document as aligned "key  value" rows.
std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const auto& e : v) {
      if (!out.empty()) out += ' ';
      out += e.is_primitive() ? scalar_text(e) : e.dump();
    }
    return out;
  }
  return v.dump();
}

void print_pretty(const Json& doc, std::ostream& os) {
  if (!doc.is_object()) {
    os << scalar_text(doc) << "\n";
    return;
  }
  std::size_t width = 0;
  for (const auto& [k, v] : doc.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : doc.items()) {
    const bool rows = v.is_array() && !v.empty() && !v.front().is_primitive();
    os << k << std::string(width - k.size() + 2, ' ');
    if (!rows) {
      os << scalar_text(v) << "\n";
      continue;
    }
    os << "(" << v.size() << ")\n";
    for (const auto& row : v) os << "  " << scalar_text(row.is_object() ? Json(row) : row) << "\n";
  }
}

struct Output {
  bool pretty = false;

  void emit(const std::string& json_text) const {
    if (!pretty) {
      std::cout << json_text << "\n";
      return;
    }
    print_pretty(Json::parse(json_text), std::cout);
  }
};

std::optional<std::size_t> env_cap() {
  const char* raw = std::getenv("ARBOR_CAP");
  if (!raw || !*raw) return std::nullopt;
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(raw, &pos);
    if (pos != std::string(raw).size() || v == 0) throw std::invalid_argument(raw);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw DomainFailure{"InvalidArgument", std::string("ARBOR_CAP is not a positive integer: ") + raw};
  }
}

// --cap wins over ARBOR_CAP; 0 selects the library default.
std::size_t effective_cap(std::size_t flag) {
  if (flag) return flag;
  return env_cap().value_or(0);
}

int visit_tree(const arbor_tree* tree, void* user) {
  auto* sink = static_cast<std::vector<TreeHandle>*>(user);
  char* text = nullptr;
  check(arbor_tree_edge_list(tree, &text));
  const std::string edge_list = take(text);
  arbor_tree* copy = nullptr;
  check(arbor_tree_parse(edge_list.c_str(), &copy));
  sink->emplace_back(copy);
  return 0;
}

Json edges_json(const std::string& edge_list) {
  std::istringstream in(edge_list);
  std::size_t n = 0;
  in >> n;
  Json edges = Json::array();
  for (std::size_t u, v; in >> u >> v;) edges.push_back({u, v});
  return edges;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tree invariants: subtree polynomial, chromatic symmetric function, "
               "trunk/twig recovery"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--pretty", out.pretty, "Human-readable table instead of JSON");

  std::string in_path, poly_path, invariant = "csf", method = "fast", out_dir;
  std::size_t n = 0, n_max = 0, cap = 0, colors = 0;
  unsigned jobs = 1;
  bool timing = false;

  auto* gen = app.add_subcommand("gen", "List one tree per isomorphism class");
  gen->add_option("--n", n, "Order")->required()->check(CLI::PositiveNumber);
  gen->add_option("--cap", cap, "Largest order allowed");
  gen->add_option("--out-dir", out_dir, "Also write <hash>.tree edge lists here");

  auto* dec = app.add_subcommand("decompose", "Trunk and twigs of a tree");
  dec->add_option("--in", in_path, "Edge-list file, '-' for stdin")->required();

  auto* sp = app.add_subcommand("subtree-poly", "Bivariate subtree polynomial");
  sp->add_option("--in", in_path, "Edge-list file, '-' for stdin")->required();
  sp->add_option("--method", method, "fast or brute")
      ->check(CLI::IsMember({"fast", "brute"}));
  sp->add_option("--cap", cap, "Largest order for brute force");

  auto* cs = app.add_subcommand("csf", "Chromatic symmetric function in the power-sum basis");
  cs->add_option("--in", in_path, "Edge-list file, '-' for stdin")->required();
  cs->add_option("--cap", cap, "Largest order allowed");
  cs->add_option("--colors", colors, "Report the number of proper colorings with this many colors");

  auto* rec = app.add_subcommand("recover", "Trunk size and twig lengths from a polynomial");
  rec->add_option("--poly-in", poly_path, "Polynomial JSON file, '-' for stdin")->required();

  auto* rt = app.add_subcommand("roundtrip", "Check recovery against direct decomposition");
  auto* rt_in = rt->add_option("--in", in_path, "Single tree to check");
  auto* rt_n = rt->add_option("--n-max", n_max, "Check every free tree with 2 <= n <= N");
  rt_in->excludes(rt_n);
  rt->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  rt->add_option("--cap", cap, "Largest order allowed");

  auto* sc = app.add_subcommand("scan", "Look for invariant collisions among free trees");
  sc->add_option("--n", n, "Order")->required()->check(CLI::PositiveNumber);
  sc->add_option("--invariant", invariant, "csf, subtree or profile")
      ->check(CLI::IsMember({"csf", "subtree", "profile"}));
  sc->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  sc->add_option("--cap", cap, "Largest order allowed");
  sc->add_flag("--timing", timing, "Include elapsed seconds in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (rt->parsed() && rt_in->count() == 0 && rt_n->count() == 0) {
      std::cerr << "roundtrip needs --in or --n-max\n";
      return 2;
    }

    if (gen->parsed()) {
      std::vector<TreeHandle> trees;
      check(arbor_free_trees(n, effective_cap(cap), visit_tree, &trees));
      if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
      Json list = Json::array();
      for (const auto& t : trees) {
        std::string edge_list = take([&] { char* s = nullptr; check(arbor_tree_edge_list(t.get(), &s)); return s; }());
        std::string hash = take([&] { char* s = nullptr; check(arbor_tree_canonical_hash(t.get(), &s)); return s; }());
        std::string code = take([&] { char* s = nullptr; check(arbor_tree_canonical_code(t.get(), &s)); return s; }());
        if (!out_dir.empty()) {
          std::ofstream file(std::filesystem::path(out_dir) / (hash + ".tree"));
          if (!file) throw DomainFailure{"IoError", "cannot write into " + out_dir};
          file << edge_list;
        }
        list.push_back({{"hash", hash}, {"code", code}, {"edges", edges_json(edge_list)}});
      }
      out.emit(Json{{"n", n}, {"count", trees.size()}, {"trees", list}}.dump());
    } else if (dec->parsed()) {
      auto t = load_tree(in_path);
      char* s = nullptr;
      check(arbor_tree_decompose_json(t.get(), &s));
      out.emit(take(s));
    } else if (sp->parsed()) {
      auto t = load_tree(in_path);
      arbor_poly* p = nullptr;
      check(arbor_subtree_poly(t.get(), method == "brute" ? ARBOR_POLY_BRUTEFORCE : ARBOR_POLY_FAST,
                               effective_cap(cap), &p));
      PolyHandle poly(p);
      char* s = nullptr;
      check(arbor_poly_to_json(poly.get(), &s));
      out.emit(take(s));
    } else if (cs->parsed()) {
      auto t = load_tree(in_path);
      arbor_csf* c = nullptr;
      check(arbor_csf_compute(t.get(), effective_cap(cap), 1, &c));
      CsfHandle f(c);
      char* s = nullptr;
      if (colors > 0) {
        check(arbor_csf_count_colorings(f.get(), colors, &s));
        out.emit(Json{{"n", arbor_tree_order(t.get())}, {"colors", colors}, {"proper_colorings", take(s)}}.dump());
      } else {
        check(arbor_csf_to_json(f.get(), &s));
        out.emit(take(s));
      }
    } else if (rec->parsed()) {
      arbor_poly* p = nullptr;
      check(arbor_poly_from_json(read_input(poly_path).c_str(), &p));
      PolyHandle poly(p);
      arbor_profile* r = nullptr;
      check(arbor_recover(poly.get(), &r));
      ProfileHandle profile(r);
      char* s = nullptr;
      check(arbor_profile_to_json(profile.get(), &s));
      out.emit(take(s));
    } else if (rt->parsed()) {
      if (rt_in->count()) {
        auto t = load_tree(in_path);
        arbor_poly* p = nullptr;
        check(arbor_subtree_poly(t.get(), ARBOR_POLY_FAST, 0, &p));
        PolyHandle poly(p);
        arbor_profile* r = nullptr;
        check(arbor_recover(poly.get(), &r));
        ProfileHandle recovered(r);
        arbor_profile* d = nullptr;
        check(arbor_tree_profile(t.get(), &d));
        ProfileHandle direct(d);
        if (!arbor_profile_equal(recovered.get(), direct.get()))
          throw DomainFailure{"RoundtripMismatch",
                              "recovered profile differs from the direct decomposition"};
        char* s = nullptr;
        check(arbor_profile_to_json(recovered.get(), &s));
        out.emit(take(s));
      } else {
        char* s = nullptr;
        std::size_t failures = 0;
        check(arbor_roundtrip(n_max, effective_cap(cap), jobs, &s, &failures));
        std::string summary = take(s);
        if (out.pretty)
          std::cout << Json::parse(summary)["summary"].get<std::string>() << "\n";
        else
          out.emit(summary);
        if (failures) return 1;
      }
    } else if (sc->parsed()) {
      const arbor_invariant inv = invariant == "csf"       ? ARBOR_INVARIANT_CSF
                                  : invariant == "subtree" ? ARBOR_INVARIANT_SUBTREE_POLY
                                                           : ARBOR_INVARIANT_PROFILE;
      char* s = nullptr;
      check(arbor_scan(n, inv, effective_cap(cap), jobs, timing ? 1 : 0, &s));
      out.emit(take(s));
    }
  } catch (const DomainFailure& f) {
    std::cerr << Json{{"error", f.code}, {"detail", f.detail}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "Internal"}, {"detail", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}
