#include "arbor/arbor.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "arbor/csf.hpp"
#include "arbor/enumeration.hpp"
#include "arbor/error.hpp"
#include "arbor/recovery.hpp"
#include "arbor/serialize.hpp"
#include "arbor/subtree_poly.hpp"
#include "arbor/tree.hpp"

struct arbor_tree {
  arbor::Tree value;
};
struct arbor_poly {
  arbor::BivariatePoly value;
  std::size_t n;
};
struct arbor_csf {
  arbor::PowerSumFunction value;
};
struct arbor_profile {
  arbor::RecoveredProfile value;
};

namespace {

thread_local std::string last_error;

arbor_status status_of(arbor::ErrorCode code) {
  using arbor::ErrorCode;
  switch (code) {
    case ErrorCode::Parse: return ARBOR_E_PARSE;
    case ErrorCode::OutOfRange: return ARBOR_E_OUT_OF_RANGE;
    case ErrorCode::SelfLoop: return ARBOR_E_SELF_LOOP;
    case ErrorCode::DuplicateEdge: return ARBOR_E_DUPLICATE_EDGE;
    case ErrorCode::Cycle: return ARBOR_E_CYCLE;
    case ErrorCode::Disconnected: return ARBOR_E_DISCONNECTED;
    case ErrorCode::NoEdges: return ARBOR_E_NO_EDGES;
    case ErrorCode::CapExceeded: return ARBOR_E_CAP_EXCEEDED;
    case ErrorCode::MalformedPoly: return ARBOR_E_MALFORMED_POLY;
    case ErrorCode::NotFound: return ARBOR_E_NOT_FOUND;
    case ErrorCode::InconsistentPoly: return ARBOR_E_INCONSISTENT_POLY;
    case ErrorCode::InvalidArgument: return ARBOR_E_INVALID_ARGUMENT;
  }
  return ARBOR_E_INTERNAL;
}

template <class Fn>
arbor_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return ARBOR_OK;
  } catch (const arbor::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return ARBOR_E_INTERNAL;
}

void require(bool ok, const char* what) {
  if (!ok) throw arbor::Error(arbor::ErrorCode::InvalidArgument, what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::size_t or_default(std::size_t cap, std::size_t fallback) { return cap ? cap : fallback; }

}  // namespace

extern "C" {

const char* arbor_version(void) { return "1.0.0"; }

const char* arbor_status_name(arbor_status status) {
  switch (status) {
    case ARBOR_OK: return "Ok";
    case ARBOR_E_PARSE: return "ParseError";
    case ARBOR_E_OUT_OF_RANGE: return "OutOfRange";
    case ARBOR_E_SELF_LOOP: return "SelfLoop";
    case ARBOR_E_DUPLICATE_EDGE: return "DuplicateEdge";
    case ARBOR_E_CYCLE: return "Cycle";
    case ARBOR_E_DISCONNECTED: return "Disconnected";
    case ARBOR_E_NO_EDGES: return "NoEdges";
    case ARBOR_E_CAP_EXCEEDED: return "CapExceeded";
    case ARBOR_E_MALFORMED_POLY: return "MalformedPoly";
    case ARBOR_E_NOT_FOUND: return "NotFound";
    case ARBOR_E_INCONSISTENT_POLY: return "InconsistentPoly";
    case ARBOR_E_INVALID_ARGUMENT: return "InvalidArgument";
    case ARBOR_E_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* arbor_last_error(void) { return last_error.c_str(); }

void arbor_string_free(char* s) { std::free(s); }

arbor_status arbor_tree_parse(const char* text, arbor_tree** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new arbor_tree{arbor::parse_tree(text)};
  });
}

arbor_status arbor_tree_from_edges(size_t n, const uint32_t* edges, size_t edge_count,
                                   arbor_tree** out) {
  return guarded([&] {
    require(out && (edges || edge_count == 0), "null argument");
    std::vector<arbor::Edge> list;
    for (size_t i = 0; i < edge_count; ++i) list.emplace_back(edges[2 * i], edges[2 * i + 1]);
    *out = new arbor_tree{arbor::Tree(n, list)};
  });
}

void arbor_tree_free(arbor_tree* tree) { delete tree; }

size_t arbor_tree_order(const arbor_tree* tree) { return tree ? tree->value.order() : 0; }

arbor_status arbor_tree_edge_list(const arbor_tree* tree, char** out) {
  return guarded([&] {
    require(tree && out, "null argument");
    *out = dup_string(arbor::to_edge_list(tree->value));
  });
}

arbor_status arbor_tree_degree_sequence_json(const arbor_tree* tree, char** out) {
  return guarded([&] {
    require(tree && out, "null argument");
    std::string s = "[";
    for (auto d : arbor::degree_sequence(tree->value)) {
      if (s.size() > 1) s += ",";
      s += std::to_string(d);
    }
    *out = dup_string(s + "]");
  });
}

arbor_status arbor_tree_canonical_code(const arbor_tree* tree, char** out) {
  return guarded([&] {
    require(tree && out, "null argument");
    *out = dup_string(arbor::canonical_code(tree->value));
  });
}

arbor_status arbor_tree_canonical_hash(const arbor_tree* tree, char** out) {
  return guarded([&] {
    require(tree && out, "null argument");
    *out = dup_string(arbor::canonical_hash(tree->value));
  });
}

arbor_status arbor_tree_decompose_json(const arbor_tree* tree, char** out) {
  return guarded([&] {
    require(tree && out, "null argument");
    *out = dup_string(arbor::json::to_json(arbor::decompose(tree->value)));
  });
}

arbor_status arbor_subtree_poly(const arbor_tree* tree, arbor_poly_method method, size_t cap,
                                arbor_poly** out) {
  return guarded([&] {
    require(tree && out, "null argument");
    const auto& t = tree->value;
    auto p = method == ARBOR_POLY_BRUTEFORCE
                 ? arbor::subtree_poly_bruteforce(t, or_default(cap, arbor::kDefaultBruteForceCap))
                 : arbor::subtree_poly_fast(t);
    *out = new arbor_poly{std::move(p), t.order()};
  });
}

arbor_status arbor_poly_from_json(const char* json, arbor_poly** out) {
  return guarded([&] {
    require(json && out, "null argument");
    auto p = arbor::json::poly_from_json(json);
    const std::size_t n = p.empty() ? 0 : p.max_q_exp() + 1;
    *out = new arbor_poly{std::move(p), n};
  });
}

arbor_status arbor_poly_to_json(const arbor_poly* poly, char** out) {
  return guarded([&] {
    require(poly && out, "null argument");
    *out = dup_string(arbor::json::to_json(poly->value, poly->n));
  });
}

arbor_status arbor_poly_coefficient(const arbor_poly* poly, size_t edges, size_t leaves,
                                    char** out) {
  return guarded([&] {
    require(poly && out, "null argument");
    *out = dup_string(poly->value.coefficient(edges, leaves).str());
  });
}

void arbor_poly_free(arbor_poly* poly) { delete poly; }

arbor_status arbor_csf_compute(const arbor_tree* tree, size_t cap, unsigned jobs,
                               arbor_csf** out) {
  return guarded([&] {
    require(tree && out, "null argument");
    *out = new arbor_csf{arbor::csf(tree->value, or_default(cap, arbor::kDefaultCsfCap), jobs)};
  });
}

arbor_status arbor_csf_to_json(const arbor_csf* csf, char** out) {
  return guarded([&] {
    require(csf && out, "null argument");
    *out = dup_string(arbor::json::to_json(csf->value));
  });
}

arbor_status arbor_csf_fingerprint(const arbor_csf* csf, char** out) {
  return guarded([&] {
    require(csf && out, "null argument");
    *out = dup_string(arbor::csf_fingerprint(csf->value));
  });
}

arbor_status arbor_csf_count_colorings(const arbor_csf* csf, uint64_t colors, char** out) {
  return guarded([&] {
    require(csf && out, "null argument");
    *out = dup_string(arbor::count_proper_colorings(csf->value, colors).str());
  });
}

void arbor_csf_free(arbor_csf* csf) { delete csf; }

arbor_status arbor_recover(const arbor_poly* poly, arbor_profile** out) {
  return guarded([&] {
    require(poly && out, "null argument");
    *out = new arbor_profile{arbor::recover_profile(poly->value)};
  });
}

arbor_status arbor_tree_profile(const arbor_tree* tree, arbor_profile** out) {
  return guarded([&] {
    require(tree && out, "null argument");
    *out = new arbor_profile{arbor::profile_of(tree->value)};
  });
}

arbor_profile_kind arbor_profile_kind_of(const arbor_profile* profile) {
  return profile && profile->value.kind == arbor::ProfileKind::Path ? ARBOR_PROFILE_PATH
                                                                    : ARBOR_PROFILE_STANDARD;
}

size_t arbor_profile_trunk_size(const arbor_profile* profile) {
  return profile ? profile->value.trunk_size : 0;
}

size_t arbor_profile_leaves(const arbor_profile* profile) {
  return profile ? profile->value.leaves : 0;
}

size_t arbor_profile_twigs(const arbor_profile* profile, size_t* lengths, size_t capacity) {
  if (!profile) return 0;
  const auto& twigs = profile->value.twig_lengths;
  for (size_t i = 0; lengths && i < capacity && i < twigs.size(); ++i) lengths[i] = twigs[i];
  return twigs.size();
}

int arbor_profile_equal(const arbor_profile* a, const arbor_profile* b) {
  return a && b && a->value == b->value;
}

arbor_status arbor_profile_to_json(const arbor_profile* profile, char** out) {
  return guarded([&] {
    require(profile && out, "null argument");
    *out = dup_string(arbor::json::to_json(profile->value));
  });
}

void arbor_profile_free(arbor_profile* profile) { delete profile; }

arbor_status arbor_free_trees(size_t n, size_t cap, arbor_tree_visitor visit, void* user) {
  return guarded([&] {
    require(visit != nullptr, "null visitor");
    arbor::FreeTreeGenerator gen(n, or_default(cap, arbor::kDefaultFreeTreeCap));
    while (auto t = gen.next()) {
      arbor_tree handle{std::move(*t)};
      if (visit(&handle, user)) break;
    }
  });
}

arbor_status arbor_prufer_oracle(size_t n, size_t* classes) {
  return guarded([&] {
    require(classes != nullptr, "null argument");
    *classes = arbor::prufer_oracle(n);
  });
}

arbor_status arbor_scan(size_t n, arbor_invariant invariant, size_t cap, unsigned jobs,
                        int with_timing, char** report_json) {
  return guarded([&] {
    require(report_json != nullptr, "null argument");
    arbor::Invariant inv;
    switch (invariant) {
      case ARBOR_INVARIANT_CSF: inv = arbor::Invariant::Csf; break;
      case ARBOR_INVARIANT_SUBTREE_POLY: inv = arbor::Invariant::SubtreePoly; break;
      case ARBOR_INVARIANT_PROFILE: inv = arbor::Invariant::RecoveredProfile; break;
      default: throw arbor::Error(arbor::ErrorCode::InvalidArgument, "unknown invariant");
    }
    std::optional<std::size_t> limit;
    if (cap) limit = cap;
    auto report = arbor::scan(n, inv, limit, jobs);
    *report_json = dup_string(arbor::json::to_json(report, with_timing != 0));
  });
}

arbor_status arbor_roundtrip(size_t n_max, size_t cap, unsigned jobs, char** summary_json,
                             size_t* failures) {
  return guarded([&] {
    require(summary_json != nullptr, "null argument");
    auto summary =
        arbor::roundtrip_all(n_max, or_default(cap, arbor::kDefaultFreeTreeCap), jobs);
    if (failures) *failures = summary.failures.size();
    *summary_json = dup_string(arbor::json::to_json(summary));
  });
}

}  // extern "C"
