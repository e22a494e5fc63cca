#include "arbor/serialize.hpp"

#include <algorithm>

#include <json.hpp>

#include "arbor/error.hpp"

namespace arbor::json {

using Json = nlohmann::ordered_json;

std::string to_json(const Decomposition& d) {
  Json twigs = Json::array();
  for (const auto& tw : d.twigs)
    twigs.push_back({{"attach", tw.attachment}, {"path", tw.path}, {"length", tw.length()}});
  Json doc = {{"trunk", d.trunk},
              {"trunk_size", d.trunk_size()},
              {"twigs", twigs},
              {"twig_lengths", d.twig_lengths()},
              {"degenerate", d.degenerate}};
  return doc.dump();
}

std::string to_json(const BivariatePoly& p, std::size_t n) {
  Json terms = Json::array();
  for (const auto& [key, c] : p.terms()) terms.push_back({key.first, key.second, c.str()});
  return Json{{"n", n}, {"terms", terms}}.dump();
}

std::string to_json(const PowerSumFunction& f) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : f.terms()) terms.push_back({lambda.parts(), c.str()});
  return Json{{"n", f.degree()}, {"basis", "powersum"}, {"terms", terms}}.dump();
}

std::string to_json(const RecoveredProfile& p) {
  Json doc = {{"kind", p.kind == ProfileKind::Path ? "path" : "standard"},
              {"n", p.n},
              {"leaves", p.leaves},
              {"trunk_size", p.trunk_size},
              {"twigs", p.twig_lengths}};
  return doc.dump();
}

std::string to_json(const ScanReport& r, bool with_timing) {
  Json pairs = Json::array();
  for (const auto& [a, b] : r.collisions) pairs.push_back({a, b});
  Json doc = {{"n", r.n},
              {"invariant", invariant_name(r.invariant)},
              {"tree_count", r.tree_count},
              {"collision_count", r.collisions.size()},
              {"collisions", pairs}};
  if (r.invariant == Invariant::RecoveredProfile)
    doc["roundtrip_failures"] = r.roundtrip_failures;
  if (with_timing) doc["elapsed_seconds"] = r.elapsed.count();
  return doc.dump();
}

std::string to_json(const RoundtripSummary& s) {
  const std::string summary = std::string(s.failures.empty() ? "ok" : "fail") + ": " +
                              std::to_string(s.trees) + " trees, failures: " +
                              std::to_string(s.failures.size());
  Json doc = {{"n_max", s.n_max},
              {"trees", s.trees},
              {"failures", s.failures.size()},
              {"failed", s.failures},
              {"summary", summary}};
  return doc.dump();
}

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::MalformedPoly, what);
}

BigInt parse_coefficient(const Json& v) {
  if (v.is_number_unsigned()) return BigInt(v.get<std::uint64_t>());
  if (!v.is_string()) malformed("coefficient must be a decimal string");
  const auto& s = v.get_ref<const std::string&>();
  if (s.empty() || s.size() > 4096 ||
      !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    malformed("coefficient '" + s + "' is not a nonnegative decimal integer");
  return BigInt(s);
}

}  // namespace

BivariatePoly poly_from_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array())
    malformed("expected an object with a \"terms\" array");

  BivariatePoly p;
  for (const auto& term : doc["terms"]) {
    if (!term.is_array() || term.size() != 3 || !term[0].is_number_unsigned() ||
        !term[1].is_number_unsigned())
      malformed("each term must be [q_exp, r_exp, \"coeff\"]");
    const BigInt c = parse_coefficient(term[2]);
    if (c == 0) malformed("zero coefficients are not stored");
    const auto q = term[0].get<std::size_t>();
    const auto r = term[1].get<std::size_t>();
    if (p.coefficient(q, r) != 0) malformed("repeated term");
    p.add(q, r, c);
  }
  if (doc.contains("n")) {
    if (!doc["n"].is_number_unsigned()) malformed("\"n\" must be a nonnegative integer");
    const auto n = doc["n"].get<std::size_t>();
    if (!p.empty() && n != p.max_q_exp() + 1)
      malformed("\"n\" disagrees with the top q-exponent");
  }
  return p;
}

}  // namespace arbor::json
