#pragma once

#include <string>
#include <string_view>

#include "arbor/csf.hpp"
#include "arbor/enumeration.hpp"
#include "arbor/recovery.hpp"
#include "arbor/subtree_poly.hpp"
#include "arbor/tree.hpp"

// JSON documents exchanged by the library and the command line tool. All
// writers are deterministic: identical values give identical bytes.
namespace arbor::json {

std::string to_json(const Decomposition& d);
std::string to_json(const BivariatePoly& p, std::size_t n);
std::string to_json(const PowerSumFunction& f);
std::string to_json(const RecoveredProfile& p);
std::string to_json(const ScanReport& r, bool with_timing = false);
std::string to_json(const RoundtripSummary& s);

/// Parses {"n": n, "terms": [[q, r, "coeff"], ...]}; throws MalformedPoly.
BivariatePoly poly_from_json(std::string_view text);

}  // namespace arbor::json
