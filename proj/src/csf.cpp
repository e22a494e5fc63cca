#include "arbor/csf.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "arbor/error.hpp"
#include "arbor/parallel.hpp"
#include "fnv.hpp"

namespace arbor {

Partition::Partition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(ErrorCode::InvalidArgument, "partition needs a part");
  if (std::find(parts_.begin(), parts_.end(), 0u) != parts_.end())
    throw Error(ErrorCode::InvalidArgument, "partition parts must be positive");
  std::sort(parts_.rbegin(), parts_.rend());
  size_ = std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
}

void PowerSumFunction::add(const Partition& lambda, const BigInt& c) {
  if (lambda.size() != n_)
    throw Error(ErrorCode::InvalidArgument, "partition size does not match degree");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt PowerSumFunction::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? BigInt{0} : it->second;
}

namespace {

// Component sizes as bytes, sorted descending; n stays below 256.
using PartitionKey = std::string;

PartitionKey component_key(std::size_t n, const std::vector<Edge>& edges,
                           std::uint64_t mask, std::vector<std::uint32_t>& parent,
                           std::vector<std::uint32_t>& count) {
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) parent[find(edges[i].first)] = find(edges[i].second);
  std::fill(count.begin(), count.end(), 0u);
  for (std::uint32_t v = 0; v < n; ++v) ++count[find(v)];
  PartitionKey key;
  for (std::uint32_t v = 0; v < n; ++v)
    if (count[v]) key.push_back(static_cast<char>(count[v]));
  std::sort(key.begin(), key.end(), [](char a, char b) {
    return static_cast<unsigned char>(a) > static_cast<unsigned char>(b);
  });
  return key;
}

}  // namespace

PowerSumFunction csf(const Tree& t, std::size_t cap, unsigned jobs) {
  const std::size_t n = t.order();
  if (n > cap)
    throw Error(ErrorCode::CapExceeded,
                "chromatic symmetric function is capped at n = " + std::to_string(cap));
  if (n > 63) throw Error(ErrorCode::CapExceeded, "edge subsets are enumerated as 64-bit masks");

  const auto edges = t.edges();
  const std::uint64_t subsets = std::uint64_t{1} << edges.size();
  jobs = std::max(1u, jobs);

  // |coefficient| <= 2^(n-1), so per-worker 64-bit accumulators cannot overflow.
  std::vector<std::unordered_map<PartitionKey, std::int64_t>> partial(jobs);
  parallel_chunks(subsets, jobs, [&](unsigned worker, std::size_t begin, std::size_t end) {
    std::vector<std::uint32_t> parent(n), count(n);
    auto& acc = partial[worker];
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      const std::int64_t sign = (std::popcount(mask) % 2 == 0) ? 1 : -1;
      acc[component_key(n, edges, mask, parent, count)] += sign;
    }
  });

  PowerSumFunction f(n);
  for (const auto& acc : partial)
    for (const auto& [key, c] : acc) {
      std::vector<std::size_t> parts;
      for (char ch : key) parts.push_back(static_cast<unsigned char>(ch));
      f.add(Partition(std::move(parts)), c);
    }
  return f;
}

Monomials csf_oracle(const Tree& t, std::size_t num_vars) {
  const std::size_t n = t.order();
  if (n > kOracleMaxOrder)
    throw Error(ErrorCode::CapExceeded,
                "coloring oracle is capped at n = " + std::to_string(kOracleMaxOrder));
  if (num_vars > n)
    throw Error(ErrorCode::CapExceeded, "coloring oracle needs num_vars <= n");

  Monomials out;
  if (num_vars == 0) return out;
  const auto edges = t.edges();
  std::vector<std::size_t> color(n, 0);
  std::vector<std::size_t> exponents(num_vars);
  while (true) {
    bool proper = std::all_of(edges.begin(), edges.end(),
                              [&](const Edge& e) { return color[e.first] != color[e.second]; });
    if (proper) {
      std::fill(exponents.begin(), exponents.end(), 0);
      for (auto c : color) ++exponents[c];
      out[exponents] += 1;
    }
    std::size_t i = 0;
    while (i < n && ++color[i] == num_vars) color[i++] = 0;
    if (i == n) break;
  }
  return out;
}

namespace {

Monomials multiply(const Monomials& a, const Monomials& b) {
  Monomials out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      auto e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out[e] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

Monomials expand_monomials(const PowerSumFunction& f, std::size_t num_vars) {
  Monomials out;
  if (num_vars == 0) return out;
  for (const auto& [lambda, c] : f.terms()) {
    Monomials term{{std::vector<std::size_t>(num_vars, 0), c}};
    for (std::size_t k : lambda.parts()) {
      Monomials power_sum;
      for (std::size_t i = 0; i < num_vars; ++i) {
        std::vector<std::size_t> e(num_vars, 0);
        e[i] = k;
        power_sum[e] = 1;
      }
      term = multiply(term, power_sum);
    }
    for (auto& [e, v] : term) out[e] += v;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

BigInt count_proper_colorings(const PowerSumFunction& f, std::uint64_t m) {
  BigInt total = 0;
  for (const auto& [lambda, c] : f.terms()) {
    BigInt power = 1;
    for (std::size_t i = 0; i < lambda.length(); ++i) power *= m;
    total += c * power;
  }
  return total;
}

std::string csf_serialize(const PowerSumFunction& f) {
  std::string out = std::to_string(f.degree()) + "|";
  for (const auto& [lambda, c] : f.terms()) {
    for (std::size_t i = 0; i < lambda.length(); ++i) {
      if (i) out += ',';
      out += std::to_string(lambda.parts()[i]);
    }
    out += ':' + c.str() + ';';
  }
  return out;
}

std::string csf_fingerprint(const PowerSumFunction& f) {
  return detail::hex64(detail::fnv1a64(csf_serialize(f)));
}

}  // namespace arbor
