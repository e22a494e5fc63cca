#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "arbor/bigint.hpp"
#include "arbor/tree.hpp"

namespace arbor {

// Integer partition, parts weakly decreasing.
class Partition {
public:
  Partition() = default;
  /// Sorts the parts; throws InvalidArgument on a zero part or empty input.
  explicit Partition(std::vector<std::size_t> parts);

  const std::vector<std::size_t>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return size_; }
  std::size_t length() const noexcept { return parts_.size(); }

  // Descending lexicographic order: (3) < (2,1) < (1,1,1) in iteration.
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ > b.parts_;
  }
  friend bool operator==(const Partition&, const Partition&) = default;

private:
  std::vector<std::size_t> parts_;
  std::size_t size_ = 0;
};

// Symmetric function of homogeneous degree n in the power-sum basis.
class PowerSumFunction {
public:
  using Terms = std::map<Partition, BigInt>;

  explicit PowerSumFunction(std::size_t n) : n_(n) {}

  void add(const Partition& lambda, const BigInt& c);
  BigInt coefficient(const Partition& lambda) const;

  std::size_t degree() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }

  friend bool operator==(const PowerSumFunction&,
                         const PowerSumFunction&) = default;

private:
  std::size_t n_;
  Terms terms_;
};

inline constexpr std::size_t kDefaultCsfCap = 24;
inline constexpr std::size_t kOracleMaxOrder = 9;

/// Chromatic symmetric function: sum over edge subsets S of
/// (-1)^|S| p_{lambda(S)}. Subset ranges are split across `jobs` threads.
PowerSumFunction csf(const Tree& t, std::size_t cap = kDefaultCsfCap,
                     unsigned jobs = 1);

// Polynomial in a fixed number of variables: exponent vector -> coefficient.
using Monomials = std::map<std::vector<std::size_t>, BigInt>;

/// Truncation of X_T to x_1..x_m by direct enumeration of proper colorings.
/// Requires n <= 9 and num_vars <= n.
Monomials csf_oracle(const Tree& t, std::size_t num_vars);

/// Expands a power-sum function into monomials in num_vars variables.
Monomials expand_monomials(const PowerSumFunction& f, std::size_t num_vars);

/// Specialisation x_1 = ... = x_m = 1, remaining variables 0.
BigInt count_proper_colorings(const PowerSumFunction& f, std::uint64_t m);

/// Deterministic text form: "n|parts:coeff;..." in term order.
std::string csf_serialize(const PowerSumFunction& f);

/// 16 hex digits of a 64-bit FNV-1a hash over csf_serialize.
std::string csf_fingerprint(const PowerSumFunction& f);

}  // namespace arbor
