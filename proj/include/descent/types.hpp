#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace descent {

// Exact arbitrary-precision integers. Natural is the nonnegative role
// (counts, power sums); Integer appears wherever signed intermediates do.
using Natural = boost::multiprecision::cpp_int;
using Integer = boost::multiprecision::cpp_int;

// Default ceiling for subset enumeration (2^(n-1) masks). Callers may raise
// it per call; kHardMaxOrder keeps the internal 128-bit counting path exact.
inline constexpr int kDefaultMaxOrder = 22;
inline constexpr int kHardMaxOrder = 30;

// Raised when a request exceeds an enumeration limit, as opposed to being
// malformed (std::domain_error / std::invalid_argument).
class capacity_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A subset S of {1, ..., n-1} together with its ambient order n, stored as a
// bitmask (bit i-1 set  <=>  position i in S). Masks iterate in ascending
// numeric order everywhere, which fixes all bulk outputs.
class DescentSet {
public:
  DescentSet(int order, std::uint32_t mask);
  static DescentSet from_positions(int order, const std::vector<int>& positions);

  int order() const { return order_; }
  std::uint32_t mask() const { return mask_; }
  int size() const;
  bool contains(int position) const;
  bool empty() const { return mask_ == 0; }
  std::vector<int> positions() const;

  friend auto operator<=>(const DescentSet&, const DescentSet&) = default;

private:
  int order_;
  std::uint32_t mask_;
};

// An ordered sequence of positive parts with their sum. Weak compositions
// (zero parts allowed) are passed around as plain vectors; only the strict
// form gets a type because the descent-set bijection produces it.
class Composition {
public:
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::int64_t total() const { return total_; }
  int part_count() const { return static_cast<int>(parts_.size()); }

  friend bool operator==(const Composition&, const Composition&) = default;

private:
  std::vector<int> parts_;
  std::int64_t total_;
};

std::string to_string(const DescentSet& s);
std::string to_string(const Composition& c);

}  // namespace descent
