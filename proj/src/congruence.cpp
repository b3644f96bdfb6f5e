#include "descent/congruence.hpp"

#include <algorithm>

#include "descent/core.hpp"
#include "descent/padic.hpp"

namespace descent {

namespace {

std::int64_t int_pow(std::int64_t base, int exponent) {
  std::int64_t result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

Natural natural_pow(std::int64_t base, int exponent) {
  return boost::multiprecision::pow(Natural(base), static_cast<unsigned>(exponent));
}

// Positions of each digit value, ascending, inside a fixed window.
std::vector<std::vector<int>> positions_by_digit(std::int64_t value, int p, int window) {
  std::vector<std::vector<int>> by_digit(static_cast<std::size_t>(p));
  for (int j = 0; j < window; ++j) {
    by_digit[static_cast<std::size_t>(value % p)].push_back(j);
    value /= p;
  }
  return by_digit;
}

}  // namespace

bool same_nonzero_digits(std::int64_t m, std::int64_t n, int p) {
  require_prime(p);
  if (m < 1 || n < 1) throw std::domain_error("digit comparison needs positive integers");
  std::vector<int> counts(static_cast<std::size_t>(p), 0);
  for (std::int64_t v = m; v > 0; v /= p) ++counts[static_cast<std::size_t>(v % p)];
  for (std::int64_t v = n; v > 0; v /= p) --counts[static_cast<std::size_t>(v % p)];
  for (std::size_t digit = 1; digit < counts.size(); ++digit) {
    if (counts[digit] != 0) return false;
  }
  return true;
}

DigitMap::DigitMap(std::int64_t source, std::int64_t target, int prime, std::vector<int> pi)
    : source_(source), target_(target), prime_(prime), pi_(std::move(pi)) {}

DigitMap DigitMap::build(std::int64_t source, std::int64_t target, int p) {
  if (!same_nonzero_digits(source, target, p)) {
    throw std::domain_error("digit map: operands differ in their nonzero base-p digits");
  }
  const int window = std::max(static_cast<int>(DigitExpansion::of(source, p).digits.size()),
                              static_cast<int>(DigitExpansion::of(target, p).digits.size()));
  const auto source_positions = positions_by_digit(source, p, window);
  const auto target_positions = positions_by_digit(target, p, window);

  std::vector<int> pi(static_cast<std::size_t>(window));
  for (int digit = 0; digit < p; ++digit) {
    const auto& from = source_positions[static_cast<std::size_t>(digit)];
    const auto& to = target_positions[static_cast<std::size_t>(digit)];
    for (std::size_t i = 0; i < from.size(); ++i) {
      pi[static_cast<std::size_t>(from[i])] = to[i];
    }
  }
  return DigitMap(source, target, p, std::move(pi));
}

std::int64_t DigitMap::apply(std::int64_t x) const {
  if (x < 0) throw std::domain_error("digit map: negative argument");
  std::int64_t result = 0;
  int j = 0;
  for (std::int64_t v = x; v > 0; v /= prime_, ++j) {
    const std::int64_t digit = v % prime_;
    if (digit == 0) continue;
    const int image = j < static_cast<int>(pi_.size()) ? pi_[static_cast<std::size_t>(j)] : j;
    result += digit * int_pow(prime_, image);
  }
  return result;
}

bool NonCarryFamily::contains(const DescentSet& s) const {
  return std::binary_search(members.begin(), members.end(), s);
}

NonCarryFamily non_carry_family(std::int64_t m, int p, int max_order) {
  require_prime(p);
  detail::check_order_capacity(static_cast<int>(m), max_order);
  NonCarryFamily family;
  family.order = m;
  family.prime = p;
  const std::uint32_t mask_count = std::uint32_t{1} << (m - 1);
  for (std::uint32_t mask = 0; mask < mask_count; ++mask) {
    DescentSet candidate(static_cast<int>(m), mask);
    if (carries(to_composition(candidate), p) == 0) {
      family.members.push_back(candidate);
    }
  }
  return family;
}

DescentSet map_non_carry_subset(const DigitMap& map, const DescentSet& s) {
  if (s.order() != map.source()) {
    throw std::domain_error("digit map: subset has the wrong ambient order");
  }
  if (carries(to_composition(s), map.prime()) != 0) {
    throw std::domain_error("digit map: subset is not carry-free");
  }
  std::vector<int> mapped;
  mapped.reserve(static_cast<std::size_t>(s.size()));
  for (int position : s.positions()) {
    mapped.push_back(static_cast<int>(map.apply(position)));
  }
  // Carry-free partial sums stay increasing under the map; from_positions
  // rejects the result if that invariant ever broke.
  return DescentSet::from_positions(static_cast<int>(map.target()), mapped);
}

CheckResult check_power_shift(int n, int r, int s, int k, int p, const PowerProvider& apow) {
  require_prime(p);
  if (k < 1 || r < k || s < k) {
    throw std::domain_error("power shift: needs r, s >= k >= 1");
  }
  const std::int64_t period = int_pow(p, k - 1) * (p - 1);
  if ((static_cast<std::int64_t>(r) - s) % period != 0) {
    throw std::domain_error("power shift: exponents not congruent mod p^(k-1)(p-1)");
  }
  CheckResult result;
  result.modulus = natural_pow(p, k);
  result.lhs = apow(n, r) % result.modulus;
  result.rhs = apow(n, s) % result.modulus;
  result.holds = result.lhs == result.rhs;
  return result;
}

CheckResult check_power_shift_two(int n, int r, int s, int k, const PowerProvider& apow) {
  if (k < 3 || r < k || s < k) {
    throw std::domain_error("power shift (p=2): needs r, s >= k >= 3");
  }
  if ((static_cast<std::int64_t>(r) - s) % int_pow(2, k - 2) != 0) {
    throw std::domain_error("power shift (p=2): exponents not congruent mod 2^(k-2)");
  }
  CheckResult result;
  result.modulus = natural_pow(2, k);
  result.lhs = apow(n, r) % result.modulus;
  result.rhs = apow(n, s) % result.modulus;
  result.holds = result.lhs == result.rhs;
  return result;
}

CheckResult check_power_recursion(int n, int r, int k, int p, const PowerProvider& apow) {
  require_prime(p);
  if (k < 1 || r < k * p) {
    throw std::domain_error("power recursion: needs r >= k*p");
  }
  Integer sum = 0;
  for (int j = 0; j <= k; ++j) {
    const Integer term = Integer(binomial(k, j)) * Integer(apow(n, r - j * (p - 1)));
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  CheckResult result;
  result.modulus = natural_pow(p, k);
  result.lhs = ((sum % result.modulus) + result.modulus) % result.modulus;
  result.rhs = 0;
  result.holds = result.lhs == 0;
  return result;
}

CheckResult check_transfer(int m, int n, int r, int p, const PowerProvider& apow) {
  require_prime(p);
  if (p == 2) throw std::domain_error("transfer: prime must be odd");
  if (r < 2 || r % 2 != 0) throw std::domain_error("transfer: exponent must be even");
  if (!same_nonzero_digits(m, n, p)) {
    throw std::domain_error("transfer: operands differ in their nonzero base-p digits");
  }
  CheckResult result;
  result.modulus = p;
  result.lhs = apow(m, r) % p;
  Natural scale;
  if (m >= n) {
    scale = natural_pow(2, m - n) % p;
  } else {
    const std::int64_t inverse_two = pow_mod(2, p - 2, p);
    scale = pow_mod(inverse_two, n - m, p);
  }
  result.rhs = scale * (apow(n, r) % p) % p;
  result.holds = result.lhs == result.rhs;
  return result;
}

CheckResult check_scale_by_prime(int n, int r, int p, const PowerProvider& apow) {
  require_prime(p);
  if (p == 2) throw std::domain_error("scale check: prime must be odd");
  if (r < 2 || r % 2 != 0) throw std::domain_error("scale check: exponent must be even");
  if (n < 1) throw std::domain_error("scale check: order must be positive");
  CheckResult result;
  result.modulus = p;
  result.lhs = apow(p * n, r) % p;
  result.rhs = apow(n, r) % p;
  result.holds = result.lhs == result.rhs;
  return result;
}

CheckResult check_prime_power_coprime(int k, int r, int p, const PowerProvider& apow) {
  require_prime(p);
  if (p == 2) throw std::domain_error("coprimality check: prime must be odd");
  if (r < 2 || r % 2 != 0) throw std::domain_error("coprimality check: exponent must be even");
  if (k < 0) throw std::domain_error("coprimality check: exponent of p must be >= 0");
  CheckResult result;
  result.modulus = p;
  result.lhs = apow(static_cast<int>(int_pow(p, k)), r) % p;
  result.rhs = 0;  // the residue the statement forbids
  result.holds = result.lhs != 0;
  return result;
}

}  // namespace descent
