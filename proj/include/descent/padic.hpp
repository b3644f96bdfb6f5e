#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "descent/types.hpp"

namespace descent {

// Deterministic trial division; inputs are tiny throughout.
bool is_prime(std::int64_t p);
// Throws std::domain_error when p is not prime.
void require_prime(std::int64_t p);

// Base-p expansion, least significant digit first, canonical (no trailing
// zeros; the value 0 has an empty digit sequence).
struct DigitExpansion {
  int base = 2;
  std::vector<int> digits;

  static DigitExpansion of(std::int64_t value, int base);
  std::int64_t value() const;
};

// Largest e with p^e dividing x. x = 0 is a domain error (infinite).
int valuation(const Natural& x, int p);

// u_p(n): sum of the base-p digits of n >= 1.
int digit_sum(std::int64_t n, int p);
// d_p(n) = u_p(n) - 1.
int depth(std::int64_t n, int p);

// Part-wise digit sum and depth of a composition. They satisfy
// digit_sum(c) = depth(c) + (number of parts).
int digit_sum(const Composition& c, int p);
int depth(const Composition& c, int p);

// Number of carries in the base-p column addition of all parts at once;
// a column overflowing by t*p contributes t. Equivalently the unique count
// with digit_sum(c) = (p-1)*carries(c) + digit_sum(total).
int carries(const Composition& c, int p);

// Multinomial coefficient mod p as the product of digit-level multinomials;
// zero as soon as a column's digits overflow the corresponding digit of n.
int lucas_multinomial_mod(std::int64_t n, std::span<const int> parts, int p);
int lucas_multinomial_mod(std::int64_t n, const std::vector<int>& parts, int p);

// Valuation of the multinomial coefficient of c, via the carry count.
int kummer_valuation(const Composition& c, int p);

// Valuation of n! as (n - u_p(n)) / (p-1).
int factorial_valuation(std::int64_t n, int p);

// carries(co(S)) through the depth identity
// (d_p(c) + |S| - d_p(n)) / (p-1); a non-integral value would indicate a
// broken invariant and throws std::logic_error.
int carries_from_depths(const DescentSet& s, int p);

// x^e mod m for small operands.
std::int64_t pow_mod(std::int64_t base, std::int64_t exponent, std::int64_t mod);

}  // namespace descent
