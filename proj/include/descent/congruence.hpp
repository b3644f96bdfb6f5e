#pragma once

#include <cstdint>
#include <vector>

#include "descent/powersum.hpp"
#include "descent/types.hpp"

namespace descent {

// True when m and n have the same multiset of nonzero base-p digits.
bool same_nonzero_digits(std::int64_t m, std::int64_t n, int p);

// A finite-support permutation of base-p digit positions sending the digits
// of `source` onto the digits of `target`. Built canonically: equal digit
// values are matched in ascending position order, remaining positions inside
// the digit window likewise, everything beyond maps identically.
class DigitMap {
public:
  static DigitMap build(std::int64_t source, std::int64_t target, int p);

  std::int64_t apply(std::int64_t x) const;

  std::int64_t source() const { return source_; }
  std::int64_t target() const { return target_; }
  int prime() const { return prime_; }
  // Position permutation on 0..window-1 (identity beyond).
  const std::vector<int>& position_map() const { return pi_; }

private:
  DigitMap(std::int64_t source, std::int64_t target, int prime, std::vector<int> pi);

  std::int64_t source_;
  std::int64_t target_;
  int prime_;
  std::vector<int> pi_;
};

// NCP(m): the subsets of {1,...,m-1} whose composition adds without base-p
// carries. Closed under inclusion; members listed in ascending mask order.
struct NonCarryFamily {
  std::int64_t order = 1;
  int prime = 2;
  std::vector<DescentSet> members;

  bool contains(const DescentSet& s) const;
};

NonCarryFamily non_carry_family(std::int64_t m, int p, int max_order = kDefaultMaxOrder);

// Image of a non-carry subset under a digit map, element by element. This is
// a cardinality-preserving bijection NCP(source) -> NCP(target); a subset
// with carries is a domain error.
DescentSet map_non_carry_subset(const DigitMap& map, const DescentSet& s);

// Outcome of one congruence check: `holds` plus both reduced sides, so a
// failure is diagnosable from the record alone.
struct CheckResult {
  bool holds = false;
  Natural lhs;
  Natural rhs;
  Natural modulus;
};

// A(n,r) == A(n,s) mod p^k whenever r,s >= k and r == s mod p^(k-1)(p-1).
CheckResult check_power_shift(int n, int r, int s, int k, int p,
                              const PowerProvider& apow = direct_provider());

// Sharper p = 2 form: A(n,r) == A(n,s) mod 2^k for r,s >= k >= 3 and
// r == s mod 2^(k-2).
CheckResult check_power_shift_two(int n, int r, int s, int k,
                                  const PowerProvider& apow = direct_provider());

// Alternating binomial recursion: sum_{j=0..k} (-1)^j C(k,j) A(n, r-j(p-1))
// vanishes mod p^k once r >= k*p.
CheckResult check_power_recursion(int n, int r, int k, int p,
                                  const PowerProvider& apow = direct_provider());

// Digit-transfer congruence: for odd p, even r, and m, n with the same
// nonzero base-p digits, A(m,r) == 2^(m-n) * A(n,r) mod p (the factor taken
// through a modular inverse when m < n).
CheckResult check_transfer(int m, int n, int r, int p,
                           const PowerProvider& apow = direct_provider());

// A(p*n, r) == A(n, r) mod p for even r, odd p.
CheckResult check_scale_by_prime(int n, int r, int p,
                                 const PowerProvider& apow = direct_provider());

// A(p^k, r) is coprime to p for even r, odd p.
CheckResult check_prime_power_coprime(int k, int r, int p,
                                      const PowerProvider& apow = direct_provider());

}  // namespace descent
