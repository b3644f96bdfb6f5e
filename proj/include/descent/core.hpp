#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "descent/types.hpp"

namespace descent {

// Bijection between subsets of {1,...,n-1} and compositions of n by
// consecutive differences: S = {s_1 < ... < s_k} maps to parts
// s_i - s_{i-1} with s_0 = 0, s_{k+1} = n.
Composition to_composition(const DescentSet& s);
DescentSet to_descent_set(const Composition& c);

// Exact binomial / multinomial coefficients. `parts` is a weak composition
// of n (zero entries allowed); a domain error is thrown when it does not
// sum to n.
Natural binomial(std::int64_t n, std::int64_t k);
Natural multinomial(std::int64_t n, std::span<const int> parts);
Natural multinomial(std::int64_t n, const std::vector<int>& parts);

// Descent set of a permutation of 1..n: the positions i with p_i > p_{i+1}.
DescentSet descent_set(std::span<const int> permutation);
DescentSet descent_set(const std::vector<int>& permutation);

// alpha(S): permutations of [n] whose descent set is contained in S.
// Equals the multinomial coefficient of the associated composition.
Natural alpha(const DescentSet& s);

// beta(S): permutations of [n] whose descent set is exactly S, by
// inclusion-exclusion over alpha. Suited to ad-hoc queries; use beta_table
// for bulk enumeration.
Natural beta(const DescentSet& s);

// beta for every subset of {1,...,n-1}, indexed by mask, via the rank-of-
// last-element dynamic program (O(n^2) per subset).
std::vector<Natural> beta_table(int n, int max_order = kDefaultMaxOrder);

// Ground-truth tally of descent sets over all n! permutations. Independent
// of the dynamic program; n is capped hard because of the factorial blowup.
std::vector<Natural> beta_by_enumeration(int n);
inline constexpr int kMaxEnumerationOrder = 10;

namespace detail {

// Streaming evaluator: exact beta values for one n, one mask at a time.
// All intermediate counts are bounded by n! which fits 128 bits for every
// order the capacity guards admit.
class BetaEvaluator {
public:
  explicit BetaEvaluator(int n);
  unsigned __int128 operator()(std::uint32_t mask);

private:
  int n_;
  std::vector<unsigned __int128> row_;
  std::vector<unsigned __int128> next_;
  std::vector<unsigned __int128> prefix_;
};

Natural to_natural(unsigned __int128 v);
void check_order_capacity(int n, int max_order);

}  // namespace detail

}  // namespace descent
