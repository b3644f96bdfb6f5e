#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "descent/types.hpp"

namespace descent {

struct PowerSumOptions {
  int workers = 1;                    // subset range partitions (1 = sequential)
  int max_order = kDefaultMaxOrder;   // capacity guard on n
};

// A(n, r): sum of beta(S)^r over all subsets S of {1,...,n-1}, exact.
// Streams over masks; with workers > 1 the mask range is partitioned into
// contiguous chunks whose exact partial sums are merged in chunk order, so
// the result is identical for every worker count.
Natural power_sum(int n, int r, const PowerSumOptions& options = {});

// All requested exponents in a single sweep over the 2^(n-1) subsets.
std::vector<Natural> power_sum_row(int n, std::span<const int> exponents,
                                   const PowerSumOptions& options = {});

// Signed expansion term of an r-tuple of subsets of {1,...,n-1}:
// (-1)^(sum |T_i|) * prod alpha(T_i).
Integer tuple_term(int n, std::span<const std::uint32_t> masks);
// The even-exponent weight: 2^(n-1-|union T_i|) * tuple_term.
Integer tuple_term_weighted(int n, std::span<const std::uint32_t> masks);

// Independent right-hand sides for A(n, r) as plain sums over all r-tuples
// of subsets (even r) or the tuples covering {1,...,n-1} (odd r). These are
// deliberately naive verification loops; max_bits caps (n-1)*r, the width
// of the tuple index.
inline constexpr int kDefaultExpansionBits = 12;
Integer expansion_even_rhs(int n, int r, int max_bits = kDefaultExpansionBits);
Integer expansion_odd_rhs(int n, int r, int max_bits = kDefaultExpansionBits);

// Source of exact power sums, so verification layers can share a cache.
using PowerProvider = std::function<Natural(int n, int r)>;
PowerProvider direct_provider(PowerSumOptions options = {});

}  // namespace descent
