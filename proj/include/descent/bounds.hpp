#pragma once

#include <optional>
#include <string>
#include <vector>

#include "descent/powersum.hpp"
#include "descent/types.hpp"

namespace descent {

// Lower bounds on the p-adic valuation of A(n, r), each valid exactly under
// the hypotheses its function checks. All rational bounds are strengthened
// to ceilings and clamped at zero.
enum class BoundKind {
  exact_two_power,  // n a 2-power: valuation is exactly n-1
  odd_exponent,     // r odd: ceil((n-1 - r*d_p(n)) / (p-1))
  base_two,         // p = 2, any r: n-1 - r*d_2(n)
  cyclic_shift,     // p odd, r = p^k: ceil((n-1 - r*d_p(n))/(p-1) + k)
  tree_group_odd,   // r odd, p odd, d_p(n) > 0: with the r - u_p(r) gain
  tree_group_two,   // p = 2, d_2(n) > 0: r - u_2(r) + n-1 - r*d_2(n)
  non_two_power,    // p = 2, n not a 2-power, r >= 2: n - r*d_2(n)
  square_window,    // p = 2, r = 2: 2^k - 1 on the window 2^k <= n < 2^(k+1)
  none,
};

std::string to_string(BoundKind kind);

struct BoundReport {
  int n = 0;
  int r = 0;
  int p = 2;
  BoundKind kind = BoundKind::none;
  bool applicable = false;
  int raw = 0;    // pre-clamp value of the formula
  int value = 0;  // effective bound, max(raw, 0)
  std::optional<int> actual_valuation;
  std::optional<bool> holds;
};

// Individual bounds; nullopt when the statement's hypotheses fail. Each
// returns the effective (clamped) value.
std::optional<int> bound_odd_exponent(int n, int r, int p);
std::optional<int> bound_base_two(int n, int r);
std::optional<int> bound_cyclic_shift(int n, int p, int k);
std::optional<int> bound_tree_group_odd(int n, int r, int p);
std::optional<int> bound_tree_group_two(int n, int r);
std::optional<int> bound_non_two_power(int n, int r);
std::optional<int> bound_square_window(int n, int r);
std::optional<int> exact_two_power_valuation(int n);

// Every bound at (n, r, p) in a fixed priority order (exactness first).
std::vector<BoundReport> all_bounds(int n, int r, int p);

// Strongest applicable bound; BoundKind::none with value 0 when nothing
// applies (odd p with even r has no bound).
BoundReport best_bound(int n, int r, int p);

// best_bound plus the true valuation of A(n, r) and whether it is >= the
// bound; since the best is the max, it certifies every applicable bound.
BoundReport verify_bound(int n, int r, int p,
                         const PowerProvider& apow = direct_provider());

// Per-bound verdicts for sweeps.
std::vector<BoundReport> verify_all_bounds(int n, int r, int p,
                                           const PowerProvider& apow = direct_provider());

}  // namespace descent
