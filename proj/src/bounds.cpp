#include "descent/bounds.hpp"

#include <algorithm>

#include "descent/padic.hpp"

namespace descent {

namespace {

int ceil_div(int numerator, int denominator) {
  return numerator >= 0 ? (numerator + denominator - 1) / denominator
                        : -(-numerator / denominator);
}

bool is_two_power(int n) { return n > 0 && (n & (n - 1)) == 0; }

// k with r = p^k, if r is a power of p.
std::optional<int> prime_power_exponent(int r, int p) {
  int k = 0;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  return r == 1 ? std::optional<int>(k) : std::nullopt;
}

struct RawBound {
  bool applicable = false;
  int raw = 0;
};

RawBound raw_exact_two_power(int n, int /*r*/, int p) {
  if (p != 2 || !is_two_power(n)) return {};
  return {true, n - 1};
}

RawBound raw_odd_exponent(int n, int r, int p) {
  if (r % 2 != 1) return {};
  return {true, ceil_div(n - 1 - r * depth(n, p), p - 1)};
}

RawBound raw_base_two(int n, int r, int p) {
  if (p != 2) return {};
  return {true, n - 1 - r * depth(n, 2)};
}

RawBound raw_cyclic_shift(int n, int r, int p) {
  if (p == 2 || n < 2) return {};
  const auto k = prime_power_exponent(r, p);
  if (!k) return {};
  // Ceiling of the whole expression including +k, clamped afterwards; the
  // valuation can genuinely be below k when the rational part is negative.
  return {true, ceil_div(n - 1 - r * depth(n, p) + *k * (p - 1), p - 1)};
}

RawBound raw_tree_group_odd(int n, int r, int p) {
  if (p == 2 || r % 2 != 1 || depth(n, p) == 0) return {};
  return {true, ceil_div(r - digit_sum(r, p) + n - 1 - r * depth(n, p), p - 1)};
}

RawBound raw_tree_group_two(int n, int r, int p) {
  if (p != 2 || depth(n, 2) == 0) return {};
  return {true, r - digit_sum(r, 2) + n - 1 - r * depth(n, 2)};
}

RawBound raw_non_two_power(int n, int r, int p) {
  if (p != 2 || is_two_power(n) || r < 2) return {};
  return {true, n - r * depth(n, 2)};
}

RawBound raw_square_window(int n, int r, int p) {
  if (p != 2 || r != 2) return {};
  int window_floor = 1;
  while (2 * window_floor <= n) window_floor *= 2;
  return {true, window_floor - 1};
}

using RawBoundFn = RawBound (*)(int, int, int);

struct BoundEntry {
  BoundKind kind;
  RawBoundFn evaluate;
};

// Exactness first, then the order of the statements; best_bound takes the
// first maximum, so ties resolve toward the sharper claim.
constexpr BoundEntry kBoundEntries[] = {
    {BoundKind::exact_two_power, raw_exact_two_power},
    {BoundKind::odd_exponent, raw_odd_exponent},
    {BoundKind::base_two, raw_base_two},
    {BoundKind::cyclic_shift, raw_cyclic_shift},
    {BoundKind::tree_group_odd, raw_tree_group_odd},
    {BoundKind::tree_group_two, raw_tree_group_two},
    {BoundKind::non_two_power, raw_non_two_power},
    {BoundKind::square_window, raw_square_window},
};

std::optional<int> effective(const RawBound& bound) {
  if (!bound.applicable) return std::nullopt;
  return std::max(bound.raw, 0);
}

void validate_arguments(int n, int r, int p) {
  require_prime(p);
  if (n < 1) throw std::domain_error("bounds: order must be positive");
  if (r < 1) throw std::domain_error("bounds: exponent must be >= 1");
}

}  // namespace

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::exact_two_power: return "exact_two_power";
    case BoundKind::odd_exponent: return "odd_exponent";
    case BoundKind::base_two: return "base_two";
    case BoundKind::cyclic_shift: return "cyclic_shift";
    case BoundKind::tree_group_odd: return "tree_group_odd";
    case BoundKind::tree_group_two: return "tree_group_two";
    case BoundKind::non_two_power: return "non_two_power";
    case BoundKind::square_window: return "square_window";
    case BoundKind::none: return "none";
  }
  return "none";
}

std::optional<int> bound_odd_exponent(int n, int r, int p) {
  validate_arguments(n, r, p);
  return effective(raw_odd_exponent(n, r, p));
}

std::optional<int> bound_base_two(int n, int r) {
  validate_arguments(n, r, 2);
  return effective(raw_base_two(n, r, 2));
}

std::optional<int> bound_cyclic_shift(int n, int p, int k) {
  if (k < 0) throw std::domain_error("bounds: k must be >= 0");
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r *= p;
  if (r > 1 << 20) throw std::domain_error("bounds: p^k exponent too large");
  validate_arguments(n, static_cast<int>(r), p);
  return effective(raw_cyclic_shift(n, static_cast<int>(r), p));
}

std::optional<int> bound_tree_group_odd(int n, int r, int p) {
  validate_arguments(n, r, p);
  return effective(raw_tree_group_odd(n, r, p));
}

std::optional<int> bound_tree_group_two(int n, int r) {
  validate_arguments(n, r, 2);
  return effective(raw_tree_group_two(n, r, 2));
}

std::optional<int> bound_non_two_power(int n, int r) {
  validate_arguments(n, r, 2);
  return effective(raw_non_two_power(n, r, 2));
}

std::optional<int> bound_square_window(int n, int r) {
  validate_arguments(n, r, 2);
  return effective(raw_square_window(n, r, 2));
}

std::optional<int> exact_two_power_valuation(int n) {
  validate_arguments(n, 1, 2);
  return effective(raw_exact_two_power(n, 1, 2));
}

std::vector<BoundReport> all_bounds(int n, int r, int p) {
  validate_arguments(n, r, p);
  std::vector<BoundReport> reports;
  reports.reserve(std::size(kBoundEntries));
  for (const auto& entry : kBoundEntries) {
    const RawBound raw = entry.evaluate(n, r, p);
    BoundReport report;
    report.n = n;
    report.r = r;
    report.p = p;
    report.kind = entry.kind;
    report.applicable = raw.applicable;
    report.raw = raw.applicable ? raw.raw : 0;
    report.value = raw.applicable ? std::max(raw.raw, 0) : 0;
    reports.push_back(report);
  }
  return reports;
}

BoundReport best_bound(int n, int r, int p) {
  BoundReport best;
  best.n = n;
  best.r = r;
  best.p = p;
  for (const BoundReport& report : all_bounds(n, r, p)) {
    if (!report.applicable) continue;
    if (!best.applicable || report.value > best.value) {
      best = report;
    }
  }
  return best;
}

BoundReport verify_bound(int n, int r, int p, const PowerProvider& apow) {
  BoundReport report = best_bound(n, r, p);
  const int actual = valuation(apow(n, r), p);
  report.actual_valuation = actual;
  report.holds = actual >= report.value;
  return report;
}

std::vector<BoundReport> verify_all_bounds(int n, int r, int p, const PowerProvider& apow) {
  std::vector<BoundReport> reports = all_bounds(n, r, p);
  const int actual = valuation(apow(n, r), p);
  for (BoundReport& report : reports) {
    report.actual_valuation = actual;
    if (report.applicable) report.holds = actual >= report.value;
  }
  return reports;
}

}  // namespace descent
