#include "descent/core.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

namespace descent {

Composition to_composition(const DescentSet& s) {
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(s.size()) + 1);
  int previous = 0;
  for (int pos : s.positions()) {
    parts.push_back(pos - previous);
    previous = pos;
  }
  parts.push_back(s.order() - previous);
  return Composition(std::move(parts));
}

DescentSet to_descent_set(const Composition& c) {
  if (c.total() > kHardMaxOrder + 1) {
    throw std::domain_error("composition total exceeds representable order");
  }
  std::vector<int> positions;
  positions.reserve(c.parts().size() - 1);
  int running = 0;
  for (std::size_t i = 0; i + 1 < c.parts().size(); ++i) {
    running += c.parts()[i];
    positions.push_back(running);
  }
  return DescentSet::from_positions(static_cast<int>(c.total()), positions);
}

Natural binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Natural result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: i consecutive integers contain a multiple of i
  }
  return result;
}

Natural multinomial(std::int64_t n, std::span<const int> parts) {
  std::int64_t sum = 0;
  for (int part : parts) {
    if (part < 0) throw std::domain_error("multinomial: negative part");
    sum += part;
  }
  if (sum != n) throw std::domain_error("multinomial: parts must sum to n");
  Natural result = 1;
  std::int64_t placed = 0;
  for (int part : parts) {
    placed += part;
    result *= binomial(placed, part);
  }
  return result;
}

Natural multinomial(std::int64_t n, const std::vector<int>& parts) {
  return multinomial(n, std::span<const int>(parts));
}

DescentSet descent_set(std::span<const int> permutation) {
  const int n = static_cast<int>(permutation.size());
  if (n < 1) throw std::domain_error("descent set: empty permutation");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int value : permutation) {
    if (value < 1 || value > n || seen[static_cast<std::size_t>(value - 1)]) {
      throw std::domain_error("descent set: input is not a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(value - 1)] = true;
  }
  std::uint32_t mask = 0;
  for (int i = 0; i + 1 < n; ++i) {
    if (permutation[static_cast<std::size_t>(i)] > permutation[static_cast<std::size_t>(i) + 1]) {
      mask |= std::uint32_t{1} << i;
    }
  }
  return DescentSet(n, mask);
}

DescentSet descent_set(const std::vector<int>& permutation) {
  return descent_set(std::span<const int>(permutation));
}

Natural alpha(const DescentSet& s) {
  const Composition c = to_composition(s);
  return multinomial(c.total(), c.parts());
}

namespace {

// alpha values repeat heavily across inclusion-exclusion queries.
Natural memoized_alpha(int n, std::uint32_t mask) {
  thread_local std::unordered_map<std::uint64_t, Natural> memo;
  const std::uint64_t key = (std::uint64_t(n) << 32) | mask;
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Natural value = alpha(DescentSet(n, mask));
  return memo.emplace(key, std::move(value)).first->second;
}

}  // namespace

Natural beta(const DescentSet& s) {
  // beta(S) = sum over T subseteq S of (-1)^(|S|-|T|) alpha(T)
  const std::uint32_t smask = s.mask();
  const int sbits = s.size();
  Natural total = 0;
  std::uint32_t t = smask;
  while (true) {
    const Natural& a = memoized_alpha(s.order(), t);
    if ((sbits - std::popcount(t)) % 2 == 0) {
      total += a;
    } else {
      total -= a;
    }
    if (t == 0) break;
    t = (t - 1) & smask;
  }
  if (total < 0) throw std::logic_error("beta: inclusion-exclusion went negative");
  return total;
}

namespace detail {

void check_order_capacity(int n, int max_order) {
  if (n < 1) throw std::domain_error("order must be positive");
  if (n > std::min(max_order, kHardMaxOrder)) {
    throw capacity_error("order " + std::to_string(n) + " exceeds enumeration limit " +
                         std::to_string(std::min(max_order, kHardMaxOrder)));
  }
}

BetaEvaluator::BetaEvaluator(int n)
    : n_(n),
      row_(static_cast<std::size_t>(n)),
      next_(static_cast<std::size_t>(n)),
      prefix_(static_cast<std::size_t>(n) + 1) {
  if (n < 1 || n > kHardMaxOrder) throw std::domain_error("BetaEvaluator: order out of range");
}

unsigned __int128 BetaEvaluator::operator()(std::uint32_t mask) {
  // row[j] = arrangements of the first i values whose relative descent
  // pattern matches the mask so far and whose last element has rank j+1.
  unsigned __int128* row = row_.data();
  unsigned __int128* next = next_.data();
  unsigned __int128* prefix = prefix_.data();
  row[0] = 1;
  int length = 1;
  for (int i = 1; i < n_; ++i) {
    prefix[0] = 0;
    for (int j = 0; j < length; ++j) prefix[j + 1] = prefix[j] + row[j];
    if ((mask >> (i - 1)) & 1u) {
      for (int j = 0; j <= length; ++j) next[j] = prefix[length] - prefix[j];
    } else {
      for (int j = 0; j <= length; ++j) next[j] = prefix[j];
    }
    ++length;
    std::swap(row, next);
  }
  unsigned __int128 total = 0;
  for (int j = 0; j < length; ++j) total += row[j];
  return total;
}

Natural to_natural(unsigned __int128 v) {
  Natural out = std::uint64_t(v >> 64);
  out <<= 64;
  out |= std::uint64_t(v);
  return out;
}

}  // namespace detail

std::vector<Natural> beta_table(int n, int max_order) {
  detail::check_order_capacity(n, max_order);
  const std::size_t count = std::size_t{1} << (n - 1);
  std::vector<Natural> out(count);
  detail::BetaEvaluator evaluate(n);
  for (std::size_t mask = 0; mask < count; ++mask) {
    out[mask] = detail::to_natural(evaluate(static_cast<std::uint32_t>(mask)));
  }
  return out;
}

std::vector<Natural> beta_by_enumeration(int n) {
  if (n < 1) throw std::domain_error("order must be positive");
  if (n > kMaxEnumerationOrder) {
    throw capacity_error("factorial enumeration capped at n = " +
                         std::to_string(kMaxEnumerationOrder));
  }
  std::vector<std::uint64_t> tally(std::size_t{1} << (n - 1), 0);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    std::uint32_t mask = 0;
    for (int i = 0; i + 1 < n; ++i) {
      if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(i) + 1]) {
        mask |= std::uint32_t{1} << i;
      }
    }
    ++tally[mask];
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<Natural> out(tally.size());
  for (std::size_t i = 0; i < tally.size(); ++i) out[i] = tally[i];
  return out;
}

}  // namespace descent
