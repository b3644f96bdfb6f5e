#include "descent/powersum.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <thread>

#include "descent/core.hpp"

namespace descent {

namespace {

// Exact partial sums of beta(S)^r over the contiguous mask range [lo, hi).
std::vector<Natural> accumulate_powers(int n, std::span<const int> exponents,
                                       std::uint64_t lo, std::uint64_t hi) {
  std::vector<Natural> totals(exponents.size(), Natural(0));
  detail::BetaEvaluator evaluate(n);
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    const Natural value = detail::to_natural(evaluate(static_cast<std::uint32_t>(mask)));
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (exponents[i] == 1) {
        totals[i] += value;
      } else {
        totals[i] += boost::multiprecision::pow(value, static_cast<unsigned>(exponents[i]));
      }
    }
  }
  return totals;
}

}  // namespace

std::vector<Natural> power_sum_row(int n, std::span<const int> exponents,
                                   const PowerSumOptions& options) {
  detail::check_order_capacity(n, options.max_order);
  if (exponents.empty()) throw std::domain_error("power sum: no exponents given");
  for (int r : exponents) {
    if (r < 1) throw std::domain_error("power sum: exponent must be >= 1");
  }
  const std::uint64_t mask_count = std::uint64_t{1} << (n - 1);
  const int workers =
      static_cast<int>(std::clamp<std::uint64_t>(std::max(options.workers, 1), 1, mask_count));

  if (workers == 1) {
    return accumulate_powers(n, exponents, 0, mask_count);
  }

  std::vector<std::vector<Natural>> partials(static_cast<std::size_t>(workers));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  const std::uint64_t chunk = (mask_count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      const std::uint64_t lo = chunk * static_cast<std::uint64_t>(w);
      const std::uint64_t hi = std::min(mask_count, lo + chunk);
      try {
        if (lo < hi) partials[static_cast<std::size_t>(w)] = accumulate_powers(n, exponents, lo, hi);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }

  // Exact addition is associative, so merging in worker order reproduces the
  // sequential result bit for bit.
  std::vector<Natural> totals(exponents.size(), Natural(0));
  for (const auto& partial : partials) {
    for (std::size_t i = 0; i < partial.size(); ++i) totals[i] += partial[i];
  }
  return totals;
}

Natural power_sum(int n, int r, const PowerSumOptions& options) {
  const int exponents[] = {r};
  Natural result = std::move(power_sum_row(n, exponents, options)[0]);
  if (result < 0) throw std::logic_error("power sum went negative");
  return result;
}

Integer tuple_term(int n, std::span<const std::uint32_t> masks) {
  Natural product = 1;
  int size_sum = 0;
  for (std::uint32_t mask : masks) {
    const DescentSet s(n, mask);
    size_sum += s.size();
    product *= alpha(s);
  }
  return size_sum % 2 == 0 ? Integer(product) : Integer(-product);
}

Integer tuple_term_weighted(int n, std::span<const std::uint32_t> masks) {
  std::uint32_t covered = 0;
  for (std::uint32_t mask : masks) covered |= mask;
  const int free_positions = n - 1 - std::popcount(covered);
  return tuple_term(n, masks) << free_positions;
}

namespace {

// Shared naive loop over all r-tuples of subset masks, summing
// sign * product(alpha) with the even/odd-specific weights.
Integer expansion_rhs(int n, int r, int max_bits, bool even_form) {
  if (n < 1) throw std::domain_error("expansion: order must be positive");
  if (r < 1) throw std::domain_error("expansion: exponent must be >= 1");
  const int bits = (n - 1) * r;
  if (bits > max_bits) {
    throw capacity_error("expansion over " + std::to_string(bits) +
                         " tuple bits exceeds the cap of " + std::to_string(max_bits));
  }

  const std::uint32_t subset_count = std::uint32_t{1} << (n - 1);
  std::vector<Natural> alphas(subset_count);
  for (std::uint32_t mask = 0; mask < subset_count; ++mask) {
    alphas[mask] = alpha(DescentSet(n, mask));
  }

  const std::uint32_t full = subset_count - 1;
  const std::uint64_t tuple_count = std::uint64_t{1} << bits;
  Integer total = 0;
  for (std::uint64_t index = 0; index < tuple_count; ++index) {
    std::uint64_t rest = index;
    std::uint32_t covered = 0;
    int size_sum = 0;
    Natural product = 1;
    for (int i = 0; i < r; ++i) {
      const std::uint32_t mask = static_cast<std::uint32_t>(rest & full);
      rest >>= (n - 1);
      covered |= mask;
      size_sum += std::popcount(mask);
      product *= alphas[mask];
    }
    if (even_form) {
      product <<= (n - 1) - std::popcount(covered);
    } else if (covered != full) {
      continue;  // odd form only sums tuples covering the whole set
    }
    const int sign_exponent = even_form ? size_sum : size_sum + n - 1;
    if (sign_exponent % 2 == 0) {
      total += product;
    } else {
      total -= product;
    }
  }
  return total;
}

}  // namespace

Integer expansion_even_rhs(int n, int r, int max_bits) {
  if (r % 2 != 0) throw std::domain_error("even expansion needs an even exponent");
  return expansion_rhs(n, r, max_bits, /*even_form=*/true);
}

Integer expansion_odd_rhs(int n, int r, int max_bits) {
  if (r % 2 != 1) throw std::domain_error("odd expansion needs an odd exponent");
  return expansion_rhs(n, r, max_bits, /*even_form=*/false);
}

PowerProvider direct_provider(PowerSumOptions options) {
  return [options](int n, int r) { return power_sum(n, r, options); };
}

}  // namespace descent
