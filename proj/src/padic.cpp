#include "descent/padic.hpp"

#include <algorithm>

#include "descent/core.hpp"

namespace descent {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_prime(std::int64_t p) {
  if (!is_prime(p)) {
    throw std::domain_error(std::to_string(p) + " is not prime");
  }
}

DigitExpansion DigitExpansion::of(std::int64_t value, int base) {
  if (value < 0) throw std::domain_error("digit expansion: negative value");
  if (base < 2) throw std::domain_error("digit expansion: base must be >= 2");
  DigitExpansion out;
  out.base = base;
  while (value > 0) {
    out.digits.push_back(static_cast<int>(value % base));
    value /= base;
  }
  return out;
}

std::int64_t DigitExpansion::value() const {
  std::int64_t v = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    v = v * base + *it;
  }
  return v;
}

int valuation(const Natural& x, int p) {
  require_prime(p);
  if (x <= 0) throw std::domain_error("valuation: argument must be >= 1");
  Natural value = x;
  Natural quotient, remainder;
  int e = 0;
  while (true) {
    boost::multiprecision::divide_qr(value, Natural(p), quotient, remainder);
    if (remainder != 0) break;
    value = quotient;
    ++e;
  }
  return e;
}

int digit_sum(std::int64_t n, int p) {
  require_prime(p);
  if (n < 1) throw std::domain_error("digit sum: argument must be >= 1");
  int sum = 0;
  while (n > 0) {
    sum += static_cast<int>(n % p);
    n /= p;
  }
  return sum;
}

int depth(std::int64_t n, int p) { return digit_sum(n, p) - 1; }

int digit_sum(const Composition& c, int p) {
  int sum = 0;
  for (int part : c.parts()) sum += digit_sum(part, p);
  return sum;
}

int depth(const Composition& c, int p) {
  return digit_sum(c, p) - c.part_count();
}

int carries(const Composition& c, int p) {
  require_prime(p);
  std::vector<std::int64_t> remaining(c.parts().begin(), c.parts().end());
  std::int64_t carry = 0;
  int count = 0;
  bool live = true;
  while (live || carry > 0) {
    std::int64_t column = carry;
    live = false;
    for (auto& value : remaining) {
      column += value % p;
      value /= p;
      if (value > 0) live = true;
    }
    carry = column / p;
    count += static_cast<int>(carry);
  }
  return count;
}

int lucas_multinomial_mod(std::int64_t n, std::span<const int> parts, int p) {
  require_prime(p);
  std::int64_t sum = 0;
  for (int part : parts) {
    if (part < 0) throw std::domain_error("lucas: negative part");
    sum += part;
  }
  if (sum != n) throw std::domain_error("lucas: parts must sum to n");

  std::vector<std::int64_t> remaining(parts.begin(), parts.end());
  std::int64_t n_left = n;
  std::int64_t product = 1;
  while (n_left > 0 || std::any_of(remaining.begin(), remaining.end(),
                                   [](std::int64_t v) { return v > 0; })) {
    const int n_digit = static_cast<int>(n_left % p);
    std::vector<int> column;
    column.reserve(remaining.size());
    int column_sum = 0;
    for (auto& value : remaining) {
      const int digit = static_cast<int>(value % p);
      column.push_back(digit);
      column_sum += digit;
      value /= p;
    }
    if (column_sum != n_digit) return 0;  // a carry kills the product
    product = product * static_cast<std::int64_t>(multinomial(n_digit, column) % p) % p;
    n_left /= p;
  }
  return static_cast<int>(product);
}

int lucas_multinomial_mod(std::int64_t n, const std::vector<int>& parts, int p) {
  return lucas_multinomial_mod(n, std::span<const int>(parts), p);
}

int kummer_valuation(const Composition& c, int p) { return carries(c, p); }

int factorial_valuation(std::int64_t n, int p) {
  return static_cast<int>((n - digit_sum(n, p)) / (p - 1));
}

int carries_from_depths(const DescentSet& s, int p) {
  const Composition c = to_composition(s);
  const int numerator = depth(c, p) + s.size() - depth(s.order(), p);
  if (numerator % (p - 1) != 0) {
    throw std::logic_error("carry/depth identity produced a non-integral value");
  }
  return numerator / (p - 1);
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exponent, std::int64_t mod) {
  if (mod < 1) throw std::domain_error("pow_mod: modulus must be positive");
  if (exponent < 0) throw std::domain_error("pow_mod: negative exponent");
  std::int64_t result = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exponent > 0) {
    if (exponent & 1) result = result * base % mod;
    base = base * base % mod;
    exponent >>= 1;
  }
  return result;
}

}  // namespace descent
