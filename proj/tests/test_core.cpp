#include <doctest.h>

#include <bit>
#include <numeric>

#include "descent/core.hpp"

using namespace descent;

namespace {

DescentSet set_of(int n, std::initializer_list<int> positions) {
  return DescentSet::from_positions(n, std::vector<int>(positions));
}

// Independent multinomial route for cross-checking the binomial-product one.
Natural multinomial_by_factorials(int n, const std::vector<int>& parts) {
  Natural numerator = 1;
  for (int i = 2; i <= n; ++i) numerator *= i;
  for (int part : parts) {
    for (int i = 2; i <= part; ++i) numerator /= i;
  }
  return numerator;
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("composition of a descent set by consecutive differences") {
  CHECK(to_composition(set_of(4, {})).parts() == std::vector<int>{4});
  CHECK(to_composition(set_of(4, {2})).parts() == std::vector<int>{2, 2});
  CHECK(to_composition(set_of(6, {1, 4})).parts() == std::vector<int>{1, 3, 2});
}

TEST_CASE("descent set of a composition inverts the bijection") {
  CHECK(to_descent_set(Composition({4})) == set_of(4, {}));
  CHECK(to_descent_set(Composition({2, 2})) == set_of(4, {2}));
  CHECK(to_descent_set(Composition({1, 3, 2})) == set_of(6, {1, 4}));
}

TEST_CASE("bijection round trip over all subsets up to order 12") {
  for (int n = 1; n <= 12; ++n) {
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (n - 1)); ++mask) {
      const DescentSet s(n, mask);
      const Composition c = to_composition(s);
      CHECK(to_descent_set(c) == s);
      CHECK(to_composition(to_descent_set(c)) == c);
    }
  }
}

TEST_CASE("subset and composition invariants are enforced") {
  CHECK_THROWS_AS(DescentSet(4, 0b1000), std::domain_error);
  CHECK_THROWS_AS(DescentSet::from_positions(4, {0}), std::domain_error);
  CHECK_THROWS_AS(DescentSet::from_positions(4, {2, 2}), std::domain_error);
  CHECK_THROWS_AS(DescentSet::from_positions(4, {4}), std::domain_error);
  CHECK_THROWS_AS(Composition({}), std::domain_error);
  CHECK_THROWS_AS(Composition({2, 0}), std::domain_error);
}

TEST_CASE("multinomial coefficients") {
  CHECK(multinomial(4, {2, 2}) == 6);
  CHECK(multinomial(3, {1, 1, 1}) == 6);
  CHECK(multinomial(10, {3, 3, 4}) == 4200);
  CHECK(multinomial(5, {0, 5, 0}) == 1);
  CHECK_THROWS_AS(multinomial(5, {2, 2}), std::domain_error);
  CHECK_THROWS_AS(multinomial(5, {6, -1}), std::domain_error);
}

TEST_CASE("multinomial agrees with the factorial formula") {
  const std::vector<std::vector<int>> cases = {
      {3, 3, 4}, {1, 1, 1, 1, 1}, {7}, {2, 5, 6, 1}, {10, 10, 10}};
  for (const auto& parts : cases) {
    const int n = std::accumulate(parts.begin(), parts.end(), 0);
    CHECK(multinomial(n, parts) == multinomial_by_factorials(n, parts));
  }
}

TEST_CASE("descent set of a permutation") {
  CHECK(descent_set({1, 2, 3}) == set_of(3, {}));
  CHECK(descent_set({2, 1, 3}) == set_of(3, {1}));
  CHECK(descent_set({3, 1, 4, 2}) == set_of(4, {1, 3}));
  CHECK_THROWS_AS(descent_set({1, 1, 3}), std::domain_error);
  CHECK_THROWS_AS(descent_set({0, 1, 2}), std::domain_error);
  CHECK_THROWS_AS(descent_set(std::vector<int>{}), std::domain_error);
}

TEST_CASE("alpha counts permutations with contained descent set") {
  CHECK(alpha(set_of(4, {2})) == 6);
  CHECK(alpha(set_of(7, {})) == 1);
  CHECK(alpha(set_of(4, {1, 2, 3})) == 24);  // n!
}

TEST_CASE("beta counts permutations with exact descent set") {
  CHECK(beta(set_of(5, {})) == 1);
  CHECK(beta(set_of(3, {1})) == 2);
  CHECK(beta(set_of(4, {2})) == 5);
}

TEST_CASE("beta_table values frozen from the permutation tally") {
  CHECK(beta_table(1) == std::vector<Natural>{1});
  CHECK(beta_table(3) == std::vector<Natural>{1, 2, 2, 1});
  CHECK(beta_table(4) == std::vector<Natural>{1, 3, 5, 3, 3, 5, 3, 1});
}

TEST_CASE("enumeration oracle ground truths") {
  CHECK(beta_by_enumeration(2) == std::vector<Natural>{1, 1});
  CHECK(beta_by_enumeration(3) == std::vector<Natural>{1, 2, 2, 1});
  Natural total = 0;
  for (const Natural& b : beta_by_enumeration(4)) total += b;
  CHECK(total == 24);
  CHECK_THROWS_AS(beta_by_enumeration(11), capacity_error);
}

TEST_CASE("dynamic program matches the enumeration oracle up to order 8") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(beta_table(n) == beta_by_enumeration(n));
  }
}

TEST_CASE("inclusion-exclusion beta matches the dynamic program up to order 12") {
  for (int n = 1; n <= 12; ++n) {
    const auto table = beta_table(n);
    for (std::uint32_t mask = 0; mask < table.size(); ++mask) {
      CHECK(beta(DescentSet(n, mask)) == table[mask]);
    }
  }
}

TEST_CASE("beta values over all subsets sum to n!") {
  Natural factorial = 1;
  for (int n = 1; n <= 12; ++n) {
    factorial *= n;
    Natural total = 0;
    for (const Natural& b : beta_table(n)) total += b;
    CHECK(total == factorial);
  }
}

TEST_CASE("alpha is the subset sum of beta") {
  for (int n = 1; n <= 10; ++n) {
    const auto table = beta_table(n);
    for (std::uint32_t mask = 0; mask < table.size(); ++mask) {
      Natural total = 0;
      std::uint32_t sub = mask;
      while (true) {
        total += table[sub];
        if (sub == 0) break;
        sub = (sub - 1) & mask;
      }
      CHECK(alpha(DescentSet(n, mask)) == total);
    }
  }
}

TEST_CASE("beta values grouped by descent count give the Eulerian numbers") {
  // independent oracle: the classical two-term Eulerian recurrence
  std::vector<std::vector<Natural>> eulerian = {{1}};
  for (int n = 2; n <= 10; ++n) {
    const auto& prev = eulerian.back();
    std::vector<Natural> row(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      Natural value = 0;
      if (k < n - 1) value += Natural(k + 1) * prev[static_cast<std::size_t>(k)];
      if (k > 0) value += Natural(n - k) * prev[static_cast<std::size_t>(k) - 1];
      row[static_cast<std::size_t>(k)] = value;
    }
    eulerian.push_back(std::move(row));
  }
  for (int n = 1; n <= 10; ++n) {
    const auto table = beta_table(n);
    std::vector<Natural> by_count(static_cast<std::size_t>(n));
    for (std::uint32_t mask = 0; mask < table.size(); ++mask) {
      by_count[static_cast<std::size_t>(std::popcount(mask))] += table[mask];
    }
    CHECK(by_count == eulerian[static_cast<std::size_t>(n) - 1]);
  }
}

TEST_CASE("beta is symmetric under position reversal") {
  for (int n = 2; n <= 10; ++n) {
    const auto table = beta_table(n);
    for (std::uint32_t mask = 0; mask < table.size(); ++mask) {
      std::uint32_t reversed = 0;
      for (int i = 0; i < n - 1; ++i) {
        if ((mask >> i) & 1u) reversed |= std::uint32_t{1} << (n - 2 - i);
      }
      CHECK(table[mask] == table[reversed]);
    }
  }
}

TEST_CASE("beta_table stops at the enumeration limit") {
  CHECK_THROWS_AS(beta_table(23), capacity_error);
  CHECK_THROWS_AS(beta_table(12, 11), capacity_error);
  CHECK_THROWS_AS(beta_table(0), std::domain_error);
}

}  // TEST_SUITE
