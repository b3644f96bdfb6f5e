#include <doctest.h>

#include <random>
#include <set>

#include "descent/cache.hpp"
#include "descent/congruence.hpp"
#include "descent/core.hpp"
#include "descent/padic.hpp"

using namespace descent;

namespace {

std::vector<std::uint32_t> member_masks(const NonCarryFamily& family) {
  std::vector<std::uint32_t> masks;
  for (const auto& member : family.members) masks.push_back(member.mask());
  return masks;
}

}  // namespace

TEST_SUITE("congruence") {

TEST_CASE("same nonzero digits") {
  CHECK(same_nonzero_digits(14, 16, 3));   // 112 vs 121 in base 3
  CHECK(same_nonzero_digits(3, 9, 3));     // 10 vs 100
  CHECK(same_nonzero_digits(13, 17, 5));   // 23 vs 32
  CHECK(same_nonzero_digits(7, 7, 2));
  CHECK(same_nonzero_digits(2, 4, 2));  // 10 vs 100 in base 2
  CHECK_FALSE(same_nonzero_digits(4, 5, 3));
  CHECK_FALSE(same_nonzero_digits(3, 7, 2));
}

TEST_CASE("digit map construction and application") {
  const DigitMap map = DigitMap::build(14, 16, 3);
  CHECK(map.apply(14) == 16);
  CHECK(map.apply(0) == 0);

  const DigitMap identity = DigitMap::build(9, 9, 3);
  for (std::int64_t x : {0, 1, 5, 9, 100}) CHECK(identity.apply(x) == x);

  const DigitMap swap = DigitMap::build(3, 9, 3);
  CHECK(swap.apply(3) == 9);
  CHECK(swap.apply(9) == 3);
  CHECK(swap.position_map() == std::vector<int>{0, 2, 1});

  CHECK_THROWS_AS(DigitMap::build(4, 5, 3), std::domain_error);
}

TEST_CASE("digit maps are additive on carry-free sums") {
  const DigitMap map = DigitMap::build(14, 16, 3);
  std::mt19937 rng(161803u);
  int checked = 0;
  while (checked < 200) {
    const std::int64_t x = rng() % 81;
    const std::int64_t y = rng() % 81;
    if (carries(Composition({static_cast<int>(x) + 1, static_cast<int>(y) + 1}), 3) != 0) {
      continue;  // sample only carry-free pairs (shifted to keep parts positive)
    }
    const std::int64_t a = x + 1, b = y + 1;
    CHECK(map.apply(a + b) == map.apply(a) + map.apply(b));
    ++checked;
  }
}

TEST_CASE("non-carry families by brute force") {
  // Splitting a power of p always carries, so only the empty set survives.
  CHECK(member_masks(non_carry_family(2, 2)) == std::vector<std::uint32_t>{0});
  CHECK(member_masks(non_carry_family(4, 2)) == std::vector<std::uint32_t>{0});
  CHECK(member_masks(non_carry_family(3, 3)) == std::vector<std::uint32_t>{0});
  CHECK(member_masks(non_carry_family(9, 3)) == std::vector<std::uint32_t>{0});
  // 4 = 11 in base 3: the cuts at 1 and 3 are carry-free.
  CHECK(member_masks(non_carry_family(4, 3)) == std::vector<std::uint32_t>{0b000, 0b001, 0b100});
  CHECK_THROWS_AS(non_carry_family(23, 3), capacity_error);
}

TEST_CASE("non-carry families are closed under inclusion") {
  for (int p : {2, 3, 5}) {
    for (int m = 1; m <= 14; ++m) {
      const NonCarryFamily family = non_carry_family(m, p);
      for (const DescentSet& member : family.members) {
        std::uint32_t sub = member.mask();
        while (true) {
          CHECK(family.contains(DescentSet(m, sub)));
          if (sub == 0) break;
          sub = (sub - 1) & member.mask();
        }
      }
    }
  }
}

TEST_CASE("digit maps restrict to bijections between non-carry families") {
  struct Pair {
    int m, n, p;
  };
  for (const auto& [m, n, p] : {Pair{4, 10, 3}, Pair{14, 16, 3}, Pair{3, 9, 3}, Pair{13, 17, 5},
                                Pair{2, 4, 2}, Pair{6, 12, 2}}) {
    REQUIRE(same_nonzero_digits(m, n, p));
    const DigitMap map = DigitMap::build(m, n, p);
    const NonCarryFamily source = non_carry_family(m, p);
    const NonCarryFamily target = non_carry_family(n, p);
    CHECK(source.members.size() == target.members.size());

    std::set<DescentSet> images;
    for (const DescentSet& member : source.members) {
      const DescentSet image = map_non_carry_subset(map, member);
      CHECK(image.size() == member.size());
      CHECK(target.contains(image));
      images.insert(image);
      CHECK(Natural(alpha(member) % p) == Natural(alpha(image) % p));
    }
    CHECK(images.size() == source.members.size());
  }
}

TEST_CASE("alpha values under the digit map are congruent but not equal") {
  // (m, n) = (4, 10), p = 3, T = {1}: alpha jumps from 4 to 10 while staying
  // congruent mod 3, so the congruence really cannot be sharpened.
  const DigitMap map = DigitMap::build(4, 10, 3);
  const DescentSet t = DescentSet::from_positions(4, {1});
  const DescentSet image = map_non_carry_subset(map, t);
  CHECK(image == DescentSet::from_positions(10, {1}));
  CHECK(alpha(t) == 4);
  CHECK(alpha(image) == 10);
}

TEST_CASE("the identity digit map fixes every non-carry subset") {
  const DigitMap identity = DigitMap::build(4, 4, 3);
  for (const DescentSet& member : non_carry_family(4, 3).members) {
    CHECK(map_non_carry_subset(identity, member) == member);
  }
}

TEST_CASE("mapping a subset with carries is a domain error") {
  const DigitMap map = DigitMap::build(3, 9, 3);
  CHECK(map_non_carry_subset(map, DescentSet(3, 0)) == DescentSet(9, 0));
  // {1} splits 3 as 1+2, which carries in base 3
  CHECK_THROWS_AS(map_non_carry_subset(map, DescentSet::from_positions(3, {1})),
                  std::domain_error);
  CHECK_THROWS_AS(map_non_carry_subset(map, DescentSet(5, 0)), std::domain_error);
}

TEST_CASE("power shift congruences") {
  CHECK(check_power_shift(5, 2, 4, 1, 3).holds);
  CHECK(check_power_shift(7, 4, 4, 2, 5).holds);
  CHECK(check_power_shift(6, 3, 9, 2, 3).holds);
  CHECK_THROWS_AS(check_power_shift(6, 3, 7, 2, 3), std::domain_error);
  CHECK_THROWS_AS(check_power_shift(6, 1, 3, 2, 3), std::domain_error);
}

TEST_CASE("power shift congruences at p = 2") {
  CHECK(check_power_shift_two(5, 3, 5, 3).holds);
  CHECK(check_power_shift_two(4, 4, 4, 3).holds);
  CHECK(check_power_shift_two(6, 4, 8, 4).holds);
  CHECK_THROWS_AS(check_power_shift_two(5, 2, 4, 2), std::domain_error);
  CHECK_THROWS_AS(check_power_shift_two(5, 3, 4, 3), std::domain_error);
}

TEST_CASE("power recursion congruences") {
  CHECK(check_power_recursion(5, 4, 2, 2).holds);
  CHECK(check_power_recursion(6, 6, 2, 3).holds);
  CHECK(check_power_recursion(4, 6, 3, 2).holds);
  CHECK(check_power_recursion(7, 3, 1, 3).holds);  // smallest legal r = k*p
  CHECK_THROWS_AS(check_power_recursion(5, 3, 2, 2), std::domain_error);
}

TEST_CASE("digit transfer congruence") {
  CHECK(check_transfer(3, 9, 2, 3).holds);
  CHECK(check_transfer(9, 3, 2, 3).holds);  // exact 2-power side
  CHECK(check_transfer(4, 10, 2, 3).holds);
  CHECK(check_transfer(10, 10, 4, 3).holds);
  CHECK_THROWS_AS(check_transfer(4, 5, 2, 3), std::domain_error);
  CHECK_THROWS_AS(check_transfer(3, 9, 3, 3), std::domain_error);
  CHECK_THROWS_AS(check_transfer(3, 9, 2, 2), std::domain_error);
}

TEST_CASE("transfer holds on every digit-sharing pair up to order 17") {
  PowerSumCache cache;
  const auto provider = cache.provider();
  int pairs = 0;
  for (int p : {3, 5}) {
    for (int r : {2, 4}) {
      for (int m = 1; m <= 17; ++m) {
        for (int n = m + 1; n <= 17; ++n) {
          if (!same_nonzero_digits(m, n, p)) continue;
          CHECK(check_transfer(m, n, r, p, provider).holds);
          CHECK(check_transfer(n, m, r, p, provider).holds);
          ++pairs;
        }
      }
    }
  }
  CHECK(pairs > 0);
}

TEST_CASE("scaling the order by the prime") {
  const CheckResult small = check_scale_by_prime(1, 2, 3);  // 10 == 1 mod 3
  CHECK(small.holds);
  CHECK(small.lhs == 1);
  CHECK(check_scale_by_prime(2, 2, 3).holds);
  CHECK(check_scale_by_prime(1, 4, 5).holds);
  CHECK(check_scale_by_prime(3, 2, 3).holds);
}

TEST_CASE("power sums at prime powers are coprime to the prime") {
  const CheckResult c = check_prime_power_coprime(1, 2, 3);
  CHECK(c.holds);
  CHECK(c.lhs == 1);  // A(3,2) = 10
  CHECK(check_prime_power_coprime(0, 2, 7).holds);
  CHECK(check_prime_power_coprime(2, 2, 3).holds);
  CHECK(check_prime_power_coprime(1, 4, 5).holds);
}

}  // TEST_SUITE
