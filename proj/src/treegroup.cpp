#include "descent/treegroup.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>

#include "descent/core.hpp"
#include "descent/padic.hpp"
#include "descent/powersum.hpp"

namespace descent {

namespace {

std::int64_t int_pow(std::int64_t base, int exponent) {
  std::int64_t result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

void validate_tree_shape(int p, int k) {
  require_prime(p);
  if (k < 0) throw std::domain_error("tree group: depth must be >= 0");
  if (int_pow(p, k) > 1 << 20) throw std::domain_error("tree group: too many leaves");
}

}  // namespace

LeafPermutation LeafPermutation::identity(int degree) {
  if (degree < 1) throw std::domain_error("permutation degree must be positive");
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  return LeafPermutation(std::move(images));
}

LeafPermutation::LeafPermutation(std::vector<int> images) : images_(std::move(images)) {
  const int q = degree();
  if (q < 1) throw std::domain_error("permutation degree must be positive");
  std::vector<bool> seen(static_cast<std::size_t>(q), false);
  for (int image : images_) {
    if (image < 1 || image > q || seen[static_cast<std::size_t>(image - 1)]) {
      throw std::domain_error("leaf permutation: images are not a bijection on 1..q");
    }
    seen[static_cast<std::size_t>(image - 1)] = true;
  }
}

int LeafPermutation::image_of(int leaf) const {
  if (leaf < 1 || leaf > degree()) throw std::domain_error("leaf index out of range");
  return images_[static_cast<std::size_t>(leaf - 1)];
}

LeafPermutation LeafPermutation::after(const LeafPermutation& first) const {
  if (degree() != first.degree()) throw std::domain_error("degree mismatch in composition");
  std::vector<int> images(static_cast<std::size_t>(degree()));
  for (int leaf = 1; leaf <= degree(); ++leaf) {
    images[static_cast<std::size_t>(leaf - 1)] = image_of(first.image_of(leaf));
  }
  return LeafPermutation(std::move(images));
}

std::vector<std::vector<int>> LeafPermutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> visited(static_cast<std::size_t>(degree()), false);
  for (int start = 1; start <= degree(); ++start) {
    if (visited[static_cast<std::size_t>(start - 1)]) continue;
    std::vector<int> cycle;
    int leaf = start;
    do {
      visited[static_cast<std::size_t>(leaf - 1)] = true;
      cycle.push_back(leaf);
      leaf = image_of(leaf);
    } while (leaf != start);
    if (cycle.size() > 1) out.push_back(std::move(cycle));
  }
  return out;
}

LeafPermutation branch_rotation(int p, int k, int a, int b) {
  validate_tree_shape(p, k);
  if (a < 1 || a > k) throw std::domain_error("branch rotation: level out of range");
  if (b < 0 || b >= int_pow(p, k - a)) {
    throw std::domain_error("branch rotation: offset out of range");
  }
  const int q = static_cast<int>(int_pow(p, k));
  const int block = static_cast<int>(int_pow(p, a));
  const int stride = block / p;
  std::vector<int> images(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  for (int i = 1; i <= stride; ++i) {
    for (int c = 0; c < p; ++c) {
      const int from = i + b * block + c * stride;
      const int to = i + b * block + (c + 1) % p * stride;
      images[static_cast<std::size_t>(from - 1)] = to;
    }
  }
  return LeafPermutation(std::move(images));
}

std::vector<LeafPermutation> tree_group_generators(int p, int k) {
  validate_tree_shape(p, k);
  std::vector<LeafPermutation> generators;
  for (int a = 1; a <= k; ++a) {
    const std::int64_t offsets = int_pow(p, k - a);
    for (int b = 0; b < offsets; ++b) {
      generators.push_back(branch_rotation(p, k, a, b));
    }
  }
  return generators;
}

Natural tree_group_order(int p, int k) {
  validate_tree_shape(p, k);
  const std::int64_t node_count = (int_pow(p, k) - 1) / (p - 1);
  Natural order = 1;
  for (std::int64_t i = 0; i < node_count; ++i) order *= p;
  return order;
}

std::vector<LeafPermutation> tree_group_elements(int p, int k, std::size_t max_elements) {
  const auto generators = tree_group_generators(p, k);
  const int q = static_cast<int>(int_pow(p, k));
  std::set<std::vector<int>> seen;
  std::deque<LeafPermutation> frontier;
  frontier.push_back(LeafPermutation::identity(q));
  seen.insert(frontier.front().images());
  while (!frontier.empty()) {
    const LeafPermutation element = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& generator : generators) {
      LeafPermutation next = generator.after(element);
      if (seen.insert(next.images()).second) {
        if (seen.size() > max_elements) {
          throw capacity_error("tree group closure exceeds the element cap");
        }
        frontier.push_back(std::move(next));
      }
    }
  }
  std::vector<LeafPermutation> elements;
  elements.reserve(seen.size());
  for (const auto& images : seen) elements.push_back(LeafPermutation(images));
  return elements;
}

namespace {

void validate_tuple(const SubsetTuple& x, int p, int k) {
  validate_tree_shape(p, k);
  if (x.length() != int_pow(p, k)) {
    throw std::domain_error("tuple length must be p^k");
  }
  for (std::uint32_t mask : x.masks) {
    DescentSet probe(x.n, mask);  // validates the mask against n
    (void)probe;
  }
}

std::vector<std::uint32_t> act_on_indices(const LeafPermutation& g,
                                          const std::vector<std::uint32_t>& masks) {
  std::vector<std::uint32_t> out(masks.size());
  for (int leaf = 1; leaf <= g.degree(); ++leaf) {
    out[static_cast<std::size_t>(g.image_of(leaf) - 1)] = masks[static_cast<std::size_t>(leaf - 1)];
  }
  return out;
}

std::set<std::vector<std::uint32_t>> orbit_masks(const SubsetTuple& x, int p, int k) {
  const auto generators = tree_group_generators(p, k);
  std::set<std::vector<std::uint32_t>> seen;
  std::deque<std::vector<std::uint32_t>> frontier;
  seen.insert(x.masks);
  frontier.push_back(x.masks);
  while (!frontier.empty()) {
    const std::vector<std::uint32_t> current = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& generator : generators) {
      std::vector<std::uint32_t> next = act_on_indices(generator, current);
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return seen;
}

}  // namespace

std::vector<SubsetTuple> orbit(const SubsetTuple& x, int p, int k) {
  validate_tuple(x, p, k);
  std::vector<SubsetTuple> out;
  for (const auto& masks : orbit_masks(x, p, k)) {
    out.push_back(SubsetTuple{x.n, masks});
  }
  return out;  // set iteration is already sorted
}

Integer orbit_sum(const SubsetTuple& x, int p, int k) {
  validate_tuple(x, p, k);
  const std::size_t orbit_size = orbit_masks(x, p, k).size();
  return Integer(orbit_size) * tuple_term(x.n, x.masks);
}

std::optional<int> orbit_valuation_bound(const SubsetTuple& x, int p, int k) {
  validate_tuple(x, p, k);
  if (depth(x.n, p) == 0) return std::nullopt;
  std::uint32_t covered = 0;
  for (std::uint32_t mask : x.masks) covered |= mask;
  const int q = x.length();
  const int numerator = q - 1 + std::popcount(covered) - q * depth(x.n, p);
  const int raw = numerator >= 0 ? (numerator + p - 2) / (p - 1) : -(-numerator / (p - 1));
  return std::max(raw, 0);
}

OrbitRecord orbit_record(const SubsetTuple& x, int p, int k) {
  validate_tuple(x, p, k);
  const auto members = orbit_masks(x, p, k);
  OrbitRecord record;
  record.representative = SubsetTuple{x.n, *members.begin()};
  record.orbit_size = members.size();
  record.sum = Integer(members.size()) * tuple_term(x.n, x.masks);
  if (record.sum != 0) {
    record.sum_valuation = valuation(Natural(boost::multiprecision::abs(record.sum)), p);
  }
  record.bound = orbit_valuation_bound(x, p, k);
  return record;
}

OrbitPartitionSummary check_orbit_partition(int n, int p, int k, std::size_t max_tuples) {
  validate_tree_shape(p, k);
  detail::check_order_capacity(n, kDefaultMaxOrder);
  const int q = static_cast<int>(int_pow(p, k));
  const std::uint64_t subset_count = std::uint64_t{1} << (n - 1);
  std::uint64_t tuple_count = 1;
  for (int i = 0; i < q; ++i) {
    if (tuple_count > max_tuples / subset_count) {
      throw capacity_error("orbit partition check: tuple space too large");
    }
    tuple_count *= subset_count;
  }

  OrbitPartitionSummary summary;
  summary.tuple_count = tuple_count;

  std::set<std::vector<std::uint32_t>> visited;
  Integer representative_total = 0;
  Integer direct_total = 0;
  std::uint64_t covered = 0;
  bool disjoint = true;

  std::vector<std::uint32_t> masks(static_cast<std::size_t>(q), 0);
  for (std::uint64_t index = 0; index < tuple_count; ++index) {
    std::uint64_t rest = index;
    for (int i = 0; i < q; ++i) {
      masks[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(rest % subset_count);
      rest /= subset_count;
    }
    direct_total += tuple_term(n, masks);
    if (visited.count(masks)) continue;

    const SubsetTuple representative{n, masks};
    const auto members = orbit_masks(representative, p, k);
    for (const auto& member : members) {
      if (!visited.insert(member).second) disjoint = false;
    }
    covered += members.size();
    ++summary.orbit_count;
    representative_total += Integer(members.size()) * tuple_term(n, masks);
  }

  summary.holds = disjoint && covered == tuple_count && representative_total == direct_total;
  return summary;
}

}  // namespace descent
