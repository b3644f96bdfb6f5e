#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "descent/types.hpp"

namespace descent {

// A permutation of the leaves 1..q of the balanced p-ary tree of depth k.
class LeafPermutation {
public:
  static LeafPermutation identity(int degree);
  explicit LeafPermutation(std::vector<int> images);  // images[i] = image of leaf i+1

  int degree() const { return static_cast<int>(images_.size()); }
  int image_of(int leaf) const;
  LeafPermutation after(const LeafPermutation& first) const;  // apply first, then this
  // Nontrivial cycles, each starting at its least leaf, ordered by it.
  std::vector<std::vector<int>> cycles() const;

  const std::vector<int>& images() const { return images_; }
  friend bool operator==(const LeafPermutation&, const LeafPermutation&) = default;
  friend auto operator<=>(const LeafPermutation&, const LeafPermutation&) = default;

private:
  std::vector<int> images_;
};

// Generator sigma_{a,b} of the branch-rotation group: cyclically shifts the
// p children of the internal node (a, b) (depth k-a, b-th from the left),
// acting on leaves as p^(a-1) disjoint p-cycles.
LeafPermutation branch_rotation(int p, int k, int a, int b);

// All (q-1)/(p-1) generators, q = p^k.
std::vector<LeafPermutation> tree_group_generators(int p, int k);

// Group order p^((q-1)/(p-1)).
Natural tree_group_order(int p, int k);

// The full group by closure under the generators. Only feasible for small
// (p, k); guarded by max_elements.
std::vector<LeafPermutation> tree_group_elements(int p, int k,
                                                 std::size_t max_elements = 1 << 20);

// A q-tuple of subsets of {1,...,n-1}, the object the group permutes.
struct SubsetTuple {
  int n = 1;
  std::vector<std::uint32_t> masks;

  int length() const { return static_cast<int>(masks.size()); }
  friend bool operator==(const SubsetTuple&, const SubsetTuple&) = default;
  friend auto operator<=>(const SubsetTuple&, const SubsetTuple&) = default;
};

// Orbit of x under the index action, by breadth-first closure under the
// generators (the group itself is never materialized). Sorted, so the first
// element is the canonical representative; the size is a power of p.
std::vector<SubsetTuple> orbit(const SubsetTuple& x, int p, int k);

// Sum of the expansion term over the orbit: |orbit| * tuple_term(x), since
// the term is invariant under entry reordering.
Integer orbit_sum(const SubsetTuple& x, int p, int k);

// Valuation lower bound for a nonzero orbit sum:
// ceil((q-1 + |union T_i| - q*d_p(n)) / (p-1)) clamped at zero. Requires
// d_p(n) > 0; nullopt otherwise.
std::optional<int> orbit_valuation_bound(const SubsetTuple& x, int p, int k);

// One orbit, summarized: canonical representative, size, exact sum, the
// p-adic valuation of the sum (empty when the sum vanishes, where the bound
// is vacuous), and the bound itself (empty when d_p(n) = 0).
struct OrbitRecord {
  SubsetTuple representative;
  std::size_t orbit_size = 1;
  Integer sum;
  std::optional<int> sum_valuation;
  std::optional<int> bound;

  bool bound_holds() const {
    return !bound || !sum_valuation || *sum_valuation >= *bound;
  }
};

OrbitRecord orbit_record(const SubsetTuple& x, int p, int k);

struct OrbitPartitionSummary {
  bool holds = false;
  std::size_t tuple_count = 0;
  std::size_t orbit_count = 0;
};

// Exhaustive sanity check over all (2^(n-1))^q tuples: orbits are pairwise
// disjoint, their sizes sum to the tuple count, and the orbit sums over
// representatives add up to the plain sum of tuple terms.
OrbitPartitionSummary check_orbit_partition(int n, int p, int k,
                                            std::size_t max_tuples = 1 << 20);

}  // namespace descent
