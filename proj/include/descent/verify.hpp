#pragma once

#include <string>
#include <vector>

#include "descent/powersum.hpp"

namespace descent {

// One verification outcome. `detail` carries the reduced residues, bound
// versus actual valuation, or whatever else makes a failure diagnosable.
struct CheckRecord {
  std::string suite;
  std::string name;
  bool holds = false;
  std::string detail;
};

struct VerifyOptions {
  int n_max = 16;
  int r_max = 9;
  std::vector<int> primes = {2, 3, 5};
  bool extended = false;  // raises n_max to 20 unless set explicitly higher
  int max_order = kDefaultMaxOrder;

  int effective_n_max() const { return extended && n_max < 20 ? 20 : n_max; }
};

// Suites mirror the verification surface: "lemma" the expansion identities,
// "congruence" the shift/recursion/transfer family, "bounds" the valuation
// bounds sweep, "orbit" the tree-group action. "all" runs the lot.
std::vector<CheckRecord> run_suite(const std::string& suite, const VerifyOptions& options,
                                   const PowerProvider& apow = direct_provider());

std::vector<CheckRecord> run_lemma_suite(const VerifyOptions& options, const PowerProvider& apow);
std::vector<CheckRecord> run_congruence_suite(const VerifyOptions& options,
                                              const PowerProvider& apow);
std::vector<CheckRecord> run_bounds_suite(const VerifyOptions& options, const PowerProvider& apow);
std::vector<CheckRecord> run_orbit_suite(const VerifyOptions& options);

bool all_hold(const std::vector<CheckRecord>& records);

// Machine-readable report (deterministic JSON text) and the matching
// one-line-per-check human summary.
std::string report_json(const std::string& suite, const std::vector<CheckRecord>& records);
std::string report_summary(const std::vector<CheckRecord>& records);

}  // namespace descent
