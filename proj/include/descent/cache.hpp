#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <mutex>
#include <utility>

#include "descent/powersum.hpp"
#include "descent/types.hpp"

namespace descent {

// Read-through store of exact power sums, optionally persisted as a JSON
// array of {n, r, value, engine_version} with values as decimal strings.
// Concurrent readers are fine; computation and the file write are serialized
// through one mutex. A corrupted file is reported and ignored, never fatal.
class PowerSumCache {
public:
  explicit PowerSumCache(std::filesystem::path file = {},
                         PowerSumOptions options = {});

  // Cached value or a fresh computation (which also updates the file).
  Natural get(int n, int r);

  PowerProvider provider();

  std::size_t size() const;
  std::size_t compute_count() const { return computed_; }
  const std::filesystem::path& file() const { return file_; }

private:
  void load();
  void save_locked();

  std::filesystem::path file_;
  PowerSumOptions options_;
  mutable std::mutex mutex_;
  std::map<std::pair<int, int>, Natural> values_;
  std::size_t computed_ = 0;
};

}  // namespace descent
