#include "descent/cache.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "descent/version.hpp"

namespace descent {

PowerSumCache::PowerSumCache(std::filesystem::path file, PowerSumOptions options)
    : file_(std::move(file)), options_(options) {
  if (!file_.empty()) load();
}

void PowerSumCache::load() {
  std::ifstream in(file_);
  if (!in) return;  // no file yet: start empty
  try {
    const auto doc = nlohmann::json::parse(in);
    if (!doc.is_array()) throw std::runtime_error("top-level value is not an array");
    for (const auto& entry : doc) {
      const int n = entry.at("n").get<int>();
      const int r = entry.at("r").get<int>();
      const std::string value = entry.at("value").get<std::string>();
      values_[{n, r}] = Natural(value);
    }
  } catch (const std::exception& error) {
    std::cerr << "warning: ignoring unreadable cache " << file_ << ": " << error.what() << "\n";
    values_.clear();
  }
}

void PowerSumCache::save_locked() {
  if (file_.empty()) return;
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& [key, value] : values_) {
    nlohmann::ordered_json entry;
    entry["n"] = key.first;
    entry["r"] = key.second;
    entry["value"] = value.str();
    entry["engine_version"] = kEngineVersion;
    doc.push_back(std::move(entry));
  }
  std::ofstream out(file_, std::ios::trunc);
  if (!out) {
    std::cerr << "warning: cannot write cache " << file_ << "\n";
    return;
  }
  out << doc.dump(2) << "\n";
}

Natural PowerSumCache::get(int n, int r) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = values_.find({n, r});
    if (it != values_.end()) return it->second;
  }
  // Single writer per key: whoever computes first stores; a racing duplicate
  // computation would store the identical value anyway.
  Natural value = power_sum(n, r, options_);
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = values_.emplace(std::pair{n, r}, std::move(value));
  if (inserted) {
    ++computed_;
    save_locked();
  }
  return it->second;
}

PowerProvider PowerSumCache::provider() {
  return [this](int n, int r) { return get(n, r); };
}

std::size_t PowerSumCache::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return values_.size();
}

}  // namespace descent
