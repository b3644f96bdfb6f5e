#include "descent/types.hpp"

#include <bit>
#include <numeric>
#include <sstream>

namespace descent {

DescentSet::DescentSet(int order, std::uint32_t mask) : order_(order), mask_(mask) {
  if (order < 1 || order > kHardMaxOrder + 1) {
    throw std::domain_error("descent set: order must be in 1.." +
                            std::to_string(kHardMaxOrder + 1));
  }
  if (order <= 32 && (mask >> (order - 1)) != 0) {
    throw std::domain_error("descent set: position outside 1..n-1");
  }
}

DescentSet DescentSet::from_positions(int order, const std::vector<int>& positions) {
  std::uint32_t mask = 0;
  int previous = 0;
  for (int pos : positions) {
    if (pos < 1 || pos >= order) {
      throw std::domain_error("descent set: position outside 1..n-1");
    }
    if (pos <= previous) {
      throw std::domain_error("descent set: positions must be strictly increasing");
    }
    mask |= std::uint32_t{1} << (pos - 1);
    previous = pos;
  }
  return DescentSet(order, mask);
}

int DescentSet::size() const { return std::popcount(mask_); }

bool DescentSet::contains(int position) const {
  if (position < 1 || position >= order_) return false;
  return (mask_ >> (position - 1)) & 1u;
}

std::vector<int> DescentSet::positions() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int pos = 1; pos < order_; ++pos) {
    if ((mask_ >> (pos - 1)) & 1u) out.push_back(pos);
  }
  return out;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)), total_(0) {
  if (parts_.empty()) {
    throw std::domain_error("composition: needs at least one part");
  }
  for (int part : parts_) {
    if (part < 1) {
      throw std::domain_error("composition: parts must be positive");
    }
    total_ += part;
  }
}

std::string to_string(const DescentSet& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int pos : s.positions()) {
    if (!first) os << ",";
    os << pos;
    first = false;
  }
  os << "}/" << s.order();
  return os.str();
}

std::string to_string(const Composition& c) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c.parts().size(); ++i) {
    if (i > 0) os << ",";
    os << c.parts()[i];
  }
  os << ")";
  return os.str();
}

}  // namespace descent
