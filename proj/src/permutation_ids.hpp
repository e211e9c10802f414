#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace subelect {

// Dense ids for integer sequences (votes, relative rankings, bijections).
class PermutationIds {
 public:
  int id(std::span<const int> seq) {
    key_.assign(seq.begin(), seq.end());
    auto [it, inserted] = ids_.try_emplace(key_, static_cast<int>(ids_.size()));
    return it->second;
  }
  std::size_t size() const { return ids_.size(); }

 private:
  struct Hash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
      std::uint64_t h = 1469598103934665603ULL;
      for (int x : v) {
        h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL;
        h *= 1099511628211ULL;
      }
      return static_cast<std::size_t>(h ^ (h >> 29));
    }
  };
  std::vector<int> key_;
  std::unordered_map<std::vector<int>, int, Hash> ids_;
};

}  // namespace subelect
