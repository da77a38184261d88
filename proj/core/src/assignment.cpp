#include "chromcon/assignment.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace chromcon {

namespace {

// Kuhn's augmenting-path matching: items on the left, colors on the right.
bool augment(std::size_t item, const std::vector<std::vector<int>>& pools,
             std::map<int, std::size_t>& color_owner, std::set<int>& visited) {
  for (int color : pools[item]) {
    if (visited.count(color)) continue;
    visited.insert(color);
    auto it = color_owner.find(color);
    if (it == color_owner.end() || augment(it->second, pools, color_owner, visited)) {
      color_owner[color] = item;
      return true;
    }
  }
  return false;
}

}  // namespace

DistinctAssignment assign_distinct_colors(const std::vector<std::vector<int>>& pools,
                                          const std::vector<int>& already_used) {
  DistinctAssignment out;
  out.colors.assign(pools.size(), 0);
  std::set<int> used(already_used.begin(), already_used.end());

  bool stuck = false;
  for (std::size_t i = 0; i < pools.size(); ++i) {
    int pick = 0;
    for (int color : pools[i]) {
      if (!used.count(color)) {
        pick = color;
        break;
      }
    }
    if (pick == 0) {
      stuck = true;
      break;
    }
    out.colors[i] = pick;
    used.insert(pick);
  }
  if (!stuck) return out;

  // Greedy failed; look for a full system of distinct representatives.
  std::vector<std::vector<int>> filtered(pools.size());
  const std::set<int> banned(already_used.begin(), already_used.end());
  for (std::size_t i = 0; i < pools.size(); ++i)
    for (int color : pools[i])
      if (!banned.count(color)) filtered[i].push_back(color);

  std::map<int, std::size_t> color_owner;
  for (std::size_t i = 0; i < pools.size(); ++i) {
    std::set<int> visited;
    if (!augment(i, filtered, color_owner, visited))
      throw std::logic_error("assign_distinct_colors: no system of distinct representatives");
  }
  out.used_fallback = true;
  std::fill(out.colors.begin(), out.colors.end(), 0);
  for (const auto& [color, item] : color_owner) out.colors[item] = color;
  return out;
}

std::vector<int> assign_with_shared_pair(const std::vector<std::vector<int>>& pools) {
  for (const auto& pool : pools)
    if (pool.empty()) throw std::logic_error("assign_with_shared_pair: empty pool");

  std::size_t first = pools.size(), second = pools.size();
  int shared = 0;
  for (std::size_t i = 0; i < pools.size() && first == pools.size(); ++i) {
    for (std::size_t j = i + 1; j < pools.size(); ++j) {
      std::vector<int> common;
      std::set_intersection(pools[i].begin(), pools[i].end(), pools[j].begin(), pools[j].end(),
                            std::back_inserter(common));
      if (!common.empty()) {
        first = i;
        second = j;
        shared = common.front();
        break;
      }
    }
  }
  if (first == pools.size())
    throw std::logic_error("assign_with_shared_pair: pools are pairwise disjoint");

  std::vector<int> colors(pools.size());
  for (std::size_t i = 0; i < pools.size(); ++i)
    colors[i] = (i == first || i == second) ? shared : pools[i].front();
  return colors;
}

}  // namespace chromcon
