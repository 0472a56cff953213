#pragma once

// Built-in pattern tables. These are fixed constants of the theory; the
// verify_* routines and the CLI `builtin:` names check them by brute force.

#include <vector>

#include "quiddity/cycles.hpp"

namespace quiddity::tables {

/// Exceptional cycles for the local description by blocks of length four.
inline const std::vector<DihedralCycle>& cor12_exceptions() {
  static const std::vector<DihedralCycle> v{{0, 0}, {1, 1, 1}, {1, 2, 1, 2}};
  return v;
}

/// Every quiddity cycle outside cor12_exceptions() contains one of these.
inline const std::vector<Pattern>& cor12_quadruples() {
  static const std::vector<Pattern> v{
      {1, 2, 2, 1}, {1, 2, 2, 2}, {1, 2, 2, 3}, {1, 2, 2, 4}, {1, 2, 3, 1}, {1, 2, 3, 2}, {1, 2, 3, 3},
      {1, 2, 4, 1}, {1, 2, 4, 3}, {1, 2, 5, 1}, {1, 2, 5, 2}, {1, 2, 6, 1}, {1, 3, 1, 3}, {1, 3, 1, 4},
      {1, 3, 1, 5}, {1, 3, 1, 6}, {1, 3, 4, 1}, {1, 4, 1, 2}, {1, 5, 1, 2}, {1, 6, 1, 2}, {1, 7, 1, 2},
      {2, 1, 3, 2}, {2, 1, 3, 3}, {2, 2, 1, 4}, {2, 2, 1, 5}, {3, 1, 2, 3}, {3, 1, 2, 4}};
  return v;
}

/// Every quiddity cycle contains one of these (non-strictly).
inline const std::vector<Pattern>& short_patterns() {
  static const std::vector<Pattern> v{{0, 0}, {1, 1}, {1, 2}, {1, 3}};
  return v;
}

/// Representatives exempt from the interior-subsequence statement.
inline const std::vector<Pattern>& interior_exceptions() {
  static const std::vector<Pattern> v{{0, 0}, {1, 1, 1}, {1, 2, 1, 2}, {2, 1, 2, 1}, {2, 1, 3, 1, 2}};
  return v;
}

/// The nine interior patterns: every other representative has one of these
/// (forward or reversed) strictly between its first and last entry.
inline const std::vector<Pattern>& interior_patterns() {
  static const std::vector<Pattern> v{{1, 2, 2}, {1, 2, 3}, {1, 2, 4}, {2, 1, 3},   {2, 1, 4},
                                      {2, 1, 5}, {3, 1, 4}, {3, 1, 5}, {1, 3, 1, 3}};
  return v;
}

/// Intermediate 12-pattern cover obtained from two rounds of the cover step
/// (exceptions: cor12_exceptions()).
inline const std::vector<Pattern>& two_step_patterns() {
  static const std::vector<Pattern> v{{1, 2, 2},          {1, 2, 3, 1},       {1, 2, 3, 2, 1},
                                      {1, 2, 4, 1, 2},    {1, 2, 4, 1, 3, 1}, {1, 3, 1, 3},
                                      {1, 3, 1, 4, 1},    {1, 3, 1, 5, 1, 2}, {1, 3, 1, 5, 1, 3, 1},
                                      {1, 4, 1, 2},       {2, 1, 3},          {2, 1, 5, 1, 2}};
  return v;
}

/// Every affine characteristic sequence contains one of these fifteen.
inline const std::vector<Pattern>& affine_patterns() {
  static const std::vector<Pattern> v = [] {
    std::vector<Pattern> all = interior_patterns();
    for (Pattern p : std::vector<Pattern>{{1, 3, 2}, {1, 3, 3}, {1, 4, 1, 4}, {2, 1, 6}, {2, 2, 2, 2}, {3, 1, 6}})
      all.push_back(std::move(p));
    return all;
  }();
  return v;
}

}  // namespace quiddity::tables
