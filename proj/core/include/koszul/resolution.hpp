#pragma once

#include "koszul/matrix.hpp"
#include "koszul/module.hpp"

#include <cstddef>
#include <limits>
#include <vector>

namespace koszul {

inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

/// F_L -> ... -> F_1 -> F_0 -> M. maps[k] is d_{k+1}: F_{k+1} -> F_k.
/// Exact at every interior position by construction (iterated syzygies).
struct ResolutionPrefix {
  PresentedModule target;
  std::vector<Matrix> maps;
  /// Kernel of the last map; zero columns means the resolution is complete.
  Matrix next_kernel;
  bool complete = false;

  std::size_t length() const noexcept { return maps.size(); }
  std::vector<std::size_t> ranks() const;
  /// Rank of F_i; 0 past a complete resolution. Throws past a truncated one.
  std::size_t rank(std::size_t i) const;
  /// d_i for i >= 1, including the zero maps past a complete resolution.
  Matrix differential(std::size_t i) const;
  /// True when d_i is known (computed, or zero past completion).
  bool knows(std::size_t i) const noexcept { return i <= length() + 1 || complete; }
};

/// Iterated syzygies of the (minimized) presentation of M, up to `length` maps.
/// Throws BudgetExceeded when length > max_length.
ResolutionPrefix free_resolution(const PresentedModule& M, std::size_t length, std::size_t max_length = kUnbounded);
/// Adds maps until `length` is reached or the resolution completes.
void extend_resolution(ResolutionPrefix& res, std::size_t length, std::size_t max_length = kUnbounded);

}  // namespace koszul
