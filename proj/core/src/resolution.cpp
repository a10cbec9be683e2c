#include "koszul/resolution.hpp"

#include "koszul/error.hpp"

namespace koszul {

std::vector<std::size_t> ResolutionPrefix::ranks() const {
  std::vector<std::size_t> r{target.rank()};
  for (const auto& m : maps) r.push_back(m.cols());
  return r;
}

std::size_t ResolutionPrefix::rank(std::size_t i) const {
  if (i == 0) return target.rank();
  if (i <= length()) return maps[i - 1].cols();
  if (i == length() + 1) return next_kernel.cols();
  if (complete) return 0;
  throw BudgetExceeded("resolution truncated before position " + std::to_string(i));
}

Matrix ResolutionPrefix::differential(std::size_t i) const {
  if (i == 0) throw DomainError("d_0 is not part of a resolution");
  if (i <= length()) return maps[i - 1];
  if (i == length() + 1) return next_kernel;
  if (complete) return Matrix(target.ring_ptr(), rank(i - 1), 0);
  throw BudgetExceeded("resolution truncated before d_" + std::to_string(i));
}

void extend_resolution(ResolutionPrefix& res, std::size_t length, std::size_t max_length) {
  if (length > max_length) {
    throw BudgetExceeded("requested resolution length " + std::to_string(length) + " exceeds the configured maximum " +
                         std::to_string(max_length));
  }
  while (!res.complete && res.length() < length) {
    res.maps.push_back(res.next_kernel);
    res.next_kernel = syzygies(res.maps.back());
    res.complete = res.next_kernel.cols() == 0;
  }
}

ResolutionPrefix free_resolution(const PresentedModule& M, std::size_t length, std::size_t max_length) {
  ResolutionPrefix res;
  res.target = M;
  res.next_kernel = minimize_columns(M.relations());
  res.complete = res.next_kernel.cols() == 0;
  extend_resolution(res, length, max_length);
  return res;
}

}  // namespace koszul
