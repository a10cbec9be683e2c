#pragma once

#include "koszul/module.hpp"
#include "koszul/prime.hpp"
#include "koszul/resolution.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace koszul {

/// A non-negative integer or infinity.
class ExtendedNat {
public:
  constexpr ExtendedNat() = default;
  constexpr ExtendedNat(std::size_t v) : value_(v) {}  // NOLINT: implicit by design of the arithmetic
  static constexpr ExtendedNat infinity() {
    ExtendedNat e;
    e.infinite_ = true;
    return e;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }
  /// Finite value; meaningless for infinity.
  constexpr std::size_t value() const noexcept { return value_; }

  friend constexpr bool operator==(const ExtendedNat& a, const ExtendedNat& b) noexcept {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const ExtendedNat& a, const ExtendedNat& b) noexcept {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

private:
  std::size_t value_ = 0;
  bool infinite_ = false;
};

/// Result of a depth search. When `exact` is false the search ran out of
/// resolution budget and `value` is only a lower bound ("≥ value").
struct DepthResult {
  ExtendedNat value;
  bool exact = true;

  static DepthResult at_least(std::size_t bound) { return DepthResult{bound, false}; }
  std::string to_string() const { return exact ? value.to_string() : ">=" + value.to_string(); }
  bool operator==(const DepthResult&) const = default;
};

/// grade(J; M) = inf{ i : H^i(J; M) ≠ 0 } over the Koszul cochain complex.
ExtendedNat grade(const std::vector<Polynomial>& J, const PresentedModule& M);
/// inf{ i : Ext^i(R/J, M) ≠ 0 }, by free resolution of R/J. Searched up to
/// |J|; past that every Ext vanishes and the grade is infinite.
DepthResult grade_via_ext(const std::vector<Polynomial>& J, const PresentedModule& M,
                          std::size_t max_length = kUnbounded);

/// depth of M_p over R_p: least i with Ext^i(R/p, M) not vanishing at p;
/// infinity when M_p = 0.
DepthResult local_depth(const PresentedModule& M, const PrimeEntry& p, std::size_t max_length = kUnbounded);
/// Same quantity from the Koszul cochain complex on the generators of p.
ExtendedNat local_depth_koszul(const PresentedModule& M, const PrimeEntry& p);

/// p ∈ Ass(M): (0 :_M p) does not vanish at p.
bool ass_member(const PrimeEntry& p, const PresentedModule& M);

/// Krull dimension of R/(J + I); nullopt for the unit ideal (empty support).
std::optional<std::size_t> krull_dim(const std::vector<Polynomial>& J, const QuotientRing& ring);
/// dim R/Ann(M); nullopt for the zero module.
std::optional<std::size_t> krull_dim(const PresentedModule& M);
/// dim R.
std::size_t krull_dim(const QuotientRing& ring);
/// dim R - dim R/p. Refuses unless the ring is flagged equidimensional.
std::size_t height(const PrimeEntry& p);

/// Finite window on Spec R: named primes with their containment order.
class PrimeTable {
public:
  PrimeTable() = default;
  PrimeTable(RingPtr ring, std::vector<PrimeEntry> entries);

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const PrimeEntry& operator[](std::size_t i) const { return entries_.at(i); }
  const std::vector<PrimeEntry>& entries() const noexcept { return entries_; }
  /// Index by name; throws DomainError when absent.
  std::size_t index_of(const std::string& name) const;

  /// entries[i] ⊆ entries[j].
  bool contained(std::size_t i, std::size_t j) const { return containment_[i][j]; }
  /// entries[i] ⊊ entries[j] with no table entry strictly between.
  bool immediate(std::size_t i, std::size_t j) const { return immediate_[i][j]; }
  /// Entries with no other entry strictly below them.
  std::vector<std::size_t> minimal() const;

private:
  RingPtr ring_;
  std::vector<PrimeEntry> entries_;
  std::vector<std::vector<bool>> containment_;
  std::vector<std::vector<bool>> immediate_;
};

struct DepthProfileEntry {
  std::string prime;
  DepthResult depth;
  ExtendedNat grade;
  std::optional<std::size_t> height;
};

/// Depth of R_p, grade(p; R) and (when defined) height for every table entry.
struct DepthProfile {
  std::vector<DepthProfileEntry> entries;

  std::size_t size() const noexcept { return entries.size(); }
  bool all_exact() const noexcept;
};

/// Per-entry local_depth(R, p), grade(p, R) and height. Checks
/// grade <= depth <= height and throws on a violation.
DepthProfile depth_table(const PrimeTable& table, std::size_t max_length = kUnbounded);
inline DepthProfile grade_table(const PrimeTable& table, std::size_t max_length = kUnbounded) {
  return depth_table(table, max_length);
}

}  // namespace koszul
