#pragma once

#include "koszul/ring.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace koszul {

struct ResolutionPrefix;

/// A prime ideal of R supplied by the user. Primality is trusted; properness
/// is checked. The Gröbner basis of p + I is computed once.
class PrimeEntry {
public:
  PrimeEntry(std::string name, RingPtr ring, Ideal generators, bool zero_ideal = false);

  const std::string& name() const noexcept { return name_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const Ideal& ideal() const noexcept { return ideal_; }
  bool zero_ideal() const noexcept { return zero_ideal_; }
  const GroebnerBasis& basis() const noexcept { return basis_; }

  bool contains(const Polynomial& f) const;
  bool contains(const std::vector<Polynomial>& generators) const;
  /// This ideal is contained in `other`.
  bool contained_in(const PrimeEntry& other) const { return other.contains(ideal_.generators); }

  /// Free resolution of R/p to at least `length` maps (shorter if complete),
  /// cached across calls. Thread safe.
  std::shared_ptr<const ResolutionPrefix> residue_resolution(std::size_t length) const;

private:
  struct Cache {
    std::mutex mutex;
    std::shared_ptr<const ResolutionPrefix> resolution;
  };

  std::string name_;
  RingPtr ring_;
  Ideal ideal_;
  bool zero_ideal_;
  GroebnerBasis basis_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace koszul
