#pragma once

#include "koszul/matrix.hpp"
#include "koszul/ring.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace koszul {

class PrimeEntry;

/// M = R^rank / image(relations). Isomorphism is never decided; callers work
/// with zero tests, vanishing after localization and annihilators.
class PresentedModule {
public:
  PresentedModule() = default;
  PresentedModule(RingPtr ring, std::size_t rank, Matrix relations);

  static PresentedModule free(RingPtr ring, std::size_t rank);
  /// R / (generators).
  static PresentedModule cyclic(RingPtr ring, const std::vector<Polynomial>& generators);
  static PresentedModule zero(RingPtr ring) { return free(std::move(ring), 0); }

  const QuotientRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return rank_; }
  const Matrix& relations() const noexcept { return relations_; }

  /// Exact test: every generator reduces to 0 against the relation basis.
  bool is_zero() const;
  /// Relation basis including the ring relations on every component.
  GroebnerBasis relation_basis() const;
  /// Isomorphic presentation: unit pivots eliminated, redundant relations
  /// dropped, and the zero module normalized to rank 0.
  PresentedModule pruned() const;
  PresentedModule direct_sum(const PresentedModule& other) const;
  /// Kernel of the presentation map R^rank -> M, presented as a module
  /// (the first syzygy module Ω₁M).
  PresentedModule first_syzygy() const;

  /// Stable textual form used for caching and golden output.
  std::string fingerprint() const;

private:
  RingPtr ring_;
  std::size_t rank_ = 0;
  Matrix relations_;
};

/// (image(gens) + image(rels)) / image(rels) inside a free module. Homology
/// groups come out in this form; zero and local-vanishing tests work on it
/// directly without building a presentation.
struct SubQuotient {
  Matrix gens;
  Matrix rels;

  bool is_zero() const;
  bool vanishes_at(const PrimeEntry& p) const;
  PresentedModule presentation() const;
};

/// Ann(M), as the intersection of the quotients (relations : e_j).
Ideal annihilator(const PresentedModule& M);
/// True iff M_p = 0, i.e. Ann(M) ⊄ p. Decided one generator at a time:
/// for a prime p the intersection misses p exactly when every quotient does.
bool vanishes_at_prime(const PresentedModule& M, const PrimeEntry& p);

}  // namespace koszul
