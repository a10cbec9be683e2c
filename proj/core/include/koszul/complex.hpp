#pragma once

#include "koszul/matrix.hpp"
#include "koszul/module.hpp"

#include <cstddef>
#include <vector>

namespace koszul {

enum class Grading { homological, cohomological };

/// A bounded complex whose terms are direct sums of a presented coefficient
/// module: term k is R^{ranks[k]} / image(term_relations[k]). For free
/// complexes the relation matrices have no columns.
///
/// Homological: differentials[k-1] = d_k : C_k -> C_{k-1}, k = 1..L.
/// Cohomological: differentials[k] = d^k : C^k -> C^{k+1}, k = 0..L-1.
/// Degrees are shifted by `offset` (term k sits in degree k + offset).
struct ChainComplex {
  Grading grading = Grading::homological;
  int offset = 0;
  std::vector<std::size_t> ranks;
  std::vector<Matrix> term_relations;
  std::vector<Matrix> differentials;

  std::size_t terms() const noexcept { return ranks.size(); }
  /// Every composite of adjacent differentials lands in the relations of its target.
  bool composites_vanish() const;
};

/// Exterior-algebra differentials of K(x): d_i(e_S) = Σ_k (-1)^k x_{s_k} e_{S∖s_k},
/// basis subsets in lexicographic order. Returns d_1..d_ℓ.
std::vector<Matrix> koszul_differentials(const RingPtr& ring, const std::vector<Polynomial>& x);

/// K_•(x; M) = K_•(x) ⊗ M. An empty x gives M concentrated in degree 0.
ChainComplex koszul_chain(const std::vector<Polynomial>& x, const PresentedModule& M);
/// K^•(x; M) = Hom(K_•(x), M), with d^i the transpose of d_{i+1} (⊗ M).
ChainComplex koszul_cochain(const std::vector<Polynomial>& x, const PresentedModule& M);

/// Homology at degree i as a subquotient of the term at i (zero outside support).
SubQuotient homology_subquotient(const ChainComplex& C, int i);
/// Homology at degree i as a presented module.
PresentedModule homology_at(const ChainComplex& C, int i);

}  // namespace koszul
