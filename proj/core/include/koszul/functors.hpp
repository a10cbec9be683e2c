#pragma once

#include "koszul/complex.hpp"
#include "koszul/module.hpp"
#include "koszul/resolution.hpp"

#include <cstddef>
#include <vector>

namespace koszul {

/// Tor_i(M, N) = H_i(F ⊗ N) for a resolution F of M. Needs d_i and d_{i+1}.
SubQuotient tor_subquotient(const ResolutionPrefix& resolution, const PresentedModule& N, std::size_t i);
PresentedModule tor(const PresentedModule& M, const PresentedModule& N, std::size_t i,
                    std::size_t max_length = kUnbounded);

/// Ext^i(M, N) = H^i(Hom(F, N)) for a resolution F of M.
SubQuotient ext_subquotient(const ResolutionPrefix& resolution, const PresentedModule& N, std::size_t i);
PresentedModule ext(const PresentedModule& M, const PresentedModule& N, std::size_t i,
                    std::size_t max_length = kUnbounded);

/// (0 :_M J) = Hom(R/J, M), the kernel of m ↦ (x_1 m, ..., x_ℓ m).
SubQuotient hom_from_cyclic_subquotient(const std::vector<Polynomial>& J, const PresentedModule& M);
PresentedModule hom_from_cyclic(const std::vector<Polynomial>& J, const PresentedModule& M);

/// S_k(J; M) = Coker(d^{k-1}) of K^•(J; M), with S_0 = M. Requires k <= |J|.
PresentedModule cocycle_module(const std::vector<Polynomial>& J, const PresentedModule& M, std::size_t k);

}  // namespace koszul
