#include "koszul/functors.hpp"

#include "koszul/error.hpp"

namespace koszul {

SubQuotient tor_subquotient(const ResolutionPrefix& res, const PresentedModule& N, std::size_t i) {
  const RingPtr& ring = N.ring_ptr();
  const std::size_t n = N.rank();
  const Matrix& B = N.relations();
  const std::size_t ri = res.rank(i);
  if (ri == 0 || n == 0) return SubQuotient{Matrix(ring, 0, 0), Matrix(ring, 0, 0)};

  Matrix gens = Matrix::identity(ring, ri * n);
  if (i >= 1) {
    gens = kernel_modulo(res.differential(i).kron_identity(n), B.repeat_diag(res.rank(i - 1)));
  }
  Matrix rels = B.repeat_diag(ri).hstack(res.differential(i + 1).kron_identity(n));
  return SubQuotient{std::move(gens), std::move(rels)};
}

PresentedModule tor(const PresentedModule& M, const PresentedModule& N, std::size_t i, std::size_t max_length) {
  if (i + 1 > max_length) {
    throw BudgetExceeded("Tor_" + std::to_string(i) + " needs a resolution of length " + std::to_string(i + 1));
  }
  ResolutionPrefix res = free_resolution(M, i, max_length);
  return tor_subquotient(res, N, i).presentation();
}

SubQuotient ext_subquotient(const ResolutionPrefix& res, const PresentedModule& N, std::size_t i) {
  const RingPtr& ring = N.ring_ptr();
  const std::size_t n = N.rank();
  const Matrix& B = N.relations();
  const std::size_t ri = res.rank(i);
  if (ri == 0 || n == 0) return SubQuotient{Matrix(ring, 0, 0), Matrix(ring, 0, 0)};

  const std::size_t next = res.rank(i + 1);
  Matrix gens = next == 0 ? Matrix::identity(ring, ri * n)
                          : kernel_modulo(res.differential(i + 1).transpose().kron_identity(n), B.repeat_diag(next));
  Matrix rels = B.repeat_diag(ri);
  if (i >= 1) rels = rels.hstack(res.differential(i).transpose().kron_identity(n));
  return SubQuotient{std::move(gens), std::move(rels)};
}

PresentedModule ext(const PresentedModule& M, const PresentedModule& N, std::size_t i, std::size_t max_length) {
  if (i + 1 > max_length) {
    throw BudgetExceeded("Ext^" + std::to_string(i) + " needs a resolution of length " + std::to_string(i + 1));
  }
  ResolutionPrefix res = free_resolution(M, i, max_length);
  return ext_subquotient(res, N, i).presentation();
}

SubQuotient hom_from_cyclic_subquotient(const std::vector<Polynomial>& J, const PresentedModule& M) {
  return homology_subquotient(koszul_cochain(J, M), 0);
}

PresentedModule hom_from_cyclic(const std::vector<Polynomial>& J, const PresentedModule& M) {
  return hom_from_cyclic_subquotient(J, M).presentation();
}

PresentedModule cocycle_module(const std::vector<Polynomial>& J, const PresentedModule& M, std::size_t k) {
  if (k > J.size()) {
    throw DomainError("cocycle module S_" + std::to_string(k) + " needs at least " + std::to_string(k) +
                      " generators, got " + std::to_string(J.size()));
  }
  if (k == 0) return M;
  ChainComplex K = koszul_cochain(J, M);
  return PresentedModule(M.ring_ptr(), K.ranks[k], K.term_relations[k].hstack(K.differentials[k - 1]));
}

}  // namespace koszul
