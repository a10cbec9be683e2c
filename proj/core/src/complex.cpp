#include "koszul/complex.hpp"

#include "koszul/error.hpp"

#include <bit>
#include <unordered_map>

namespace koszul {

namespace {

// All subsets of {0..n-1} of size k as bitmasks, in lexicographic order of
// their sorted element lists.
std::vector<std::uint32_t> subsets(std::size_t n, std::size_t k) {
  std::vector<std::uint32_t> out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return out;
  for (;;) {
    std::uint32_t mask = 0;
    for (auto i : idx) mask |= 1u << i;
    out.push_back(mask);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

bool columns_in_span(const Matrix& M, const Matrix& rels) {
  if (M.is_zero()) return true;
  ModuleOrder order(M.ring().poly().order());
  GroebnerBasis gb = buchberger(rels.columns(order), rels.rows(), M.ring());
  for (const auto& c : M.columns(order)) {
    if (!gb.normal_form(c).empty()) return false;
  }
  return true;
}

}  // namespace

bool ChainComplex::composites_vanish() const {
  for (std::size_t k = 0; k + 1 < differentials.size(); ++k) {
    const Matrix& first = differentials[grading == Grading::homological ? k + 1 : k];
    const Matrix& second = differentials[grading == Grading::homological ? k : k + 1];
    std::size_t target = grading == Grading::homological ? k : k + 2;
    if (!columns_in_span(second * first, term_relations[target])) return false;
  }
  return true;
}

std::vector<Matrix> koszul_differentials(const RingPtr& ring, const std::vector<Polynomial>& x) {
  const std::size_t l = x.size();
  if (l > 20) throw DomainError("Koszul complex on more than 20 elements");
  std::vector<std::vector<std::uint32_t>> basis(l + 1);
  std::vector<std::unordered_map<std::uint32_t, std::size_t>> index(l + 1);
  for (std::size_t i = 0; i <= l; ++i) {
    basis[i] = subsets(l, i);
    for (std::size_t k = 0; k < basis[i].size(); ++k) index[i][basis[i][k]] = k;
  }
  const auto& P = ring->poly();
  std::vector<Matrix> out;
  for (std::size_t i = 1; i <= l; ++i) {
    Matrix d(ring, basis[i - 1].size(), basis[i].size());
    for (std::size_t col = 0; col < basis[i].size(); ++col) {
      std::uint32_t S = basis[i][col];
      std::size_t k = 0;
      for (std::size_t s = 0; s < l; ++s) {
        if (!(S & (1u << s))) continue;
        Polynomial entry = (k % 2 == 0) ? x[s] : P.neg(x[s]);
        d.set(index[i - 1].at(S & ~(1u << s)), col, entry);
        ++k;
      }
    }
    out.push_back(std::move(d));
  }
  return out;
}

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<Polynomial> reduced(const RingPtr& ring, const std::vector<Polynomial>& x) {
  std::vector<Polynomial> out;
  for (const auto& f : x) out.push_back(ring->reduce(f));
  return out;
}

}  // namespace

ChainComplex koszul_chain(const std::vector<Polynomial>& x, const PresentedModule& M) {
  const RingPtr& ring = M.ring_ptr();
  const std::size_t l = x.size();
  const std::size_t n = M.rank();
  ChainComplex C;
  C.grading = Grading::homological;
  for (std::size_t i = 0; i <= l; ++i) {
    C.ranks.push_back(binomial(l, i) * n);
    C.term_relations.push_back(M.relations().repeat_diag(binomial(l, i)));
  }
  for (const auto& d : koszul_differentials(ring, reduced(ring, x))) C.differentials.push_back(d.kron_identity(n));
  return C;
}

ChainComplex koszul_cochain(const std::vector<Polynomial>& x, const PresentedModule& M) {
  const RingPtr& ring = M.ring_ptr();
  const std::size_t l = x.size();
  const std::size_t n = M.rank();
  ChainComplex C;
  C.grading = Grading::cohomological;
  for (std::size_t i = 0; i <= l; ++i) {
    C.ranks.push_back(binomial(l, i) * n);
    C.term_relations.push_back(M.relations().repeat_diag(binomial(l, i)));
  }
  for (const auto& d : koszul_differentials(ring, reduced(ring, x))) {
    C.differentials.push_back(d.transpose().kron_identity(n));
  }
  return C;
}

SubQuotient homology_subquotient(const ChainComplex& C, int degree) {
  if (C.term_relations.empty()) throw DomainError("homology of an empty complex");
  const RingPtr& ring = C.term_relations.front().ring_ptr();
  const int k = degree - C.offset;
  if (k < 0 || static_cast<std::size_t>(k) >= C.terms()) {
    return SubQuotient{Matrix(ring, 0, 0), Matrix(ring, 0, 0)};
  }
  const auto uk = static_cast<std::size_t>(k);
  const Matrix* out = nullptr;
  const Matrix* in = nullptr;
  std::size_t out_target = 0;
  if (C.grading == Grading::homological) {
    if (uk >= 1) {
      out = &C.differentials[uk - 1];
      out_target = uk - 1;
    }
    if (uk + 1 < C.terms()) in = &C.differentials[uk];
  } else {
    if (uk + 1 < C.terms()) {
      out = &C.differentials[uk];
      out_target = uk + 1;
    }
    if (uk >= 1) in = &C.differentials[uk - 1];
  }
  Matrix gens = out ? kernel_modulo(*out, C.term_relations[out_target]) : Matrix::identity(ring, C.ranks[uk]);
  Matrix rels = in ? C.term_relations[uk].hstack(*in) : C.term_relations[uk];
  return SubQuotient{std::move(gens), std::move(rels)};
}

PresentedModule homology_at(const ChainComplex& C, int degree) {
  return homology_subquotient(C, degree).presentation();
}

}  // namespace koszul
