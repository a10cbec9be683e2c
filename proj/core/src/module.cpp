#include "koszul/module.hpp"

#include "koszul/error.hpp"
#include "koszul/prime.hpp"

namespace koszul {

PresentedModule::PresentedModule(RingPtr ring, std::size_t rank, Matrix relations)
    : ring_(std::move(ring)), rank_(rank), relations_(std::move(relations)) {
  if (relations_.rows() != rank_) throw DomainError("presentation matrix has the wrong number of rows");
}

PresentedModule PresentedModule::free(RingPtr ring, std::size_t rank) {
  Matrix rel(ring, rank, 0);
  return PresentedModule(std::move(ring), rank, std::move(rel));
}

PresentedModule PresentedModule::cyclic(RingPtr ring, const std::vector<Polynomial>& generators) {
  Matrix rel(ring, 1, generators.size());
  for (std::size_t j = 0; j < generators.size(); ++j) rel.set(0, j, generators[j]);
  return PresentedModule(std::move(ring), 1, rel.drop_zero_columns());
}

GroebnerBasis PresentedModule::relation_basis() const {
  ModuleOrder order(ring_->poly().order());
  return buchberger(relations_.columns(order), rank_, *ring_);
}

bool PresentedModule::is_zero() const {
  if (rank_ == 0) return true;
  return relation_basis().is_whole_module();
}

PresentedModule PresentedModule::pruned() const {
  if (rank_ == 0) return *this;
  const auto& P = ring_->poly();
  const auto& F = ring_->field();
  Matrix B = relations_.drop_zero_columns();
  for (;;) {
    std::size_t pi = B.rows(), pj = B.cols();
    for (std::size_t j = 0; j < B.cols() && pi == B.rows(); ++j) {
      for (std::size_t i = 0; i < B.rows(); ++i) {
        const auto& e = B.at(i, j);
        if (!e.is_zero() && e.is_constant()) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == B.rows()) break;
    Coeff inv = F.inv(B.at(pi, pj).leading().coeff);
    Matrix next(ring_, B.rows() - 1, B.cols() - 1);
    for (std::size_t j = 0, nj = 0; j < B.cols(); ++j) {
      if (j == pj) continue;
      Polynomial f = P.scale(B.at(pi, j), inv);
      for (std::size_t i = 0, ni = 0; i < B.rows(); ++i) {
        if (i == pi) continue;
        Polynomial v = B.at(i, j);
        if (!f.is_zero() && !B.at(i, pj).is_zero()) v = P.sub(v, P.mul(f, B.at(i, pj)));
        next.set(ni, nj, v);
        ++ni;
      }
      ++nj;
    }
    B = next.drop_zero_columns();
  }
  if (B.rows() == 0) return zero(ring_);
  PresentedModule out(ring_, B.rows(), minimize_columns(B));
  if (out.is_zero()) return zero(ring_);
  return out;
}

PresentedModule PresentedModule::direct_sum(const PresentedModule& other) const {
  return PresentedModule(ring_, rank_ + other.rank_, relations_.block_diag(other.relations_));
}

PresentedModule PresentedModule::first_syzygy() const {
  Matrix B = minimize_columns(relations_);
  return PresentedModule(ring_, B.cols(), syzygies(B));
}

std::string PresentedModule::fingerprint() const {
  std::string s = std::to_string(rank_) + "|";
  for (const auto& row : relations_.to_strings()) {
    for (const auto& e : row) s += e + ",";
    s += ";";
  }
  return s;
}

// ---------------------------------------------------------------------------

namespace {

Matrix column_matrix(const Matrix& M, std::size_t c) { return M.select_columns({c}); }

}  // namespace

bool SubQuotient::is_zero() const {
  if (gens.cols() == 0 || gens.rows() == 0) return true;
  ModuleOrder order(gens.ring().poly().order());
  GroebnerBasis gb = buchberger(rels.columns(order), rels.rows(), gens.ring());
  for (const auto& g : gens.columns(order)) {
    if (!gb.normal_form(g).empty()) return false;
  }
  return true;
}

bool SubQuotient::vanishes_at(const PrimeEntry& p) const {
  if (gens.cols() == 0 || gens.rows() == 0) return true;
  ModuleOrder order(gens.ring().poly().order());
  GroebnerBasis gb = buchberger(rels.columns(order), rels.rows(), gens.ring());
  for (std::size_t c = 0; c < gens.cols(); ++c) {
    if (gb.normal_form(gens.column(c, order)).empty()) continue;
    // (rels : g) ⊆ p means g survives in the localization
    if (p.contains(quotient_ideal(column_matrix(gens, c), rels))) return false;
  }
  return true;
}

PresentedModule SubQuotient::presentation() const {
  const RingPtr& ring = gens.ring_ptr();
  if (gens.cols() == 0) return PresentedModule::zero(ring);
  return PresentedModule(ring, gens.cols(), kernel_modulo(gens, rels)).pruned();
}

Ideal annihilator(const PresentedModule& M) {
  const RingPtr& ring = M.ring_ptr();
  if (M.rank() == 0) return Ideal{{ring->poly().one()}};
  Matrix id = Matrix::identity(ring, M.rank());
  std::vector<Polynomial> acc;
  for (std::size_t j = 0; j < M.rank(); ++j) {
    auto q = quotient_ideal(column_matrix(id, j), M.relations());
    acc = j == 0 ? q : intersect_ideals(ring, acc, q);
    if (acc.empty()) break;
  }
  GroebnerBasis gb = buchberger(acc, *ring);
  Ideal out;
  for (auto& f : gb.polynomials()) {
    Polynomial r = ring->reduce(f);
    if (!r.is_zero()) out.generators.push_back(std::move(r));
  }
  return out;
}

bool vanishes_at_prime(const PresentedModule& M, const PrimeEntry& p) {
  if (M.rank() == 0) return true;
  return SubQuotient{Matrix::identity(M.ring_ptr(), M.rank()), M.relations()}.vanishes_at(p);
}

}  // namespace koszul
