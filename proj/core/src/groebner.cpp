#include "koszul/groebner.hpp"

#include "koszul/error.hpp"

#include <algorithm>

namespace koszul {

Vec VecArith::normalize(Vec terms) const {
  std::sort(terms.begin(), terms.end(),
            [&](const VecTerm& a, const VecTerm& b) { return order_.compare(a, b) > 0; });
  Vec out;
  out.reserve(terms.size());
  const auto& F = field();
  for (auto& t : terms) {
    Coeff c = t.coeff % F.characteristic();
    if (!out.empty() && out.back().mon == t.mon && out.back().comp == t.comp) {
      out.back().coeff = F.add(out.back().coeff, c);
      if (out.back().coeff == 0) out.pop_back();
    } else if (c != 0) {
      out.push_back(VecTerm{t.mon, t.comp, c});
    }
  }
  return out;
}

Vec VecArith::monic(Vec v) const {
  if (v.empty() || v.front().coeff == 1) return v;
  return scale(v, field().inv(v.front().coeff));
}

Vec VecArith::add(const Vec& a, const Vec& b) const {
  Vec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  const auto& F = field();
  while (i < a.size() && j < b.size()) {
    int c = order_.compare(a[i], b[j]);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      Coeff s = F.add(a[i].coeff, b[j].coeff);
      if (s) out.push_back(VecTerm{a[i].mon, a[i].comp, s});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + i, a.end());
  out.insert(out.end(), b.begin() + j, b.end());
  return out;
}

Vec VecArith::scale(const Vec& a, Coeff c) const {
  c %= field().characteristic();
  if (c == 0) return {};
  Vec out = a;
  for (auto& t : out) t.coeff = field().mul(t.coeff, c);
  return out;
}

Vec VecArith::mul_term(const Vec& a, const Monomial& m, Coeff c) const {
  c %= field().characteristic();
  if (c == 0) return {};
  Vec out;
  out.reserve(a.size());
  for (const auto& t : a) out.push_back(VecTerm{t.mon * m, t.comp, field().mul(t.coeff, c)});
  return out;
}

Vec VecArith::mul_poly(const Vec& a, const Polynomial& f) const {
  Vec acc;
  for (const auto& t : f.terms()) acc = add(acc, mul_term(a, t.mon, t.coeff));
  return acc;
}

Vec VecArith::sub_cancel(const Vec& a, std::size_t from, Coeff c, const Monomial& m, const Vec& b) const {
  const auto& F = field();
  Coeff nc = F.neg(c);
  Vec out;
  out.reserve(a.size() - from + b.size());
  std::size_t i = from + 1, j = 1;
  while (i < a.size() && j < b.size()) {
    Monomial bm = b[j].mon * m;
    int cmp = order_.compare(a[i].mon, a[i].comp, bm, b[j].comp);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(VecTerm{bm, b[j].comp, F.mul(b[j].coeff, nc)});
      ++j;
    } else {
      Coeff s = F.add(a[i].coeff, F.mul(b[j].coeff, nc));
      if (s) out.push_back(VecTerm{a[i].mon, a[i].comp, s});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + i, a.end());
  for (; j < b.size(); ++j) out.push_back(VecTerm{b[j].mon * m, b[j].comp, F.mul(b[j].coeff, nc)});
  return out;
}

Vec to_vec(const Polynomial& f, std::uint32_t comp) {
  Vec v;
  v.reserve(f.size());
  for (const auto& t : f.terms()) v.push_back(VecTerm{t.mon, comp, t.coeff});
  return v;
}

Polynomial component(const Vec& v, std::uint32_t comp, const PolyRing& ring) {
  std::vector<Term> terms;
  for (const auto& t : v) {
    if (t.comp == comp) terms.push_back(Term{t.mon, t.coeff});
  }
  return ring.from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------

GroebnerBasis::GroebnerBasis(std::shared_ptr<const PolyRing> ring, ModuleOrder order, std::size_t rank,
                             std::vector<Vec> elements, bool reduced)
    : ring_(std::move(ring)), order_(std::move(order)), rank_(rank), elements_(std::move(elements)),
      by_comp_(rank), reduced_(reduced) {
  for (std::uint32_t k = 0; k < elements_.size(); ++k) {
    by_comp_.at(elements_[k].front().comp).push_back(k);
  }
}

bool GroebnerBasis::is_whole_module() const {
  for (std::size_t c = 0; c < rank_; ++c) {
    bool unit = false;
    for (auto k : by_comp_[c]) {
      if (elements_[k].front().mon.is_one()) unit = true;
    }
    if (!unit) return false;
  }
  return true;
}

Vec GroebnerBasis::normal_form(const Vec& v, std::size_t budget) const {
  if (!ring_) return v;
  VecArith arith(*ring_, order_);
  Vec f = v;
  Vec result;
  std::size_t pos = 0;
  std::size_t steps = 0;
  while (pos < f.size()) {
    const VecTerm& t = f[pos];
    if (t.comp >= rank_) throw DomainError("rank mismatch in normal form");
    const Vec* reducer = nullptr;
    for (auto k : by_comp_[t.comp]) {
      if (elements_[k].front().mon.divides(t.mon)) {
        reducer = &elements_[k];
        break;
      }
    }
    if (!reducer) {
      result.push_back(t);
      ++pos;
      continue;
    }
    const VecTerm& lead = reducer->front();
    Coeff c = arith.field().mul(t.coeff, arith.field().inv(lead.coeff));
    f = arith.sub_cancel(f, pos, c, t.mon / lead.mon, *reducer);
    pos = 0;
    if (budget && ++steps > budget) throw BudgetExceeded("normal form exceeded its step budget");
  }
  return result;
}

std::vector<Polynomial> GroebnerBasis::polynomials() const {
  std::vector<Polynomial> out;
  for (const auto& e : elements_) out.push_back(component(e, 0, *ring_));
  return out;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (!ring_) return f;
  return component(normal_form(to_vec(f, 0)), 0, *ring_);
}

// ---------------------------------------------------------------------------

GroebnerBuilder::GroebnerBuilder(std::shared_ptr<const PolyRing> ring, ModuleOrder order, std::size_t rank,
                                 Limits limits)
    : ring_(std::move(ring)), arith_(*ring_, std::move(order)), rank_(rank), limits_(limits),
      product_criterion_(rank == 1), by_comp_(rank) {}

int GroebnerBuilder::find_reducer(const VecTerm& t) const {
  for (auto k : by_comp_[t.comp]) {
    if (basis_[k].front().mon.divides(t.mon)) return static_cast<int>(k);
  }
  return -1;
}

Vec GroebnerBuilder::reduce(Vec f, bool full, std::size_t& steps) const {
  Vec result;
  std::size_t pos = 0;
  while (pos < f.size()) {
    const VecTerm& t = f[pos];
    if (t.comp >= rank_) throw DomainError("rank mismatch in Gröbner computation");
    int k = find_reducer(t);
    if (k < 0) {
      if (!full) {
        result.insert(result.end(), f.begin() + pos, f.end());
        return result;
      }
      result.push_back(t);
      ++pos;
      continue;
    }
    const Vec& g = basis_[k];
    f = arith_.sub_cancel(f, pos, t.coeff, t.mon / g.front().mon, g);
    pos = 0;
    if (++steps > limits_.max_reduction_steps) {
      throw BudgetExceeded("Gröbner basis computation exceeded its reduction budget");
    }
  }
  return result;
}

Vec GroebnerBuilder::normal_form(const Vec& v) const {
  std::size_t steps = 0;
  return reduce(v, true, steps);
}

bool GroebnerBuilder::add(const Vec& v) {
  Vec h = arith_.monic(reduce(v, true, steps_));
  if (h.empty()) return false;
  insert(std::move(h));
  return true;
}

void GroebnerBuilder::insert(Vec h) {
  if (basis_.size() >= limits_.max_basis_size) {
    throw BudgetExceeded("Gröbner basis exceeded its size budget");
  }
  const std::uint32_t n = static_cast<std::uint32_t>(basis_.size());
  const Monomial hm = h.front().mon;
  const std::uint32_t hc = h.front().comp;

  struct Cand {
    std::uint32_t g;
    Monomial lcm;
    bool coprime;
  };
  std::vector<Cand> cands;
  for (auto g : by_comp_[hc]) {
    if (!active_[g]) continue;
    const Monomial& gm = basis_[g].front().mon;
    cands.push_back(Cand{g, gm.lcm(hm), product_criterion_ && gm.coprime(hm)});
  }

  // Gebauer-Möller: keep a new pair only if no other new pair has an lcm dividing it.
  std::vector<Cand> kept;
  for (std::size_t a = 0; a < cands.size(); ++a) {
    if (cands[a].coprime) {
      kept.push_back(cands[a]);
      continue;
    }
    bool dominated = false;
    for (std::size_t b = a + 1; b < cands.size() && !dominated; ++b) {
      dominated = cands[b].lcm.divides(cands[a].lcm);
    }
    for (std::size_t b = 0; b < kept.size() && !dominated; ++b) {
      dominated = kept[b].lcm.divides(cands[a].lcm);
    }
    if (!dominated) kept.push_back(cands[a]);
  }

  // Old pairs made redundant by h.
  for (auto it = pairs_.begin(); it != pairs_.end();) {
    if (basis_[it->i].front().comp == hc && hm.divides(it->lcm)) {
      const Monomial li = basis_[it->i].front().mon.lcm(hm);
      const Monomial lj = basis_[it->j].front().mon.lcm(hm);
      if (!(li == it->lcm) && !(lj == it->lcm)) {
        it = pairs_.erase(it);
        continue;
      }
    }
    ++it;
  }

  for (const auto& c : kept) {
    if (c.coprime) continue;
    pairs_.insert(Pair{c.lcm.degree(), c.g, n, c.lcm});
  }

  for (auto g : by_comp_[hc]) {
    if (active_[g] && hm.divides(basis_[g].front().mon)) active_[g] = false;
  }

  basis_.push_back(std::move(h));
  active_.push_back(true);
  by_comp_[hc].push_back(n);
}

void GroebnerBuilder::run() {
  while (!pairs_.empty()) {
    Pair p = *pairs_.begin();
    pairs_.erase(pairs_.begin());
    const Vec& gi = basis_[p.i];
    const Vec& gj = basis_[p.j];
    Vec s = arith_.add(arith_.mul_term(gi, p.lcm / gi.front().mon, 1),
                       arith_.mul_term(gj, p.lcm / gj.front().mon, arith_.field().neg(1)));
    Vec h = arith_.monic(reduce(std::move(s), true, steps_));
    if (!h.empty()) insert(std::move(h));
  }
}

GroebnerBasis GroebnerBuilder::finish(bool reduce_tails) const {
  std::vector<Vec> minimal;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (!active_[k]) continue;
    bool redundant = false;
    for (std::size_t l = 0; l < basis_.size() && !redundant; ++l) {
      if (l == k || !active_[l]) continue;
      const auto& a = basis_[l].front();
      const auto& b = basis_[k].front();
      redundant = a.comp == b.comp && a.mon.divides(b.mon) && !(a.mon == b.mon && l > k);
    }
    if (!redundant) minimal.push_back(basis_[k]);
  }
  const ModuleOrder& ord = arith_.order();
  std::sort(minimal.begin(), minimal.end(),
            [&](const Vec& a, const Vec& b) { return ord.compare(a.front(), b.front()) < 0; });
  if (!reduce_tails) return GroebnerBasis(ring_, ord, rank_, std::move(minimal), false);

  GroebnerBasis lead_only(ring_, ord, rank_, minimal, false);
  std::vector<Vec> reduced;
  reduced.reserve(minimal.size());
  for (const auto& g : minimal) {
    // Leading terms are pairwise non-divisible, so only tails change.
    Vec tail(g.begin() + 1, g.end());
    Vec r = lead_only.normal_form(tail, limits_.max_reduction_steps);
    r.insert(r.begin(), g.front());
    reduced.push_back(arith_.monic(std::move(r)));
  }
  return GroebnerBasis(ring_, ord, rank_, std::move(reduced), true);
}

}  // namespace koszul
