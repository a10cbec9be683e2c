#pragma once

#include "koszul/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <vector>

namespace koszul {

/// One term c * m * e_comp of a free-module element.
struct VecTerm {
  Monomial mon;
  std::uint32_t comp;
  Coeff coeff;

  bool operator==(const VecTerm&) const = default;
};

/// Element of a free module P^r, terms sorted strictly descending in a ModuleOrder.
using Vec = std::vector<VecTerm>;

/// Term order on P^r. Components below `split` form an elimination block that
/// dominates the rest; inside a block monomials compare first and the lower
/// component index wins ties. With split == 0 this is plain term-over-position.
class ModuleOrder {
public:
  ModuleOrder() = default;
  explicit ModuleOrder(MonomialOrder order, std::uint32_t split = 0)
      : order_(std::move(order)), split_(split) {}

  const MonomialOrder& monomial_order() const noexcept { return order_; }
  std::uint32_t split() const noexcept { return split_; }

  int compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const noexcept {
    bool ea = ca < split_;
    bool eb = cb < split_;
    if (ea != eb) return ea ? 1 : -1;
    int c = order_.compare(a, b);
    if (c != 0) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }
  int compare(const VecTerm& a, const VecTerm& b) const noexcept {
    return compare(a.mon, a.comp, b.mon, b.comp);
  }

private:
  MonomialOrder order_;
  std::uint32_t split_ = 0;
};

/// Work limits shared by every Gröbner computation of a ring.
struct Limits {
  std::size_t max_reduction_steps = 20'000'000;
  std::size_t max_basis_size = 100'000;
};

/// Field arithmetic on Vec for a fixed ring and module order.
class VecArith {
public:
  VecArith(const PolyRing& ring, ModuleOrder order) : ring_(&ring), order_(std::move(order)) {}

  const ModuleOrder& order() const noexcept { return order_; }
  const PrimeField& field() const noexcept { return ring_->field(); }

  /// Sorts and collects raw terms.
  Vec normalize(Vec terms) const;
  Vec monic(Vec v) const;
  Vec add(const Vec& a, const Vec& b) const;
  Vec scale(const Vec& a, Coeff c) const;
  Vec mul_term(const Vec& a, const Monomial& m, Coeff c) const;
  Vec mul_poly(const Vec& a, const Polynomial& f) const;
  /// a[from..] - c * m * b, assuming the leading terms cancel (skips b's head).
  Vec sub_cancel(const Vec& a, std::size_t from, Coeff c, const Monomial& m, const Vec& b) const;

private:
  const PolyRing* ring_;
  ModuleOrder order_;
};

/// A Gröbner basis of a submodule of P^r (rank 1 = an ideal).
class GroebnerBasis {
public:
  GroebnerBasis() = default;
  GroebnerBasis(std::shared_ptr<const PolyRing> ring, ModuleOrder order, std::size_t rank,
                std::vector<Vec> elements, bool reduced);

  const PolyRing& ring() const { return *ring_; }
  std::shared_ptr<const PolyRing> ring_ptr() const { return ring_; }
  const ModuleOrder& order() const noexcept { return order_; }
  std::size_t rank() const noexcept { return rank_; }
  const std::vector<Vec>& elements() const noexcept { return elements_; }
  bool reduced() const noexcept { return reduced_; }
  bool empty() const noexcept { return elements_.empty(); }
  /// True iff the basis contains a unit vector for every component.
  bool is_whole_module() const;

  /// Full reduction; zero iff v lies in the spanned submodule.
  Vec normal_form(const Vec& v, std::size_t budget = 0) const;
  bool contains(const Vec& v) const { return normal_form(v).empty(); }

  /// Polynomial views for rank-1 bases.
  std::vector<Polynomial> polynomials() const;
  Polynomial normal_form(const Polynomial& f) const;

private:
  std::shared_ptr<const PolyRing> ring_;
  ModuleOrder order_;
  std::size_t rank_ = 0;
  std::vector<Vec> elements_;
  std::vector<std::vector<std::uint32_t>> by_comp_;
  bool reduced_ = false;
};

/// Buchberger's algorithm with Gebauer-Möller pair pruning. Pairs are taken by
/// smallest lcm degree, ties by pair index, so output is deterministic.
/// Generators can be added between runs; the basis stays valid.
class GroebnerBuilder {
public:
  GroebnerBuilder(std::shared_ptr<const PolyRing> ring, ModuleOrder order, std::size_t rank,
                  Limits limits = {});

  /// Reduces v against the current basis and inserts the remainder.
  /// Returns false when v already lies in the span.
  bool add(const Vec& v);
  /// Processes pending pairs. Throws BudgetExceeded past the limits.
  void run();
  Vec normal_form(const Vec& v) const;
  std::size_t size() const noexcept { return basis_.size(); }
  /// Current basis, interreduced if requested. Call after run().
  GroebnerBasis finish(bool reduce = true) const;

private:
  struct Pair {
    std::uint32_t degree;
    std::uint32_t i;
    std::uint32_t j;
    Monomial lcm;
    bool operator<(const Pair& o) const noexcept {
      if (degree != o.degree) return degree < o.degree;
      if (i != o.i) return i < o.i;
      return j < o.j;
    }
  };

  Vec reduce(Vec f, bool full, std::size_t& steps) const;
  int find_reducer(const VecTerm& t) const;
  void insert(Vec h);

  std::shared_ptr<const PolyRing> ring_;
  VecArith arith_;
  std::size_t rank_;
  Limits limits_;
  bool product_criterion_;
  std::vector<Vec> basis_;
  std::vector<bool> active_;
  std::vector<std::vector<std::uint32_t>> by_comp_;
  std::set<Pair> pairs_;
  mutable std::size_t steps_ = 0;
};

/// Lifts a polynomial into component `comp`.
Vec to_vec(const Polynomial& f, std::uint32_t comp = 0);
/// Extracts component `comp` as a polynomial (terms keep their order).
Polynomial component(const Vec& v, std::uint32_t comp, const PolyRing& ring);

}  // namespace koszul
