#pragma once

#include "koszul/field.hpp"
#include "koszul/monomial.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace koszul {

struct Term {
  Monomial mon;
  Coeff coeff;

  bool operator==(const Term&) const = default;
};

/// Sparse polynomial: nonzero terms sorted strictly descending in the order of
/// the ring that built it. Arithmetic goes through PolyRing.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Term> sorted_terms) : terms_(std::move(sorted_terms)) {}

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Term& leading() const { return terms_.front(); }
  /// Largest total degree of a term; 0 for the zero polynomial.
  std::uint32_t degree() const noexcept;
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one()); }

  bool operator==(const Polynomial&) const = default;

private:
  std::vector<Term> terms_;
};

/// The ambient polynomial ring F_p[x_1..x_n] with a fixed monomial order.
class PolyRing {
public:
  PolyRing(PrimeField field, std::vector<std::string> variables, MonomialOrder order);

  const PrimeField& field() const noexcept { return field_; }
  const std::vector<std::string>& variables() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const MonomialOrder& order() const noexcept { return order_; }
  /// Index of a variable by name, or -1.
  int variable_index(const std::string& name) const noexcept;

  Polynomial zero() const { return {}; }
  Polynomial one() const { return constant(1); }
  Polynomial constant(std::int64_t c) const;
  Polynomial variable(std::size_t i) const;
  Polynomial monomial(const Monomial& m, Coeff c = 1) const;
  /// Collects like terms, drops zeros and sorts. Input need not be ordered.
  Polynomial from_terms(std::vector<Term> terms) const;

  Polynomial add(const Polynomial& a, const Polynomial& b) const;
  Polynomial sub(const Polynomial& a, const Polynomial& b) const;
  Polynomial neg(const Polynomial& a) const;
  Polynomial scale(const Polynomial& a, Coeff c) const;
  Polynomial mul_term(const Polynomial& a, const Monomial& m, Coeff c) const;
  Polynomial mul(const Polynomial& a, const Polynomial& b) const;
  Polynomial pow(const Polynomial& a, unsigned e) const;
  /// Scales so the leading coefficient is 1.
  Polynomial monic(const Polynomial& a) const;

  std::string to_string(const Polynomial& f) const;
  std::string to_string(const Monomial& m) const;

  bool operator==(const PolyRing& o) const noexcept {
    return field_ == o.field_ && vars_ == o.vars_ && order_ == o.order_;
  }

private:
  PrimeField field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

}  // namespace koszul
