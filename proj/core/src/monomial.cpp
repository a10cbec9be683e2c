#include "koszul/monomial.hpp"

#include "koszul/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace koszul {

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVariables) {
    throw DomainError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::span<const int> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) throw DomainError("negative exponent");
    set(i, static_cast<unsigned>(exponents[i]));
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= nvars_) throw DomainError("variable index out of range");
  if (e > std::numeric_limits<Exponent>::max()) throw DomainError("exponent overflow");
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = static_cast<Exponent>(e);
  if (e) {
    mask_ |= (1u << i);
  } else {
    mask_ &= ~(1u << i);
  }
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  r.nvars_ = std::max(nvars_, other.nvars_);
  for (std::size_t i = 0; i < r.nvars_; ++i) {
    unsigned e = static_cast<unsigned>(exps_[i]) + other.exps_[i];
    if (e > std::numeric_limits<Exponent>::max()) throw DomainError("exponent overflow");
    r.exps_[i] = static_cast<Exponent>(e);
  }
  r.degree_ = degree_ + other.degree_;
  r.mask_ = mask_ | other.mask_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < nvars_; ++i) {
    r.exps_[i] = static_cast<Exponent>(exps_[i] - other.exps_[i]);
    if (r.exps_[i] == 0) r.mask_ &= ~(1u << i);
  }
  r.degree_ = degree_ - other.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  std::uint32_t deg = 0;
  for (std::size_t i = 0; i < nvars_; ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    deg += r.exps_[i];
  }
  r.degree_ = deg;
  r.mask_ = mask_ | other.mask_;
  return r;
}

std::vector<int> Monomial::exponents() const {
  return std::vector<int>(exps_.begin(), exps_.begin() + nvars_);
}

std::string to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::lex:
      return "lex";
    case OrderKind::glex:
      return "glex";
    case OrderKind::grevlex:
    default:
      return "grevlex";
  }
}

OrderKind order_kind_from_string(const std::string& name) {
  if (name == "grevlex") return OrderKind::grevlex;
  if (name == "lex") return OrderKind::lex;
  if (name == "glex" || name == "graded-lex" || name == "deglex") return OrderKind::glex;
  throw DomainError("unknown monomial order '" + name + "'");
}

MonomialOrder::MonomialOrder(OrderKind kind, std::size_t nvars) : kind_(kind), precedence_(nvars) {
  std::iota(precedence_.begin(), precedence_.end(), std::uint8_t{0});
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::uint8_t> precedence)
    : kind_(kind), precedence_(std::move(precedence)) {
  std::vector<std::uint8_t> sorted = precedence_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw DomainError("variable precedence is not a permutation");
  }
}

Ordering compare_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
  if (a.size() != b.size() || a.size() != order.size()) {
    throw DomainError("monomial length mismatch");
  }
  int c = order.compare(a, b);
  return c < 0 ? Ordering::less : (c > 0 ? Ordering::greater : Ordering::equal);
}

}  // namespace koszul
