#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace koszul {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector of fixed capacity. Trailing unused slots stay zero so that
/// comparisons and hashing never need the variable count.
class Monomial {
public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::span<const int> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t size() const noexcept { return nvars_; }
  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::uint32_t degree() const noexcept { return degree_; }
  /// Bit i set iff variable i occurs.
  std::uint32_t support_mask() const noexcept { return mask_; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, unsigned e);

  bool divides(const Monomial& other) const noexcept {
    if ((mask_ & ~other.mask_) != 0 || degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }
  bool coprime(const Monomial& other) const noexcept { return (mask_ & other.mask_) == 0; }

  Monomial operator*(const Monomial& other) const;
  /// Precondition: other divides *this.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  bool operator==(const Monomial& o) const noexcept {
    return nvars_ == o.nvars_ && degree_ == o.degree_ && exps_ == o.exps_;
  }

  std::vector<int> exponents() const;

private:
  std::array<Exponent, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
  std::uint32_t mask_ = 0;
  std::uint8_t nvars_ = 0;
};

enum class OrderKind { grevlex, lex, glex };

std::string to_string(OrderKind kind);
OrderKind order_kind_from_string(const std::string& name);

/// A multiplicative total order on monomials. `precedence[0]` is the index of
/// the most significant variable.
class MonomialOrder {
public:
  MonomialOrder() = default;
  MonomialOrder(OrderKind kind, std::size_t nvars);
  MonomialOrder(OrderKind kind, std::vector<std::uint8_t> precedence);

  OrderKind kind() const noexcept { return kind_; }
  const std::vector<std::uint8_t>& precedence() const noexcept { return precedence_; }
  std::size_t size() const noexcept { return precedence_.size(); }

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const noexcept {
    switch (kind_) {
      case OrderKind::lex:
        return lex(a, b);
      case OrderKind::glex:
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        return lex(a, b);
      case OrderKind::grevlex:
      default:
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        for (auto it = precedence_.rbegin(); it != precedence_.rend(); ++it) {
          if (a[*it] != b[*it]) return a[*it] > b[*it] ? -1 : 1;
        }
        return 0;
    }
  }

  bool operator==(const MonomialOrder& o) const noexcept {
    return kind_ == o.kind_ && precedence_ == o.precedence_;
  }

private:
  int lex(const Monomial& a, const Monomial& b) const noexcept {
    for (auto v : precedence_) {
      if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
    }
    return 0;
  }

  OrderKind kind_ = OrderKind::grevlex;
  std::vector<std::uint8_t> precedence_;
};

enum class Ordering { less, equal, greater };

/// Checked comparison for the public API. Throws DomainError on a length mismatch.
Ordering compare_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& order);

}  // namespace koszul
