#include "koszul/polynomial.hpp"

#include "koszul/error.hpp"

#include <algorithm>
#include <sstream>

namespace koszul {

std::uint32_t Polynomial::degree() const noexcept {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mon.degree());
  return d;
}

PolyRing::PolyRing(PrimeField field, std::vector<std::string> variables, MonomialOrder order)
    : field_(field), vars_(std::move(variables)), order_(std::move(order)) {
  if (vars_.size() > kMaxVariables) {
    throw DomainError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  if (order_.size() != vars_.size()) throw DomainError("monomial order does not match variable count");
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (std::size_t j = i + 1; j < vars_.size(); ++j) {
      if (vars_[i] == vars_[j]) throw DomainError("duplicate variable '" + vars_[i] + "'");
    }
  }
}

int PolyRing::variable_index(const std::string& name) const noexcept {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

Polynomial PolyRing::constant(std::int64_t c) const {
  Coeff v = field_.from_int(c);
  if (v == 0) return {};
  return Polynomial({Term{Monomial(nvars()), v}});
}

Polynomial PolyRing::variable(std::size_t i) const {
  return Polynomial({Term{Monomial::variable(nvars(), i), 1}});
}

Polynomial PolyRing::monomial(const Monomial& m, Coeff c) const {
  c %= field_.characteristic();
  if (c == 0) return {};
  return Polynomial({Term{m, c}});
}

Polynomial PolyRing::from_terms(std::vector<Term> terms) const {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order_.compare(a.mon, b.mon) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    Coeff c = t.coeff % field_.characteristic();
    if (!out.empty() && out.back().mon == t.mon) {
      out.back().coeff = field_.add(out.back().coeff, c);
      if (out.back().coeff == 0) out.pop_back();
    } else if (c != 0) {
      out.push_back(Term{t.mon, c});
    }
  }
  return Polynomial(std::move(out));
}

Polynomial PolyRing::add(const Polynomial& a, const Polynomial& b) const {
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    int c = order_.compare(x[i].mon, y[j].mon);
    if (c > 0) {
      out.push_back(x[i++]);
    } else if (c < 0) {
      out.push_back(y[j++]);
    } else {
      Coeff s = field_.add(x[i].coeff, y[j].coeff);
      if (s) out.push_back(Term{x[i].mon, s});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), x.begin() + i, x.end());
  out.insert(out.end(), y.begin() + j, y.end());
  return Polynomial(std::move(out));
}

Polynomial PolyRing::neg(const Polynomial& a) const {
  std::vector<Term> out = a.terms();
  for (auto& t : out) t.coeff = field_.neg(t.coeff);
  return Polynomial(std::move(out));
}

Polynomial PolyRing::sub(const Polynomial& a, const Polynomial& b) const { return add(a, neg(b)); }

Polynomial PolyRing::scale(const Polynomial& a, Coeff c) const {
  c %= field_.characteristic();
  if (c == 0) return {};
  std::vector<Term> out = a.terms();
  for (auto& t : out) t.coeff = field_.mul(t.coeff, c);
  return Polynomial(std::move(out));
}

Polynomial PolyRing::mul_term(const Polynomial& a, const Monomial& m, Coeff c) const {
  c %= field_.characteristic();
  if (c == 0) return {};
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) out.push_back(Term{t.mon * m, field_.mul(t.coeff, c)});
  return Polynomial(std::move(out));
}

Polynomial PolyRing::mul(const Polynomial& a, const Polynomial& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Term> raw;
  raw.reserve(a.size() * b.size());
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) raw.push_back(Term{s.mon * t.mon, field_.mul(s.coeff, t.coeff)});
  }
  return from_terms(std::move(raw));
}

Polynomial PolyRing::pow(const Polynomial& a, unsigned e) const {
  Polynomial result = one();
  Polynomial base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

Polynomial PolyRing::monic(const Polynomial& a) const {
  if (a.is_zero()) return a;
  return scale(a, field_.inv(a.leading().coeff));
}

std::string PolyRing::to_string(const Monomial& m) const {
  std::string s;
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += vars_[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string PolyRing::to_string(const Polynomial& f) const {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::int64_t c = field_.to_signed(t.coeff);
    bool negative = c < 0;
    std::int64_t mag = negative ? -c : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (t.mon.is_one()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << to_string(t.mon);
    }
  }
  return os.str();
}

}  // namespace koszul
