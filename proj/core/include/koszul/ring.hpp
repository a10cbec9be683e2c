#pragma once

#include "koszul/groebner.hpp"
#include "koszul/polynomial.hpp"

#include <memory>
#include <string>
#include <vector>

namespace koszul {

/// A finitely generated ideal. An empty generator list is the zero ideal.
struct Ideal {
  std::vector<Polynomial> generators;

  bool is_zero_ideal() const noexcept;
};

/// R = F_p[x_1..x_n] / I. Holds the reduced Gröbner basis of I so that
/// elements can be kept in normal form.
struct RingOptions {
  Limits limits{};
  /// Needed by height(); polynomial rings are always equidimensional.
  bool equidimensional = false;
};

class QuotientRing {
public:
  using Options = RingOptions;

  QuotientRing(std::shared_ptr<const PolyRing> poly, Ideal relations, Options options);
  QuotientRing(std::shared_ptr<const PolyRing> poly, Ideal relations)
      : QuotientRing(std::move(poly), std::move(relations), Options{}) {}

  static std::shared_ptr<const QuotientRing> make(std::uint64_t characteristic,
                                                  std::vector<std::string> variables,
                                                  const std::vector<std::string>& relations = {},
                                                  OrderKind order = OrderKind::grevlex, Options options = {});

  const PolyRing& poly() const noexcept { return *poly_; }
  std::shared_ptr<const PolyRing> poly_ptr() const noexcept { return poly_; }
  const PrimeField& field() const noexcept { return poly_->field(); }
  std::size_t nvars() const noexcept { return poly_->nvars(); }
  const Ideal& relations() const noexcept { return relations_; }
  const GroebnerBasis& relation_basis() const noexcept { return relation_gb_; }
  const Limits& limits() const noexcept { return options_.limits; }
  const Options& options() const noexcept { return options_; }
  /// No relations: a polynomial ring, hence regular.
  bool is_polynomial_ring() const noexcept { return relation_gb_.empty(); }
  bool equidimensional() const noexcept { return options_.equidimensional || is_polynomial_ring(); }

  /// Normal form modulo the relation ideal.
  Polynomial reduce(const Polynomial& f) const;
  /// Normal form of every component modulo the relation ideal.
  Vec reduce(const Vec& v, const ModuleOrder& order) const;
  Polynomial parse(const std::string& text) const;
  std::string to_string(const Polynomial& f) const { return poly_->to_string(f); }

private:
  std::shared_ptr<const PolyRing> poly_;
  Ideal relations_;
  Options options_;
  GroebnerBasis relation_gb_;
};

using RingPtr = std::shared_ptr<const QuotientRing>;

/// Reduced Gröbner basis of an ideal of R; relation generators are adjoined.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const QuotientRing& ring);
/// Reduced Gröbner basis of the submodule of R^rank spanned by `generators`
/// plus I * e_k for every component. `split` selects an elimination block.
GroebnerBasis buchberger(const std::vector<Vec>& generators, std::size_t rank, const QuotientRing& ring,
                         std::uint32_t split = 0, bool reduce = true);
/// Remainder modulo a basis; zero iff f is in the spanned ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);
Vec normal_form(const Vec& v, const GroebnerBasis& basis);

/// Generators of I * e_k for k < rank, in the given module order.
std::vector<Vec> relation_vectors(const QuotientRing& ring, std::size_t rank, std::uint32_t offset = 0);

}  // namespace koszul
