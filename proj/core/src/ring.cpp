#include "koszul/ring.hpp"

#include "koszul/error.hpp"
#include "koszul/expression.hpp"

namespace koszul {

bool Ideal::is_zero_ideal() const noexcept {
  for (const auto& g : generators) {
    if (!g.is_zero()) return false;
  }
  return true;
}

QuotientRing::QuotientRing(std::shared_ptr<const PolyRing> poly, Ideal relations, Options options)
    : poly_(std::move(poly)), relations_(std::move(relations)), options_(options) {
  GroebnerBuilder builder(poly_, ModuleOrder(poly_->order()), 1, options_.limits);
  for (const auto& g : relations_.generators) builder.add(to_vec(g));
  builder.run();
  relation_gb_ = builder.finish(true);
  if (relation_gb_.is_whole_module()) throw DomainError("unit relation ideal");
}

std::shared_ptr<const QuotientRing> QuotientRing::make(std::uint64_t characteristic, std::vector<std::string> variables,
                                                       const std::vector<std::string>& relations, OrderKind order,
                                                       Options options) {
  const std::size_t n = variables.size();
  auto poly = std::make_shared<const PolyRing>(PrimeField(characteristic), std::move(variables),
                                               MonomialOrder(order, n));
  Ideal rel;
  for (const auto& r : relations) rel.generators.push_back(canonical_poly(r, *poly));
  return std::make_shared<const QuotientRing>(poly, std::move(rel), options);
}

Polynomial QuotientRing::reduce(const Polynomial& f) const {
  if (relation_gb_.empty()) return f;
  return relation_gb_.normal_form(f);
}

Vec QuotientRing::reduce(const Vec& v, const ModuleOrder& order) const {
  if (relation_gb_.empty() || v.empty()) return v;
  // reduce component by component; each component is ordered by the monomial order
  std::uint32_t maxc = 0;
  for (const auto& t : v) maxc = std::max(maxc, t.comp);
  VecArith arith(*poly_, order);
  Vec raw;
  for (std::uint32_t c = 0; c <= maxc; ++c) {
    Polynomial f = component(v, c, *poly_);
    if (f.is_zero()) continue;
    Polynomial r = reduce(f);
    for (const auto& t : r.terms()) raw.push_back(VecTerm{t.mon, c, t.coeff});
  }
  return arith.normalize(std::move(raw));
}

Polynomial QuotientRing::parse(const std::string& text) const { return reduce(canonical_poly(text, *poly_)); }

std::vector<Vec> relation_vectors(const QuotientRing& ring, std::size_t rank, std::uint32_t offset) {
  std::vector<Vec> out;
  const auto& gb = ring.relation_basis();
  for (std::size_t k = 0; k < rank; ++k) {
    for (const auto& g : gb.elements()) {
      Vec v = g;
      for (auto& t : v) t.comp = static_cast<std::uint32_t>(k) + offset;
      out.push_back(std::move(v));
    }
  }
  return out;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const QuotientRing& ring) {
  std::vector<Vec> vecs;
  vecs.reserve(generators.size());
  for (const auto& g : generators) vecs.push_back(to_vec(g));
  return buchberger(vecs, 1, ring);
}

GroebnerBasis buchberger(const std::vector<Vec>& generators, std::size_t rank, const QuotientRing& ring,
                         std::uint32_t split, bool reduce) {
  ModuleOrder order(ring.poly().order(), split);
  GroebnerBuilder builder(ring.poly_ptr(), order, rank, ring.limits());
  VecArith arith(ring.poly(), order);
  // relations first: they are already a basis, which keeps the pair queue small
  for (auto& r : relation_vectors(ring, rank)) builder.add(arith.normalize(std::move(r)));
  for (const auto& g : generators) builder.add(arith.normalize(g));
  builder.run();
  return builder.finish(reduce);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) { return basis.normal_form(f); }

Vec normal_form(const Vec& v, const GroebnerBasis& basis) {
  if (basis.rank() == 0 && !v.empty()) throw DomainError("rank mismatch in normal form");
  return basis.normal_form(v);
}

}  // namespace koszul
