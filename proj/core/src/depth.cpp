#include "koszul/depth.hpp"

#include "koszul/error.hpp"
#include "koszul/functors.hpp"

#include <bit>

namespace koszul {

ExtendedNat grade(const std::vector<Polynomial>& J, const PresentedModule& M) {
  ChainComplex K = koszul_cochain(J, M);
  for (std::size_t i = 0; i <= J.size(); ++i) {
    if (!homology_subquotient(K, static_cast<int>(i)).is_zero()) return i;
  }
  return ExtendedNat::infinity();
}

DepthResult grade_via_ext(const std::vector<Polynomial>& J, const PresentedModule& M, std::size_t max_length) {
  PresentedModule quotient = PresentedModule::cyclic(M.ring_ptr(), J);
  ResolutionPrefix res = free_resolution(quotient, 0);
  for (std::size_t i = 0; i <= J.size(); ++i) {
    if (i + 1 > max_length) return DepthResult::at_least(i);
    extend_resolution(res, i);
    if (!ext_subquotient(res, M, i).is_zero()) return DepthResult{i, true};
  }
  return DepthResult{ExtendedNat::infinity(), true};
}

DepthResult local_depth(const PresentedModule& M, const PrimeEntry& p, std::size_t max_length) {
  if (vanishes_at_prime(M, p)) return DepthResult{ExtendedNat::infinity(), true};
  const std::size_t bound = p.ideal().generators.size();
  for (std::size_t i = 0; i <= bound; ++i) {
    if (i + 1 > max_length) return DepthResult::at_least(i);
    auto res = p.residue_resolution(i);
    if (!ext_subquotient(*res, M, i).vanishes_at(p)) return DepthResult{i, true};
  }
  throw DomainError("no nonvanishing Ext at '" + p.name() + "' within its generator count; is it prime?");
}

ExtendedNat local_depth_koszul(const PresentedModule& M, const PrimeEntry& p) {
  if (vanishes_at_prime(M, p)) return ExtendedNat::infinity();
  ChainComplex K = koszul_cochain(p.ideal().generators, M);
  for (std::size_t i = 0; i < K.terms(); ++i) {
    if (!homology_subquotient(K, static_cast<int>(i)).vanishes_at(p)) return i;
  }
  throw DomainError("Koszul cohomology vanishes at '" + p.name() + "' in every degree; is it prime?");
}

bool ass_member(const PrimeEntry& p, const PresentedModule& M) {
  return !hom_from_cyclic_subquotient(p.ideal().generators, M).vanishes_at(p);
}

std::optional<std::size_t> krull_dim(const std::vector<Polynomial>& J, const QuotientRing& ring) {
  GroebnerBasis gb = buchberger(J, ring);
  if (gb.is_whole_module()) return std::nullopt;
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb.elements()) supports.push_back(g.front().mon.support_mask());
  const std::size_t n = ring.nvars();
  std::size_t best = 0;
  // a variable set is independent when no leading monomial lives inside it
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= best) continue;
    bool independent = true;
    for (auto s : supports) {
      if ((s & ~mask) == 0) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

std::optional<std::size_t> krull_dim(const PresentedModule& M) {
  if (M.is_zero()) return std::nullopt;
  return krull_dim(annihilator(M).generators, M.ring());
}

std::size_t krull_dim(const QuotientRing& ring) { return *krull_dim({}, ring); }

std::size_t height(const PrimeEntry& p) {
  const QuotientRing& ring = *p.ring_ptr();
  if (!ring.equidimensional()) {
    throw DomainError("height needs a ring flagged equidimensional and catenary");
  }
  return krull_dim(ring) - *krull_dim(p.ideal().generators, ring);
}

// ---------------------------------------------------------------------------

PrimeTable::PrimeTable(RingPtr ring, std::vector<PrimeEntry> entries)
    : ring_(std::move(ring)), entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  containment_.assign(n, std::vector<bool>(n, false));
  immediate_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && entries_[i].name() == entries_[j].name()) {
        throw DomainError("duplicate prime name '" + entries_[i].name() + "'");
      }
      containment_[i][j] = i == j || entries_[i].contained_in(entries_[j]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (containment_[i][j] && containment_[j][i]) {
        throw DomainError("primes '" + entries_[i].name() + "' and '" + entries_[j].name() + "' are equal");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !containment_[i][j]) continue;
      bool between = false;
      for (std::size_t k = 0; k < n && !between; ++k) {
        between = k != i && k != j && containment_[i][k] && containment_[k][j];
      }
      immediate_[i][j] = !between;
    }
  }
}

std::size_t PrimeTable::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].name() == name) return i;
  }
  throw DomainError("unknown prime '" + name + "'");
}

std::vector<std::size_t> PrimeTable::minimal() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    bool has_below = false;
    for (std::size_t i = 0; i < entries_.size() && !has_below; ++i) has_below = i != j && containment_[i][j];
    if (!has_below) out.push_back(j);
  }
  return out;
}

bool DepthProfile::all_exact() const noexcept {
  for (const auto& e : entries) {
    if (!e.depth.exact) return false;
  }
  return true;
}

DepthProfile depth_table(const PrimeTable& table, std::size_t max_length) {
  DepthProfile profile;
  if (table.empty()) return profile;
  const RingPtr& ring = table.ring_ptr();
  PresentedModule R = PresentedModule::free(ring, 1);
  for (const auto& p : table.entries()) {
    DepthProfileEntry e;
    e.prime = p.name();
    e.depth = local_depth(R, p, max_length);
    e.grade = grade(p.ideal().generators, R);
    if (ring->equidimensional()) e.height = height(p);
    if (e.depth.exact && e.grade > e.depth.value) {
      throw DomainError("grade exceeds depth at '" + p.name() + "'; is it prime?");
    }
    if (e.height && e.depth.exact && e.depth.value > ExtendedNat(*e.height)) {
      throw DomainError("depth exceeds height at '" + p.name() + "'; is it prime?");
    }
    profile.entries.push_back(std::move(e));
  }
  return profile;
}

}  // namespace koszul
