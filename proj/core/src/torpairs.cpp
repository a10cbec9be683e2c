#include "koszul/torpairs.hpp"

#include "koszul/error.hpp"
#include "koszul/functors.hpp"

#include <algorithm>
#include <set>

namespace koszul {

std::string to_string(Truth t) {
  switch (t) {
    case Truth::yes: return "yes";
    case Truth::no: return "no";
    case Truth::unknown: return "unknown";
  }
  return "unknown";
}

std::size_t PhiFunction::max() const noexcept {
  std::size_t m = 0;
  for (auto v : values) m = std::max(m, v);
  return m;
}

PhiFunction PhiFunction::from_map(const PrimeTable& table, const std::map<std::string, std::size_t>& values) {
  PhiFunction phi = zero(table.size());
  std::vector<bool> seen(table.size(), false);
  for (const auto& [name, v] : values) {
    std::size_t i = table.index_of(name);
    phi.values[i] = v;
    seen[i] = true;
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!seen[i]) throw DomainError("phi has no value for prime '" + table[i].name() + "'");
  }
  return phi;
}

std::map<std::string, std::size_t> PhiFunction::to_map(const PrimeTable& table) const {
  if (values.size() != table.size()) throw DomainError("phi and prime table differ in size");
  std::map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < values.size(); ++i) out[table[i].name()] = values[i];
  return out;
}

std::string PhiFunction::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(values[i]);
  }
  return s + ")";
}

std::vector<PhiViolation> validate_phi(PhiFunction& phi, const DepthProfile& profile) {
  if (phi.size() != profile.size()) throw DomainError("phi and depth profile cover different tables");
  std::vector<PhiViolation> out;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const auto& d = profile.entries[i].depth;
    if (ExtendedNat(phi[i]) > d.value) {
      out.push_back(PhiViolation{profile.entries[i].prime, phi[i], d});
    }
  }
  phi.validated = out.empty();
  return out;
}

namespace {

void require_validated(const PhiFunction& phi, const PrimeTable& table) {
  if (phi.size() != table.size()) throw DomainError("phi and prime table differ in size");
  if (!phi.validated) throw DomainError("phi has not been validated against the depth profile");
}

// Decides depth M_p >= need by checking Ext^i(R/p, M)_p = 0 for i < need.
MembershipVerdict depth_at_least(const PresentedModule& M, const PrimeEntry& p, std::size_t need,
                                 std::size_t max_length) {
  if (need == 0 || vanishes_at_prime(M, p)) return {};
  for (std::size_t i = 0; i < need; ++i) {
    if (i + 1 > max_length) {
      return MembershipVerdict{Truth::unknown,
                               Witness{p.name(), i, "resolution budget exhausted before Ext^" + std::to_string(i)}};
    }
    auto res = p.residue_resolution(i);
    if (!ext_subquotient(*res, M, i).vanishes_at(p)) {
      return MembershipVerdict{Truth::no, Witness{p.name(), i,
                                                  "depth " + std::to_string(i) + " < " + std::to_string(need) +
                                                      ": Ext^" + std::to_string(i) + " survives localization"}};
    }
  }
  return {};
}

// Folds per-prime verdicts: any determinate failure wins, then any unknown.
void merge(MembershipVerdict& acc, MembershipVerdict next) {
  if (acc.truth == Truth::no) return;
  if (next.truth == Truth::no || (next.truth == Truth::unknown && acc.truth == Truth::yes)) acc = std::move(next);
}

bool tor_vanishes_at(const ResolutionPrefix& res, const PresentedModule& N, std::size_t j, const PrimeEntry& p) {
  return tor_subquotient(res, N, j).vanishes_at(p);
}

}  // namespace

MembershipVerdict class_membership(const PresentedModule& M, const PhiFunction& phi, const PrimeTable& table,
                                   std::size_t shift, std::size_t max_length) {
  require_validated(phi, table);
  MembershipVerdict verdict;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (phi[i] <= shift) continue;
    merge(verdict, depth_at_least(M, table[i], phi[i] - shift, max_length));
    if (verdict.truth == Truth::no) break;
  }
  return verdict;
}

std::vector<GeneratorSpec> generator_set(const PhiFunction& phi, const PrimeTable& table, std::size_t max_length) {
  require_validated(phi, table);
  std::vector<GeneratorSpec> out;
  PresentedModule R = PresentedModule::free(table.ring_ptr(), 1);
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (phi[i] == 0) continue;
    PresentedModule S = cocycle_module(table[i].ideal().generators, R, phi[i]);
    auto res = std::make_shared<const ResolutionPrefix>(
        free_resolution(S, std::min(phi[i] + 1, max_length), max_length));
    out.push_back(GeneratorSpec{i, table[i], phi[i], std::move(S), true, std::move(res)});
  }
  return out;
}

MembershipVerdict tor_oracle_membership(const PresentedModule& M, const std::vector<GeneratorSpec>& generators) {
  MembershipVerdict verdict;
  for (const auto& g : generators) {
    if (vanishes_at_prime(M, g.prime)) continue;
    for (std::size_t j = 1; j <= g.level; ++j) {
      if (!g.resolution->knows(j + 1)) {
        merge(verdict, MembershipVerdict{Truth::unknown,
                                         Witness{g.prime.name(), j, "resolution budget exhausted before Tor_" +
                                                                        std::to_string(j)}});
        break;
      }
      if (!tor_vanishes_at(*g.resolution, M, j, g.prime)) {
        merge(verdict, MembershipVerdict{Truth::no, Witness{g.prime.name(), j,
                                                            "Tor_" + std::to_string(j) + "(S_" +
                                                                std::to_string(g.level) + ", M) survives localization"}});
        break;
      }
    }
    if (verdict.truth == Truth::no) break;
  }
  return verdict;
}

MembershipVerdict tor_oracle_membership(const PresentedModule& M, const PhiFunction& phi, const PrimeTable& table,
                                        std::size_t max_length) {
  return tor_oracle_membership(M, generator_set(phi, table, max_length));
}

std::vector<GeneratorInput> as_inputs(const std::vector<GeneratorSpec>& generators) {
  std::vector<GeneratorInput> out;
  for (const auto& g : generators) {
    out.push_back(GeneratorInput{g.module, g.localized ? std::optional<std::size_t>(g.index) : std::nullopt, g.level});
  }
  return out;
}

namespace {

// Resolution of G long enough to read off Tor_j for j <= bound, plus the bound.
struct CertifiedGenerator {
  ResolutionPrefix resolution;
  std::size_t bound = 0;
  std::optional<std::size_t> localize_at;
};

std::optional<CertifiedGenerator> certify(const GeneratorInput& in, const PrimeTable& table, std::size_t max_length,
                                          std::size_t index) {
  const std::string which = "generator " + std::to_string(index);
  if (!in.localize_at) {
    // Flat dimension of a global module needs a complete resolution; without
    // a finite bound on its length the search stops past the variable count.
    const std::size_t cap = std::min(max_length, in.module.ring().nvars() + 2);
    ResolutionPrefix res = free_resolution(in.module, cap, cap);
    if (!res.complete) {
      throw DomainError(which + ": no complete resolution within length " + std::to_string(cap) +
                        "; cannot certify finite flat dimension");
    }
    const std::size_t len = res.length();
    return CertifiedGenerator{std::move(res), len, std::nullopt};
  }
  const std::size_t q = *in.localize_at;
  if (q >= table.size()) throw DomainError(which + ": localization prime out of range");
  const PrimeEntry& prime = table[q];
  if (vanishes_at_prime(in.module, prime)) return std::nullopt;
  PresentedModule residue = PresentedModule::cyclic(table.ring_ptr(), prime.ideal().generators);
  ResolutionPrefix res = free_resolution(in.module, 0, max_length);
  auto tor_vanishes = [&](std::size_t j) {
    if (j + 1 > max_length) {
      throw DomainError(which + ": resolution budget exhausted before Tor_" + std::to_string(j) +
                        "; cannot certify finite flat dimension");
    }
    extend_resolution(res, j + 1, max_length);
    return tor_vanishes_at(res, residue, j, prime);
  };
  if (in.flat_bound) {
    if (!tor_vanishes(*in.flat_bound + 1)) {
      throw DomainError(which + ": Tor_" + std::to_string(*in.flat_bound + 1) + " against the residue field at '" +
                        prime.name() + "' is nonzero; flat dimension bound " + std::to_string(*in.flat_bound) +
                        " fails");
    }
    return CertifiedGenerator{std::move(res), *in.flat_bound, q};
  }
  // Over the local ring at q the first vanishing Tor against the residue
  // field bounds the projective dimension.
  for (std::size_t j = 1;; ++j) {
    if (tor_vanishes(j)) return CertifiedGenerator{std::move(res), j - 1, q};
  }
}

}  // namespace

PhiFunction recover_phi(const std::vector<GeneratorInput>& generators, const PrimeTable& table,
                        std::size_t max_length) {
  PhiFunction phi = PhiFunction::zero(table.size());
  std::vector<PresentedModule> residues;
  for (const auto& p : table.entries()) residues.push_back(PresentedModule::cyclic(table.ring_ptr(), p.ideal().generators));
  for (std::size_t g = 0; g < generators.size(); ++g) {
    auto cert = certify(generators[g], table, max_length, g);
    if (!cert) continue;
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (cert->localize_at && !table.contained(i, *cert->localize_at)) continue;
      for (std::size_t j = std::min(cert->bound, cert->resolution.complete ? cert->bound : cert->resolution.length());
           j > phi[i]; --j) {
        if (!tor_vanishes_at(cert->resolution, residues[i], j, table[i])) {
          phi.values[i] = j;
          break;
        }
      }
    }
  }
  return phi;
}

bool is_order_preserving(const PhiFunction& phi, const PrimeTable& table) {
  if (phi.size() != table.size()) throw DomainError("phi and prime table differ in size");
  for (std::size_t q = 0; q < table.size(); ++q) {
    for (std::size_t p = 0; p < table.size(); ++p) {
      if (table.contained(q, p) && phi[q] > phi[p]) return false;
    }
  }
  return true;
}

bool cotilting_check(PhiFunction& phi, const PrimeTable& table, const DepthProfile& profile) {
  return validate_phi(phi, profile).empty() && is_order_preserving(phi, table);
}

namespace {

void require_regular(const PrimeTable& table) {
  if (!table.ring_ptr() || !table.ring_ptr()->is_polynomial_ring()) throw DomainError("ring not regular");
}

}  // namespace

PhiFunction regular_dual(const PhiFunction& phi, const PrimeTable& table) {
  require_regular(table);
  if (phi.size() != table.size()) throw DomainError("phi and prime table differ in size");
  PhiFunction psi = PhiFunction::zero(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    const std::size_t h = height(table[i]);
    if (phi[i] > h) {
      throw DomainError("phi exceeds the height at '" + table[i].name() + "'");
    }
    psi.values[i] = h - phi[i];
  }
  // height equals depth at every prime of a regular ring
  psi.validated = true;
  return psi;
}

bool both_definable_check(const PhiFunction& phi, const PrimeTable& table) {
  require_regular(table);
  if (phi.size() != table.size()) throw DomainError("phi and prime table differ in size");
  for (auto i : table.minimal()) {
    if (phi[i] != 0) return false;
  }
  for (std::size_t q = 0; q < table.size(); ++q) {
    for (std::size_t p = 0; p < table.size(); ++p) {
      if (!table.immediate(q, p)) continue;
      if (phi[p] < phi[q] || phi[p] - phi[q] > 1) return false;
    }
  }
  return true;
}

AlmostCmVerdict almost_cm_check(const DepthProfile& profile) {
  AlmostCmVerdict v;
  for (const auto& e : profile.entries) {
    if (e.depth.exact) {
      if (!(e.depth.value == e.grade)) v.witnesses.push_back(e.prime);
    } else if (e.grade < e.depth.value) {
      // grade < lower bound <= depth
      v.witnesses.push_back(e.prime);
    } else {
      v.undecided.push_back(e.prime);
    }
  }
  v.truth = !v.witnesses.empty() ? Truth::no : (!v.undecided.empty() ? Truth::unknown : Truth::yes);
  return v;
}

RfdResult rfd(const PresentedModule& M, const PrimeTable& table, const DepthProfile& profile,
              std::size_t max_length) {
  if (profile.size() != table.size()) throw DomainError("depth profile and prime table differ in size");
  RfdResult out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (vanishes_at_prime(M, table[i])) continue;
    const DepthResult& dp = profile.entries[i].depth;
    const DepthResult dm = local_depth(M, table[i], max_length);
    if (!dp.exact || !dm.exact) {
      out.exact = false;
      continue;
    }
    const std::size_t gap = dp.value.value() > dm.value.value() ? dp.value.value() - dm.value.value() : 0;
    if (gap > out.value || (gap == out.value && !out.prime)) {
      out.value = gap;
      out.prime = table[i].name();
    }
  }
  return out;
}

RfdSmallResult rfd_small_lower(const PresentedModule& M, const std::vector<PresentedModule>& testset,
                               std::size_t max_length) {
  RfdSmallResult out;
  for (std::size_t t = 0; t < testset.size(); ++t) {
    const PresentedModule& F = testset[t];
    const std::size_t cap = std::min(max_length, F.ring().nvars() + 2);
    ResolutionPrefix res = free_resolution(F, cap, cap);
    if (!res.complete) {
      out.skipped.push_back(t);
      continue;
    }
    for (std::size_t j = res.length(); j > out.value; --j) {
      if (!tor_subquotient(res, M, j).is_zero()) {
        out.value = j;
        break;
      }
    }
  }
  return out;
}

PhiFilter phi_filter_from_string(const std::string& s) {
  if (s == "none") return PhiFilter::none;
  if (s == "order-preserving") return PhiFilter::order_preserving;
  if (s == "both-definable") return PhiFilter::both_definable;
  throw DomainError("unknown filter '" + s + "' (expected none, order-preserving or both-definable)");
}

std::string to_string(PhiFilter f) {
  switch (f) {
    case PhiFilter::none: return "none";
    case PhiFilter::order_preserving: return "order-preserving";
    case PhiFilter::both_definable: return "both-definable";
  }
  return "none";
}

std::vector<PhiFunction> enumerate_phi(const DepthProfile& profile, const PrimeTable& table, PhiFilter filter,
                                       bool allow_large) {
  if (profile.size() != table.size()) throw DomainError("depth profile and prime table differ in size");
  if (filter == PhiFilter::both_definable) require_regular(table);
  std::vector<std::size_t> bounds;
  std::size_t count = 1;
  for (const auto& e : profile.entries) {
    if (!e.depth.exact || e.depth.value.is_infinite()) {
      throw DomainError("enumeration needs a finite exact depth at '" + e.prime + "'");
    }
    bounds.push_back(e.depth.value.value());
    const std::size_t factor = bounds.back() + 1;
    if (count > kEnumerationGuard / factor + 1) {
      count = kEnumerationGuard + 1;
    } else {
      count *= factor;
    }
  }
  if (count > kEnumerationGuard && !allow_large) {
    throw DomainError("enumeration would visit more than " + std::to_string(kEnumerationGuard) +
                      " functions; pass the large-enumeration flag to proceed");
  }
  std::vector<PhiFunction> out;
  PhiFunction phi = PhiFunction::zero(bounds.size());
  phi.validated = true;
  for (;;) {
    bool keep = true;
    if (filter == PhiFilter::order_preserving) keep = is_order_preserving(phi, table);
    if (filter == PhiFilter::both_definable) keep = both_definable_check(phi, table);
    if (keep) out.push_back(phi);
    std::size_t k = bounds.size();
    while (k > 0 && phi.values[k - 1] == bounds[k - 1]) phi.values[--k] = 0;
    if (k == 0) break;
    ++phi.values[k - 1];
  }
  return out;
}

SubsetChain sequence_view(const PhiFunction& phi) {
  SubsetChain chain;
  for (std::size_t n = 0; n <= phi.max(); ++n) {
    std::vector<std::size_t> level;
    for (std::size_t i = 0; i < phi.size(); ++i) {
      if (phi[i] <= n) level.push_back(i);
    }
    chain.levels.push_back(std::move(level));
  }
  return chain;
}

ClassificationReport classify(PhiFunction phi, const PrimeTable& table, const DepthProfile& profile,
                              const std::vector<std::pair<std::string, PresentedModule>>& modules,
                              std::size_t max_length) {
  ClassificationReport report;
  report.violations = validate_phi(phi, profile);
  report.order_preserving = is_order_preserving(phi, table);
  report.cotilting = phi.validated && report.order_preserving;
  report.almost_cm = almost_cm_check(profile);
  const bool regular = table.ring_ptr() && table.ring_ptr()->is_polynomial_ring();
  if (regular) report.both_definable = both_definable_check(phi, table);
  if (phi.validated) {
    if (regular) report.dual = regular_dual(phi, table);
    report.chain = sequence_view(phi);
    auto generators = generator_set(phi, table, max_length);
    for (const auto& [name, M] : modules) {
      report.modules.push_back(ModuleClassification{name, class_membership(M, phi, table, 0, max_length),
                                                    tor_oracle_membership(M, generators)});
    }
  }
  report.phi = std::move(phi);
  return report;
}

}  // namespace koszul
