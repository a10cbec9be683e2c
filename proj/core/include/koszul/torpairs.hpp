#pragma once

#include "koszul/depth.hpp"
#include "koszul/module.hpp"
#include "koszul/resolution.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace koszul {

/// Outcome of a check that may run out of resolution budget.
enum class Truth { yes, no, unknown };
std::string to_string(Truth t);

/// φ on a prime table, stored positionally (values[i] belongs to table[i]).
struct PhiFunction {
  std::vector<std::size_t> values;
  /// Set by validate_phi once φ <= depth has been confirmed.
  bool validated = false;

  std::size_t size() const noexcept { return values.size(); }
  std::size_t operator[](std::size_t i) const { return values.at(i); }
  std::size_t max() const noexcept;
  bool operator==(const PhiFunction& o) const { return values == o.values; }

  static PhiFunction zero(std::size_t n) { return PhiFunction{std::vector<std::size_t>(n, 0), false}; }
  /// From a name -> value map; every table entry must be named exactly once.
  static PhiFunction from_map(const PrimeTable& table, const std::map<std::string, std::size_t>& values);
  std::map<std::string, std::size_t> to_map(const PrimeTable& table) const;
  /// "(a,b,c)" in table order.
  std::string to_string() const;
};

struct PhiViolation {
  std::string prime;
  std::size_t phi = 0;
  DepthResult depth;
};

/// Every entry with φ(p) > depth(p). Sets phi.validated when the list is
/// empty. A budget-limited depth that cannot decide the comparison is listed.
std::vector<PhiViolation> validate_phi(PhiFunction& phi, const DepthProfile& profile);

/// Where a membership verdict failed (or could not be decided).
struct Witness {
  std::string prime;
  /// Ext degree for depth checks, Tor degree for the oracle.
  std::size_t index = 0;
  std::string detail;
};

struct MembershipVerdict {
  Truth truth = Truth::yes;
  /// Set whenever truth is not yes.
  std::optional<Witness> witness;
};

/// M ∈ C_(i): depth M_p >= φ(p) - i at every table entry.
MembershipVerdict class_membership(const PresentedModule& M, const PhiFunction& phi, const PrimeTable& table,
                                   std::size_t shift = 0, std::size_t max_length = kUnbounded);

/// One generator S_k(p;R) with k = φ(p) > 0, tested after localizing at p.
struct GeneratorSpec {
  /// Table index of p.
  std::size_t index = 0;
  PrimeEntry prime;
  std::size_t level = 0;
  PresentedModule module;
  bool localized = true;
  /// Resolution of `module` to level + 1 maps (or as far as the budget allows).
  std::shared_ptr<const ResolutionPrefix> resolution;
};

std::vector<GeneratorSpec> generator_set(const PhiFunction& phi, const PrimeTable& table,
                                         std::size_t max_length = kUnbounded);

/// M is Tor-orthogonal to every generator: Tor_j(S_k(p;R), M)_p = 0 for 1 <= j <= k.
MembershipVerdict tor_oracle_membership(const PresentedModule& M, const std::vector<GeneratorSpec>& generators);
MembershipVerdict tor_oracle_membership(const PresentedModule& M, const PhiFunction& phi, const PrimeTable& table,
                                        std::size_t max_length = kUnbounded);

/// A generator handed to recover_phi. With `localize_at` set the generator
/// stands for G_q and only sees primes inside q. `flat_bound` is certified,
/// never trusted; without it the bound is searched for.
struct GeneratorInput {
  PresentedModule module;
  std::optional<std::size_t> localize_at;
  std::optional<std::size_t> flat_bound;
};

std::vector<GeneratorInput> as_inputs(const std::vector<GeneratorSpec>& generators);

/// φ(p) = max j with Tor_j(G, R/p) nonvanishing at p over the generators.
/// Throws DomainError when a generator's finite flat dimension cannot be
/// certified within the budget.
PhiFunction recover_phi(const std::vector<GeneratorInput>& generators, const PrimeTable& table,
                        std::size_t max_length = kUnbounded);

/// φ(q) <= φ(p) whenever q ⊆ p in the table.
bool is_order_preserving(const PhiFunction& phi, const PrimeTable& table);
/// validate_phi and is_order_preserving together.
bool cotilting_check(PhiFunction& phi, const PrimeTable& table, const DepthProfile& profile);

/// ψ(p) = height(p) - φ(p). Polynomial rings only.
PhiFunction regular_dual(const PhiFunction& phi, const PrimeTable& table);

/// φ vanishes on table-minimal entries and climbs by 0 or 1 along
/// table-immediate inclusions. Polynomial rings only.
bool both_definable_check(const PhiFunction& phi, const PrimeTable& table);

struct AlmostCmVerdict {
  Truth truth = Truth::yes;
  /// Primes where grade and depth differ.
  std::vector<std::string> witnesses;
  /// Primes whose depth is only a lower bound and may still differ.
  std::vector<std::string> undecided;
};

AlmostCmVerdict almost_cm_check(const DepthProfile& profile);

struct RfdResult {
  std::size_t value = 0;
  bool exact = true;
  /// Entry realizing the maximum, if any.
  std::optional<std::string> prime;
};

/// max over table primes with M_p ≠ 0 of depth(p) - depth M_p, clamped at 0.
RfdResult rfd(const PresentedModule& M, const PrimeTable& table, const DepthProfile& profile,
              std::size_t max_length = kUnbounded);

struct RfdSmallResult {
  std::size_t value = 0;
  /// Test modules dropped because no complete resolution was found.
  std::vector<std::size_t> skipped;
};

/// max j with Tor_j(F, M) ≠ 0 over test modules F with complete resolutions.
RfdSmallResult rfd_small_lower(const PresentedModule& M, const std::vector<PresentedModule>& testset,
                               std::size_t max_length = kUnbounded);

enum class PhiFilter { none, order_preserving, both_definable };
PhiFilter phi_filter_from_string(const std::string& s);
std::string to_string(PhiFilter f);

inline constexpr std::size_t kEnumerationGuard = 10'000'000;

/// Every φ with 0 <= φ <= depth on the table, filtered, in lexicographic
/// order. The results come back validated.
std::vector<PhiFunction> enumerate_phi(const DepthProfile& profile, const PrimeTable& table,
                                       PhiFilter filter = PhiFilter::none, bool allow_large = false);

/// X_n = { p : φ(p) <= n } for n = 0..max φ, as table indices.
struct SubsetChain {
  std::vector<std::vector<std::size_t>> levels;
};

SubsetChain sequence_view(const PhiFunction& phi);

struct ModuleClassification {
  std::string module;
  MembershipVerdict membership;
  MembershipVerdict oracle;
};

struct ClassificationReport {
  PhiFunction phi;
  std::vector<PhiViolation> violations;
  std::vector<ModuleClassification> modules;
  bool order_preserving = false;
  bool cotilting = false;
  std::optional<bool> both_definable;
  AlmostCmVerdict almost_cm;
  std::optional<PhiFunction> dual;
  SubsetChain chain;
};

ClassificationReport classify(PhiFunction phi, const PrimeTable& table, const DepthProfile& profile,
                              const std::vector<std::pair<std::string, PresentedModule>>& modules,
                              std::size_t max_length = kUnbounded);

}  // namespace koszul
