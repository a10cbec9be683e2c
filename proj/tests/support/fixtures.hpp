#pragma once

#include "koszul/depth.hpp"
#include "koszul/module.hpp"
#include "koszul/prime.hpp"
#include "koszul/ring.hpp"

#include <string>
#include <vector>

namespace fixtures {

using namespace koszul;

inline RingPtr ring(std::vector<std::string> vars, const std::vector<std::string>& relations = {}) {
  return QuotientRing::make(101, std::move(vars), relations);
}

inline std::vector<Polynomial> polys(const RingPtr& R, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(R->parse(t));
  return out;
}

inline PresentedModule cyclic(const RingPtr& R, const std::vector<std::string>& ideal) {
  return PresentedModule::cyclic(R, polys(R, ideal));
}

/// Presentation from relation vectors, one inner list per relation.
inline PresentedModule module(const RingPtr& R, std::size_t rank, const std::vector<std::vector<std::string>>& relations) {
  Matrix B(R, rank, relations.size());
  for (std::size_t c = 0; c < relations.size(); ++c) {
    for (std::size_t r = 0; r < rank; ++r) B.set(r, c, R->parse(relations[c].at(r)));
  }
  return PresentedModule(R, rank, B);
}

inline PrimeEntry prime(const RingPtr& R, const std::string& name, const std::vector<std::string>& gens) {
  if (gens.empty()) return PrimeEntry(name, R, Ideal{}, true);
  return PrimeEntry(name, R, Ideal{polys(R, gens)});
}

inline PrimeTable table(const RingPtr& R, const std::vector<std::pair<std::string, std::vector<std::string>>>& entries) {
  std::vector<PrimeEntry> primes;
  for (const auto& [name, gens] : entries) primes.push_back(prime(R, name, gens));
  return PrimeTable(R, std::move(primes));
}

}  // namespace fixtures
