#include "koszul/prime.hpp"

#include "koszul/error.hpp"
#include "koszul/module.hpp"
#include "koszul/resolution.hpp"

namespace koszul {

PrimeEntry::PrimeEntry(std::string name, RingPtr ring, Ideal generators, bool zero_ideal)
    : name_(std::move(name)), ring_(std::move(ring)), ideal_(std::move(generators)), zero_ideal_(zero_ideal),
      cache_(std::make_shared<Cache>()) {
  for (auto& g : ideal_.generators) g = ring_->reduce(g);
  if (zero_ideal_ && !ideal_.is_zero_ideal()) {
    throw DomainError("prime '" + name_ + "' is marked zero_ideal but has nonzero generators");
  }
  basis_ = buchberger(ideal_.generators, *ring_);
  if (basis_.is_whole_module()) throw DomainError("prime '" + name_ + "' is the unit ideal");
}

bool PrimeEntry::contains(const Polynomial& f) const { return basis_.normal_form(f).is_zero(); }

bool PrimeEntry::contains(const std::vector<Polynomial>& generators) const {
  for (const auto& g : generators) {
    if (!contains(g)) return false;
  }
  return true;
}

std::shared_ptr<const ResolutionPrefix> PrimeEntry::residue_resolution(std::size_t length) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto& res = cache_->resolution;
  if (res && (res->complete || res->length() >= length)) return res;
  ResolutionPrefix next = res ? *res : free_resolution(PresentedModule::cyclic(ring_, ideal_.generators), 0);
  extend_resolution(next, length);
  res = std::make_shared<const ResolutionPrefix>(std::move(next));
  return res;
}

}  // namespace koszul
