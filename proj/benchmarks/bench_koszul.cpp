#include "koszul/depth.hpp"
#include "koszul/functors.hpp"
#include "koszul/matrix.hpp"
#include "koszul/ring.hpp"
#include "koszul/torpairs.hpp"

#include <benchmark/benchmark.h>

using namespace koszul;

namespace {

RingPtr ring(std::vector<std::string> vars, const std::vector<std::string>& rels = {}) {
  return QuotientRing::make(32003, std::move(vars), rels);
}

std::vector<Polynomial> polys(const RingPtr& R, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(R->parse(t));
  return out;
}

PrimeTable table(const RingPtr& R, const std::vector<std::pair<std::string, std::vector<std::string>>>& entries) {
  std::vector<PrimeEntry> primes;
  for (const auto& [name, gens] : entries) {
    primes.push_back(gens.empty() ? PrimeEntry(name, R, Ideal{}, true) : PrimeEntry(name, R, Ideal{polys(R, gens)}));
  }
  return PrimeTable(R, std::move(primes));
}

const std::vector<std::string> kGlued{"x*u", "x*v", "y*u", "y*v", "z*u", "z*v"};

void BM_GroebnerCyclic(benchmark::State& state) {
  // cyclic-n style system in n variables
  const int n = static_cast<int>(state.range(0));
  std::vector<std::string> vars;
  for (int i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i));
  auto R = ring(vars);
  std::vector<std::string> gens;
  for (int d = 1; d < n; ++d) {
    std::string f;
    for (int i = 0; i < n; ++i) {
      std::string term;
      for (int k = 0; k < d; ++k) term += (k ? "*" : "") + vars[(i + k) % n];
      f += (i ? " + " : "") + term;
    }
    gens.push_back(f);
  }
  std::string prod;
  for (int i = 0; i < n; ++i) prod += (i ? "*" : "") + vars[i];
  gens.push_back(prod + " - 1");
  const auto system = polys(R, gens);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(system, *R));
}
BENCHMARK(BM_GroebnerCyclic)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ResolutionResidueField(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<std::string> vars;
  for (int i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i));
  auto R = ring(vars);
  auto k = PresentedModule::cyclic(R, polys(R, vars));
  for (auto _ : state) benchmark::DoNotOptimize(free_resolution(k, static_cast<std::size_t>(n) + 1));
}
BENCHMARK(BM_ResolutionResidueField)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_LocalDepthGlued(benchmark::State& state) {
  auto R = ring({"x", "y", "z", "u", "v"}, kGlued);
  auto t = table(R, {{"(x,y,z)", {"x", "y", "z"}}, {"(x,y,u,v)", {"x", "y", "u", "v"}}, {"m", {"x", "y", "z", "u", "v"}}});
  for (auto _ : state) benchmark::DoNotOptimize(depth_table(t));
}
BENCHMARK(BM_LocalDepthGlued)->Unit(benchmark::kMillisecond);

void BM_TorOracleAllPhi(benchmark::State& state) {
  auto R = ring({"x", "y"});
  auto t = table(R, {{"(0)", {}}, {"(x)", {"x"}}, {"(y)", {"y"}}, {"m", {"x", "y"}}});
  const auto profile = depth_table(t);
  const std::vector<PresentedModule> modules{PresentedModule::free(R, 1), PresentedModule::cyclic(R, polys(R, {"x"})),
                                             PresentedModule::cyclic(R, polys(R, {"x", "y"}))};
  for (auto _ : state) {
    for (const auto& phi : enumerate_phi(profile, t)) {
      for (const auto& M : modules) benchmark::DoNotOptimize(tor_oracle_membership(M, phi, t));
    }
  }
}
BENCHMARK(BM_TorOracleAllPhi)->Unit(benchmark::kMillisecond);

void BM_RoundTrip(benchmark::State& state) {
  auto R = ring({"x", "y", "z"});
  auto t = table(R, {{"(0)", {}}, {"(x)", {"x"}}, {"(x,y)", {"x", "y"}}, {"m", {"x", "y", "z"}}});
  const auto profile = depth_table(t);
  const auto phis = enumerate_phi(profile, t);
  for (auto _ : state) {
    for (const auto& phi : phis) benchmark::DoNotOptimize(recover_phi(as_inputs(generator_set(phi, t)), t));
  }
  state.counters["functions"] = static_cast<double>(phis.size());
}
BENCHMARK(BM_RoundTrip)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
