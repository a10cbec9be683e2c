#pragma once

// Dense linear algebra on graded pieces, written without any of the
// library's Gröbner machinery. Used as the independent side of every
// numeric expectation in the test suites.
//
// Localization at a monomial prime p = (x_v : v in V) is modelled by
// setting the remaining variables to 1. For multigraded data (monomial
// ring relations, monomial presentation entries) a homology module H has
// a monomial annihilator, so H_p = 0 exactly when H[x_W^-1] = 0, and the
// latter is the homology of the dehomogenized complex.

#include "koszul/module.hpp"
#include "koszul/polynomial.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace oracle {

using Exps = std::vector<int>;

/// Sparse polynomial: exponent vector -> coefficient mod p.
struct OPoly {
  std::map<Exps, std::uint64_t> terms;

  bool zero() const { return terms.empty(); }
  /// Total degree of the (assumed homogeneous) polynomial.
  int degree() const;
};

OPoly from_library(const koszul::Polynomial& f);
OPoly monomial(const Exps& e, std::uint64_t c = 1);

/// A graded free module together with relation vectors; the module is the
/// quotient of the free module by the relations and the ring ideal.
struct Term {
  std::vector<int> shifts;
  std::vector<std::vector<OPoly>> relations;
};

/// Chain complex C_0 <- C_1 <- ... with d[i]: terms[i+1] -> terms[i], stored
/// row-major as d[i][row][col].
struct Complex {
  std::size_t nvars = 0;
  std::uint64_t p = 0;
  std::vector<OPoly> ring_ideal;
  std::vector<Term> terms;
  std::vector<std::vector<std::vector<OPoly>>> d;
};

/// dim_k of the degree-`degree` piece of H_i.
std::size_t homology_dim(const Complex& C, std::size_t i, int degree);
/// Some piece of H_i in degrees [min shift, max shift + window] is nonzero.
bool homology_nonzero(const Complex& C, std::size_t i, int window);

/// Monomial-multigraded module data pulled out of a library module.
struct Multigraded {
  std::size_t nvars = 0;
  std::uint64_t p = 0;
  std::vector<OPoly> ring_ideal;
  std::size_t rank = 0;
  std::vector<Exps> generator_degrees;
  std::vector<std::vector<OPoly>> columns;
};

/// Infers generator multidegrees; throws std::logic_error if the data are
/// not multigraded (every entry must be a single term).
Multigraded multigraded(const koszul::PresentedModule& M);

/// Koszul chain complex K(x; M) on monomials x, with the variables outside
/// `keep` set to 1 (keep = all variables means no localization).
Complex koszul_chain(const Multigraded& M, const std::vector<Exps>& x, const std::vector<std::size_t>& keep);

/// i -> [H_i(x; M) localized at (x_keep) is nonzero], for i = 0..|x|.
std::vector<bool> koszul_pattern(const Multigraded& M, const std::vector<Exps>& x,
                                 const std::vector<std::size_t>& keep, int window = 6);

/// Depth of M at the monomial prime generated by the variables in `vars`;
/// nullopt when M vanishes there.
std::optional<std::size_t> local_depth(const koszul::PresentedModule& M, const std::vector<std::size_t>& vars,
                                       int window = 6);
/// grade(x; M) for monomials x without localizing; nullopt means infinite.
std::optional<std::size_t> grade(const koszul::PresentedModule& M, const std::vector<Exps>& x, int window = 6);

/// dim_k (P/I)_d for homogeneous generators of I over the polynomial ring.
std::size_t hilbert_function(std::size_t nvars, std::uint64_t p, const std::vector<OPoly>& ideal, int d);
/// Homogeneous f lies in the ideal spanned by the homogeneous generators.
bool in_ideal(std::size_t nvars, std::uint64_t p, const std::vector<OPoly>& ideal, const OPoly& f);
/// All exponent vectors of total degree d.
std::vector<Exps> monomials_of_degree(std::size_t nvars, int d);

/// Rank over F_p of a list of column vectors.
std::size_t rank(std::vector<std::vector<std::uint64_t>> columns, std::uint64_t p);

}  // namespace oracle
