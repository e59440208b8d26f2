#ifndef AKIT_CATALOG_HPP
#define AKIT_CATALOG_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "akit/grading.hpp"

namespace akit {

struct FactResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct FactOptions {
  int max_degree = 6;
  std::uint64_t seed = 0;
  unsigned samples = 20;
};

struct CatalogEntry {
  std::string name;
  AlgebraPtr algebra;
  std::vector<ExponentialMap> maps;
  std::vector<std::pair<std::string, WeightVector>> weights;
  std::function<std::vector<FactResult>(const CatalogEntry&, const FactOptions&)> documented_facts;

  /// Throws UnknownName.
  const ExponentialMap& map(std::string_view name) const;
  const WeightVector& weight(std::string_view name) const;
  std::vector<FactResult> run(const FactOptions& options = {}) const { return documented_facts(*this, options); }
};

/// k[X,Y,Z,T]/(X + X^2 Y + Z^2 + T^3) with phi1, phi2 and weights w1, w2.
CatalogEntry russell(std::uint64_t p);

/// Invariance of x, t (phi1) and x, z (phi2) and non-invariance of the
/// others; bounded invariants of degree <= d equal the bounded spans of
/// {x, t} and {x, z}; their intersection is span{x^i : i <= d}.
std::vector<FactResult> russell_invariant_suite(const CatalogEntry& entry, int d);

/// k[X_1..X_n] with the translations X_j -> X_j + delta_ij U.  1 <= n <= 4.
CatalogEntry coordinate_maps(unsigned n, std::uint64_t p);

/// k[X, Y] over F_2 with Y -> Y + X U^2.
CatalogEntry char2_plane();

enum class Example2Case { BetaSmaller, Equal, BetaLarger };

struct Example2Result {
  Example2Case which;
  HomogenizedMap homogenized;
  mpq_class expected_grdegU;
  Polynomial expected_Y;  // over the graded ring's A[U]
};

/// k[X, Y] over F_p, phi(X) = X, phi(Y) = Y + U + X U^p, weights (alpha, beta).
Example2Result example2(std::uint64_t p, const mpq_class& alpha, const mpq_class& beta);

/// One (alpha, beta) per case: (1 - 2p, 1), (1 - p, 1), (1, p + 1).
std::vector<std::pair<mpq_class, mpq_class>> example2_triples(std::uint64_t p);

CatalogEntry example2_entry(std::uint64_t p);

struct Lemma0Outcome {
  bool hypotheses_hold = false;  // c1 a^n + c2 b^m invariant and nonzero
  bool conclusion_holds = false;  // a and b invariant
};

/// Throws InvalidExponents (n or m < 2), NonInvariantScalars (c1 or c2 zero
/// or not invariant).
Lemma0Outcome lemma0_check(const ExponentialMap& phi, const AlgebraElement& c1, const AlgebraElement& c2,
                           const AlgebraElement& a, const AlgebraElement& b, unsigned n, unsigned m);

struct Lemma0Instance {
  AlgebraElement c1, c2, a, b;
  unsigned n = 0;
  unsigned m = 0;
};

/// Random search, in characteristic p > 0, for instances with n and m powers
/// of p whose hypotheses hold while the conclusion fails.  Returns the first
/// one found; reports only.
std::optional<Lemma0Instance> lemma0_explore(const ExponentialMap& phi, unsigned trials, std::uint64_t seed);

/// Negative controls: psi(X) = X + X U fails composition with witness
/// X*S*U; Y -> Y + U^2 passes only in characteristic 2; the inclusion
/// passes and is flagged trivial.
std::vector<FactResult> nonexample_suite();

CatalogEntry nonexamples_entry();

/// Random sum of products of `gens` with total degree <= d.
AlgebraElement random_subalgebra_element(const std::vector<AlgebraElement>& gens, int d, int max_terms,
                                         std::mt19937_64& rng);

/// Entry names accepted by catalog_entry().
std::vector<std::string> catalog_names();

/// Builds a named entry; `p` overrides the entry's default characteristic.
/// Throws UnknownName, InvalidArgs (char2_plane outside characteristic 2).
CatalogEntry catalog_entry(std::string_view name, std::optional<std::uint64_t> p = std::nullopt);

}  // namespace akit

#endif  // AKIT_CATALOG_HPP
