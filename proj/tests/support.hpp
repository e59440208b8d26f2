#ifndef AKIT_TESTS_SUPPORT_HPP
#define AKIT_TESTS_SUPPORT_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <gtest/gtest.h>

#include "akit/catalog.hpp"

namespace akit::testing {

inline constexpr std::uint64_t kChars[] = {0, 2, 3, 5};
inline constexpr std::uint64_t kSeed = 20240611;

// Exact binomials from Pascal's rule; the oracle for binom_residue.
inline mpz_class pascal_binomial(unsigned n, unsigned k) {
  std::vector<mpz_class> row(n + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i; j >= 1; --j) row[j] += row[j - 1];
  return k <= n ? row[k] : mpz_class(0);
}

// Dense-map convolution; the oracle for polynomial multiplication.
inline std::map<Monomial, mpq_class> convolve(const Polynomial& f, const Polynomial& g) {
  std::map<Monomial, mpq_class> out;
  for (const auto& a : f.terms())
    for (const auto& b : g.terms()) {
      Monomial m{};
      for (std::size_t i = 0; i < kMaxVars; ++i) m[i] = a.exponents[i] + b.exponents[i];
      out[m] += a.coeff.to_rational() * b.coeff.to_rational();
    }
  return out;
}

// Code of the Error thrown by `f`; records a failure when nothing is thrown.
inline ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgs;
}

inline AlgebraElement el(const AlgebraPtr& alg, const std::string& name) { return generator(alg, name); }

// Sum of random products of `gens`: an element of the subalgebra they generate.
inline AlgebraElement sample_in(const std::vector<AlgebraElement>& gens, int d, std::mt19937_64& rng) {
  return random_subalgebra_element(gens, d, 3, rng);
}

}  // namespace akit::testing

#endif  // AKIT_TESTS_SUPPORT_HPP
