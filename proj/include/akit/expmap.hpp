#ifndef AKIT_EXPMAP_HPP
#define AKIT_EXPMAP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "akit/algebra.hpp"

namespace akit {

/// phi: A -> A[U], given by the images of the generators.  Construction
/// only normalizes; call verify() to check the axioms.
class ExponentialMap {
 public:
  /// `images[i]` is the image of generator i, over algebra->ring_u().
  /// Throws InvalidArgs on a wrong count, MixedRing on foreign images.
  ExponentialMap(AlgebraPtr algebra, std::vector<Polynomial> images, std::string name = {});

  /// The standard inclusion a -> a.
  static ExponentialMap inclusion(const AlgebraPtr& algebra, std::string name = "inclusion");

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const std::vector<Polynomial>& images() const noexcept { return images_; }
  const Polynomial& image(std::size_t generator) const { return images_.at(generator); }
  const std::string& name() const noexcept { return name_; }

  /// True when every generator maps to itself.
  bool is_trivial() const;

  /// Same images over another field (integer coefficients reduced mod p).
  ExponentialMap over(const Field& field) const;

 private:
  AlgebraPtr algebra_;
  std::vector<Polynomial> images_;
  std::string name_;
};

/// phi(a) over A[U], every U^n-coefficient in normal form.
Polynomial apply(const ExponentialMap& phi, const AlgebraElement& a);

struct CheckResult {
  std::string check;
  bool passed = false;
  std::optional<Polynomial> witness;
  std::string detail;  // e.g. the failing generator
};

struct VerificationReport {
  std::vector<CheckResult> checks;  // well_defined, identity_at_zero, composition
  bool trivial = false;
  bool passed() const;
};

/// Symbolic axiom check on the generators.  The composition witness is
/// phi_{S+U}(g) - phi_S(phi_U(g)) over A[S, U], scaled to a positive leading
/// coefficient in characteristic 0.
VerificationReport verify(const ExponentialMap& phi);

/// D^n(a): the U^n-coefficient of phi(a).
AlgebraElement coefficient_D(const ExponentialMap& phi, unsigned n, const AlgebraElement& a);
/// D^0(a), ..., D^deg(a); empty for a = 0.
std::vector<AlgebraElement> u_coefficients(const ExponentialMap& phi, const AlgebraElement& a);

/// deg_U phi(a); nullopt stands for -infinity (a = 0).
std::optional<int> phi_degree(const ExponentialMap& phi, const AlgebraElement& a);
bool is_invariant(const ExponentialMap& phi, const AlgebraElement& a);

/// D^i D^j (a) == C(i+j, i) D^{i+j}(a).
bool check_iterative(const ExponentialMap& phi, unsigned i, unsigned j, const AlgebraElement& a);
/// D^n(ab) == sum_{i+j=n} D^i(a) D^j(b).
bool check_leibniz(const ExponentialMap& phi, unsigned n, const AlgebraElement& a, const AlgebraElement& b);

struct MinimalDegree {
  AlgebraElement element;
  int degree = 0;
};

/// Heuristic minimum of the positive phi-degrees: scans D^i(g) over the
/// generators g, then `search_bound` random combinations of those
/// candidates.  Not a proof of global minimality.  Throws TrivialMap.
MinimalDegree min_positive_degree(const ExponentialMap& phi, unsigned search_bound, std::uint64_t seed = 0);

/// Nonzero D^i(x_min), i >= 1, sit at powers of p (char p) or only at i = 1
/// (char 0), and each of them is invariant.
bool check_power_support(const ExponentialMap& phi, const AlgebraElement& x_min);

/// n divides deg_phi(a) for every nonzero sample.
bool check_degree_divisibility(const ExponentialMap& phi, int n, const std::vector<AlgebraElement>& samples);

/// c^m a = sum_i h[i] x_min^i with c = D^n(x_min) and every h[i] invariant.
struct LocalizationExpression {
  std::vector<AlgebraElement> h;
  AlgebraElement c;
  unsigned m = 0;
};

/// Throws NonDivisibleDegree when deg(a) is not a multiple of deg(x_min),
/// RecursionNoProgress when the degree fails to drop, TrivialMap when
/// x_min is invariant.
LocalizationExpression express_in_localization(const ExponentialMap& phi, const AlgebraElement& x_min,
                                               const AlgebraElement& a);

/// sum_i h[i] x_min^i.
AlgebraElement evaluate(const LocalizationExpression& e, const AlgebraElement& x_min);

struct FractionWitness {
  int degree = 0;
  AlgebraElement numerator_D;    // D^n(a)
  AlgebraElement denominator_D;  // D^n(b)
};

/// nullopt when a/b is not phi-invariant.  Throws ZeroDenominator.
std::optional<FractionWitness> fraction_invariant_witness(const ExponentialMap& phi, const AlgebraElement& a,
                                                          const AlgebraElement& b);

/// Echelon basis of the invariants among normal forms of total degree <= d.
std::vector<AlgebraElement> bounded_invariants(const ExponentialMap& phi, int max_degree);

/// One line per check: `PASS well_defined`, `FAIL composition [X]: X*S*U`.
std::string to_string(const VerificationReport& report, const ExponentialMap& phi);

/// Images as `v -> expr` joined by ", ".
std::string images_to_string(const ExponentialMap& phi);

}  // namespace akit

#endif  // AKIT_EXPMAP_HPP
