#ifndef AKIT_POLY_HPP
#define AKIT_POLY_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "akit/coeff.hpp"

namespace akit {

// Rings in this library are tiny; exponent vectors are dense and fixed-width.
inline constexpr std::size_t kMaxVars = 10;
using Exponent = std::int32_t;
using Monomial = std::array<Exponent, kMaxVars>;

// Formal indeterminates adjoined by exponential maps; never ring variables.
inline constexpr std::string_view kVarU = "U";
inline constexpr std::string_view kVarS = "S";

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Coefficient field plus an ordered list of distinct variable names.  A
/// variable flagged Laurent may carry negative exponents.
class PolyRing {
 public:
  /// Throws InvalidArgs on duplicate or empty names, ReservedName for U and S.
  static RingPtr create(const Field& field, std::vector<std::string> names, std::vector<bool> laurent = {});

  /// Same variables with Laurent flags replaced.
  RingPtr with_laurent(std::vector<bool> laurent) const;
  /// Appends formal indeterminates (U, S allowed here).
  RingPtr extended(const std::vector<std::string>& extra) const;
  /// Same variables over another field.
  RingPtr over(const Field& field) const;

  const Field& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  bool laurent(std::size_t i) const { return laurent_.at(i); }
  bool has_laurent() const;
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool same_as(const PolyRing& other) const;

 private:
  PolyRing(const Field& field, std::vector<std::string> names, std::vector<bool> laurent)
      : field_(field), names_(std::move(names)), laurent_(std::move(laurent)) {}
  static RingPtr make(const Field& field, std::vector<std::string> names, std::vector<bool> laurent);

  Field field_;
  std::vector<std::string> names_;
  std::vector<bool> laurent_;
};

struct Term {
  Monomial exponents{};
  Coeff coeff;
};

/// Sparse polynomial in canonical form: terms sorted by exponent vector, no
/// zero coefficients.  Equal polynomials have identical term lists.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Coeff& c);
  static Polynomial constant(RingPtr ring, long c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial monomial(RingPtr ring, const Monomial& exponents, const Coeff& c);
  /// Combines like terms, drops zeros and validates exponents.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const Field& field() const noexcept { return ring_->field(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  Coeff coefficient(const Monomial& exponents) const;
  Coeff constant_term() const;
  /// Total degree; -1 for zero.
  int total_degree() const;
  /// Largest exponent of variable `index`; nullopt for zero.
  std::optional<Exponent> degree_in(std::size_t index) const;
  /// Smallest exponent of variable `index`; nullopt for zero.
  std::optional<Exponent> min_degree_in(std::size_t index) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial scaled(const Coeff& c) const;
  Polynomial pow(unsigned e) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Re-expresses this polynomial over `target`, matching variables by name.
  Polynomial rebase(const RingPtr& target) const;

  /// Sum of the terms whose exponent of `index` equals `power`, with that
  /// variable removed (exponent set to 0).
  Polynomial coefficient_of(std::size_t index, Exponent power) const;

 private:
  void check_ring(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

enum class PolyOp { Add, Sub, Mul };

/// Throws MixedRing when the operands live in different rings.
Polynomial poly_arith(const Polynomial& f, const Polynomial& g, PolyOp op);

/// Lexicographic order over a declared variable priority.  Variables of the
/// ring not named in the priority follow in their declared order.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  static MonomialOrder lex(std::vector<std::string> priority);

  const std::vector<std::string>& priority() const noexcept { return priority_; }

  class Bound {
   public:
    /// True when `a` is strictly smaller than `b`.
    bool less(const Monomial& a, const Monomial& b) const;
    const std::vector<std::size_t>& sequence() const noexcept { return sequence_; }

   private:
    friend class MonomialOrder;
    std::vector<std::size_t> sequence_;
  };

  /// Throws UnknownVariable if a priority name is not a variable of `ring`.
  Bound bind(const PolyRing& ring) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  std::vector<std::string> priority_;
};

/// Leading term under `order`.  Throws ZeroPolynomial for zero.
const Term& leading_term(const Polynomial& f, const MonomialOrder::Bound& order);

/// Exact rational or the formal symbol -infinity.
class Degree {
 public:
  Degree(const mpq_class& value) : finite_(true), value_(value) {}
  Degree(long value) : finite_(true), value_(value) {}
  static Degree minus_infinity() { return Degree(); }

  bool is_finite() const noexcept { return finite_; }
  /// Throws InvalidArgs for -infinity.
  const mpq_class& value() const;

  friend Degree operator+(const Degree& a, const Degree& b);
  friend bool operator==(const Degree& a, const Degree& b);
  friend bool operator<(const Degree& a, const Degree& b);
  friend bool operator<=(const Degree& a, const Degree& b) { return !(b < a); }
  friend bool operator>(const Degree& a, const Degree& b) { return b < a; }
  friend bool operator>=(const Degree& a, const Degree& b) { return !(a < b); }

  std::string to_string() const;

 private:
  Degree() : finite_(false), value_(0) {}
  bool finite_;
  mpq_class value_;
};

/// A rational weight for every variable, keyed by name.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<std::pair<std::string, mpq_class>> entries);

  void set(const std::string& name, const mpq_class& weight);
  bool has(std::string_view name) const;
  /// Throws UnknownVariable when `name` has no weight.
  const mpq_class& at(std::string_view name) const;
  const std::vector<std::pair<std::string, mpq_class>>& entries() const noexcept { return entries_; }

  /// Weights indexed by `ring`'s variables; every variable must be weighted.
  std::vector<mpq_class> resolve(const PolyRing& ring) const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<std::pair<std::string, mpq_class>> entries_;
};

/// Weighted degree of a single exponent vector.
mpq_class monomial_weight(const Monomial& exponents, const std::vector<mpq_class>& weights);

/// Maximum weighted exponent sum over terms; -infinity for zero.
Degree weighted_degree(const Polynomial& f, const WeightVector& w);

/// Terms attaining the weighted degree.  Throws ZeroPolynomial.
Polynomial top_component(const Polynomial& f, const WeightVector& w);

bool is_homogeneous(const Polynomial& f, const WeightVector& w);

/// Remainder of division of `f` by the single polynomial `rel` under
/// `order`.  Zero exactly when `rel` divides `f`.  Throws ZeroRelation.
Polynomial normal_form(const Polynomial& f, const Polynomial& rel, const MonomialOrder& order);

/// Substitutes `images[i]` (all over `target`) for variable i of f's ring.
/// Negative exponents require the image to be a unit monomial.
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images, const RingPtr& target);

/// Same polynomial over `target` (same variable names, possibly another
/// field); coefficients pass through their rational value, so integer
/// coefficients reduce mod p.  Throws DivisionByZero for denominators
/// divisible by p.
Polynomial reinterpret(const Polynomial& f, const RingPtr& target);

/// Canonical text: terms in descending `order`, factors in ring order,
/// exact coefficients (`-3/2*x^2*t`, `x^-2`).
std::string to_string(const Polynomial& f, const MonomialOrder& order = {});

/// g = lambda * z^n * t^m * prod_i (z^2 + mu_i t^3).
struct HomogFactorization {
  Coeff lambda;
  unsigned z_power = 0;
  unsigned t_power = 0;
  std::vector<Coeff> mu;  // sorted canonically, repeated by multiplicity
};

/// Factors a polynomial in the variables z, t that is homogeneous for
/// weights with w(z) : w(t) = 3 : 2.  Throws NotHomogeneous, DoesNotSplit,
/// InvalidArgs (other variables present or weights not in ratio 3 : 2).
HomogFactorization weighted_homog_factor(const Polynomial& g, const WeightVector& w, std::size_t z, std::size_t t);

/// The unique pair (z, t) of ring variables with 2 w(z) = 3 w(t) > 0 that
/// covers every variable occurring in g.  Throws InvalidArgs.
std::pair<std::size_t, std::size_t> locate_zt(const Polynomial& g, const WeightVector& w);

/// Same, with z and t found by locate_zt.
HomogFactorization weighted_homog_factor(const Polynomial& g, const WeightVector& w);

/// Re-expands a factorization over `ring`.
Polynomial expand(const HomogFactorization& f, const RingPtr& ring, std::size_t z, std::size_t t);

}  // namespace akit

#endif  // AKIT_POLY_HPP
