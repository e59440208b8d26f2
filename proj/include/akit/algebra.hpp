#ifndef AKIT_ALGEBRA_HPP
#define AKIT_ALGEBRA_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "akit/poly.hpp"

namespace akit {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// y = image, where y is the solved variable and image lives in a Laurent
/// ring over the same variable names.
struct LaurentSolution {
  std::size_t solved_var = 0;
  Polynomial image;
};

/// A = k[X_1..X_n]/(relation), elements kept as normal forms.  A zero
/// relation presents the free polynomial ring.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  /// `solve` names the variable to eliminate for the Laurent model; the
  /// relation must be c*m*v + r with m a monomial and r free of v.
  /// Throws ReducibleRelation, NoLaurentModel, UnknownVariable.
  static AlgebraPtr create(const RingPtr& ring, const Polynomial& relation, const MonomialOrder& order = {},
                           const std::optional<std::string>& solve = std::nullopt);
  /// Free polynomial ring.
  static AlgebraPtr free(const RingPtr& ring, const MonomialOrder& order = {});

  const RingPtr& ring() const noexcept { return ring_; }
  const Field& field() const noexcept { return ring_->field(); }
  std::size_t generator_count() const noexcept { return ring_->size(); }
  const Polynomial& relation() const noexcept { return relation_; }
  const MonomialOrder& order() const noexcept { return order_; }
  bool is_free() const noexcept { return relation_.is_zero(); }
  const std::optional<LaurentSolution>& laurent() const noexcept { return laurent_; }
  const std::optional<std::string>& solve_name() const noexcept { return solve_name_; }
  /// Ring of the Laurent model (same names, denominators flagged Laurent).
  const RingPtr& laurent_ring() const;

  /// A[U] and A[S, U]; U (and S) are appended after the generators.
  const RingPtr& ring_u() const noexcept { return ring_u_; }
  const RingPtr& ring_su() const noexcept { return ring_su_; }
  std::size_t u_index() const noexcept { return ring_->size(); }

  /// Normal form of a polynomial over ring(), ring_u() or ring_su().
  Polynomial reduce(const Polynomial& f) const;

  /// Leading monomial of the relation under the presentation order.
  std::optional<Monomial> relation_lead() const;
  /// Normal-form monomials (not divisible by relation_lead()) of total degree <= d.
  std::vector<Monomial> standard_monomials(int max_degree) const;

  /// Same presentation over another field (integer coefficients are reduced).
  AlgebraPtr over(const Field& field) const;

 private:
  Algebra(const RingPtr& ring, const Polynomial& relation, const MonomialOrder& order);
  const Polynomial& relation_for(const RingPtr& ring) const;

  RingPtr ring_;
  Polynomial relation_;
  MonomialOrder order_;
  std::optional<LaurentSolution> laurent_;
  std::optional<std::string> solve_name_;
  RingPtr ring_u_;
  RingPtr ring_su_;
  Polynomial relation_u_;
  Polynomial relation_su_;
};

/// An element of a presented algebra; `rep` is always a normal form.
class AlgebraElement {
 public:
  AlgebraElement(AlgebraPtr owner, Polynomial rep_in_normal_form);

  const AlgebraPtr& owner() const noexcept { return owner_; }
  const Polynomial& rep() const noexcept { return rep_; }
  bool is_zero() const noexcept { return rep_.is_zero(); }

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const AlgebraElement& other);
  AlgebraElement pow(unsigned e) const;
  AlgebraElement scaled(const Coeff& c) const;

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const AlgebraElement& b) { return a *= b; }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

  std::string to_string() const;

 private:
  void check_owner(const AlgebraElement& other) const;

  AlgebraPtr owner_;
  Polynomial rep_;
};

/// Element with rep = normal_form(f).  Throws MixedRing.
AlgebraElement make_element(const AlgebraPtr& algebra, const Polynomial& f);
AlgebraElement generator(const AlgebraPtr& algebra, std::size_t index);
AlgebraElement generator(const AlgebraPtr& algebra, std::string_view name);
AlgebraElement scalar(const AlgebraPtr& algebra, const Coeff& c);
AlgebraElement scalar(const AlgebraPtr& algebra, long c);

/// Image in the Laurent model.  Throws NoLaurentModel.
Polynomial laurent_embed(const AlgebraElement& a);

/// Weighted degree of the Laurent image (of the rep itself for a free ring).
/// Throws NoLaurentModel for a non-free algebra without a Laurent solution.
Degree filtration_degree(const AlgebraElement& a, const WeightVector& w);

/// One product of generators with its coefficient.
struct GeneratorProduct {
  std::vector<unsigned> exponents;  // per generator
  Coeff coeff;
};

struct MembershipResult {
  bool member = false;
  std::vector<GeneratorProduct> certificate;  // a = sum coeff * prod gens^exponents
};

/// Decides whether `a` lies in the span of the products g^e of `gens` with
/// sum_i e_i deg(g_i) <= d (deg = total degree of the normal form).
/// Throws BoundTooSmall when deg(a) > d.
MembershipResult subalgebra_membership_bounded(const AlgebraElement& a, const std::vector<AlgebraElement>& gens, int d);

/// Echelon basis of span(products of gens1) ∩ span(products of gens2),
/// both bounded as above.
std::vector<AlgebraElement> subalgebra_intersection_bounded(const std::vector<AlgebraElement>& gens1,
                                                            const std::vector<AlgebraElement>& gens2, int d);

/// The bounded products themselves, as elements; exponents returned alongside.
std::vector<std::pair<std::vector<unsigned>, AlgebraElement>> bounded_products(const std::vector<AlgebraElement>& gens,
                                                                               int d);

/// True when the two families span the same subspace.
bool same_span(const std::vector<AlgebraElement>& a, const std::vector<AlgebraElement>& b);

/// Random normal form with at most `max_terms` terms of total degree <= d
/// and small nonzero integer coefficients.
AlgebraElement random_element(const AlgebraPtr& algebra, int max_degree, int max_terms, std::mt19937_64& rng);

/// Renders a generator product certificate such as `-2*t^3 + x`.
std::string to_string(const std::vector<GeneratorProduct>& certificate, const std::vector<AlgebraElement>& gens);

}  // namespace akit

#endif  // AKIT_ALGEBRA_HPP
