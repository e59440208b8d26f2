#include "akit/algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "akit/linear_span.hpp"

namespace akit {

namespace {

// Rejects relations with an obvious factor: constants and a variable
// dividing every term.
void check_cheap_irreducibility(const Polynomial& rel) {
  if (rel.is_zero()) return;
  if (rel.is_constant()) throw Error(ErrorCode::ReducibleRelation, "nonzero constant relation presents the zero ring");
  const PolyRing& ring = *rel.ring();
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (*rel.min_degree_in(i) > 0 && rel.size() > 1)
      throw Error(ErrorCode::ReducibleRelation, "'" + ring.name(i) + "' divides the relation");
    if (*rel.min_degree_in(i) > 0 && rel.size() == 1 && rel.total_degree() > 1)
      throw Error(ErrorCode::ReducibleRelation, "monomial relation of degree > 1");
  }
}

bool divides(const Monomial& d, const Monomial& m) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (d[i] > m[i]) return false;
  return true;
}

}  // namespace

Algebra::Algebra(const RingPtr& ring, const Polynomial& relation, const MonomialOrder& order)
    : ring_(ring),
      relation_(relation),
      order_(order),
      ring_u_(ring->extended({std::string(kVarU)})),
      ring_su_(ring->extended({std::string(kVarS), std::string(kVarU)})),
      relation_u_(relation.rebase(ring_u_)),
      relation_su_(relation.rebase(ring_su_)) {}

AlgebraPtr Algebra::create(const RingPtr& ring, const Polynomial& relation, const MonomialOrder& order,
                           const std::optional<std::string>& solve) {
  if (!relation.ring()->same_as(*ring)) throw Error(ErrorCode::MixedRing, "relation outside the presentation ring");
  if (ring->has_laurent()) throw Error(ErrorCode::InvalidArgs, "presentations use non-Laurent variables");
  order.bind(*ring);  // validates names
  check_cheap_irreducibility(relation);

  std::shared_ptr<Algebra> a(new Algebra(ring, relation, order));
  if (!solve) return a;

  auto idx = ring->index_of(*solve);
  if (!idx) throw Error(ErrorCode::UnknownVariable, "solve variable '" + *solve + "'");
  if (relation.is_zero()) throw Error(ErrorCode::NoLaurentModel, "a free ring has nothing to solve");

  std::optional<Term> linear;
  std::vector<Term> rest;
  for (const auto& t : relation.terms()) {
    if (t.exponents[*idx] == 0) {
      rest.push_back(t);
    } else if (t.exponents[*idx] == 1 && !linear) {
      linear = t;
    } else {
      throw Error(ErrorCode::NoLaurentModel,
                  "relation is not c*m*" + *solve + " + (terms free of " + *solve + ")");
    }
  }
  if (!linear) throw Error(ErrorCode::NoLaurentModel, "'" + *solve + "' does not occur in the relation");
  Monomial m = linear->exponents;
  m[*idx] = 0;

  // m*v + r is irreducible iff no variable of m divides all of r (and r != 0 unless m = 1).
  const bool m_constant = m == Monomial{};
  if (rest.empty() && !m_constant)
    throw Error(ErrorCode::ReducibleRelation, "relation factors as a monomial times '" + *solve + "'");
  for (std::size_t i = 0; i < ring->size(); ++i) {
    if (m[i] == 0 || rest.empty()) continue;
    bool all = std::all_of(rest.begin(), rest.end(), [&](const Term& t) { return t.exponents[i] > 0; });
    if (all) throw Error(ErrorCode::ReducibleRelation, "'" + ring->name(i) + "' is a common factor");
  }

  std::vector<bool> laurent(ring->size(), false);
  for (std::size_t i = 0; i < ring->size(); ++i) laurent[i] = m[i] > 0;
  RingPtr lring = ring->with_laurent(laurent);
  const Coeff neg_inv = -linear->coeff.inverse();
  std::vector<Term> image;
  for (const auto& t : rest) {
    Monomial e = t.exponents;
    for (std::size_t i = 0; i < kMaxVars; ++i) e[i] -= m[i];
    image.push_back(Term{e, t.coeff * neg_inv});
  }
  LaurentSolution sol{*idx, Polynomial::from_terms(lring, std::move(image))};

  // Substituting the solution must kill the relation identically.
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ring->size(); ++i)
    images.push_back(i == *idx ? sol.image : Polynomial::variable(lring, i));
  if (!substitute(relation, images, lring).is_zero())
    throw Error(ErrorCode::NoLaurentModel, "Laurent solution does not annihilate the relation");

  a->laurent_ = std::move(sol);
  a->solve_name_ = *solve;
  return a;
}

AlgebraPtr Algebra::free(const RingPtr& ring, const MonomialOrder& order) {
  return create(ring, Polynomial(ring), order);
}

const RingPtr& Algebra::laurent_ring() const {
  if (!laurent_) throw Error(ErrorCode::NoLaurentModel, "presentation has no Laurent solution");
  return laurent_->image.ring();
}

const Polynomial& Algebra::relation_for(const RingPtr& ring) const {
  if (ring->same_as(*ring_)) return relation_;
  if (ring->same_as(*ring_u_)) return relation_u_;
  if (ring->same_as(*ring_su_)) return relation_su_;
  throw Error(ErrorCode::MixedRing, "polynomial is not over A, A[U] or A[S,U]");
}

Polynomial Algebra::reduce(const Polynomial& f) const {
  const Polynomial& rel = relation_for(f.ring());
  if (rel.is_zero()) return f;
  return normal_form(f, rel, order_);
}

std::optional<Monomial> Algebra::relation_lead() const {
  if (relation_.is_zero()) return std::nullopt;
  return leading_term(relation_, order_.bind(*ring_)).exponents;
}

std::vector<Monomial> Algebra::standard_monomials(int max_degree) const {
  std::vector<Monomial> out;
  const auto lead = relation_lead();
  const std::size_t n = ring_->size();
  Monomial m{};
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int budget) {
    if (i == n) {
      if (!lead || !divides(*lead, m)) out.push_back(m);
      return;
    }
    for (int e = 0; e <= budget; ++e) {
      m[i] = e;
      rec(i + 1, budget - e);
    }
    m[i] = 0;
  };
  if (max_degree >= 0) rec(0, max_degree);
  return out;
}

AlgebraPtr Algebra::over(const Field& field) const {
  RingPtr r = ring_->over(field);
  return create(r, reinterpret(relation_, r), order_, solve_name_);
}

// ---------------------------------------------------------- AlgebraElement

AlgebraElement::AlgebraElement(AlgebraPtr owner, Polynomial rep) : owner_(std::move(owner)), rep_(std::move(rep)) {
  if (!rep_.ring()->same_as(*owner_->ring())) throw Error(ErrorCode::MixedRing, "element rep outside its algebra");
}

void AlgebraElement::check_owner(const AlgebraElement& other) const {
  if (owner_ != other.owner_ && !owner_->ring()->same_as(*other.owner_->ring()))
    throw Error(ErrorCode::MixedRing, "elements of different algebras");
}

AlgebraElement AlgebraElement::operator-() const { return AlgebraElement(owner_, -rep_); }

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  check_owner(other);
  rep_ += other.rep_;
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  check_owner(other);
  rep_ -= other.rep_;
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const AlgebraElement& other) {
  check_owner(other);
  rep_ = owner_->reduce(rep_ * other.rep_);
  return *this;
}

AlgebraElement AlgebraElement::pow(unsigned e) const {
  AlgebraElement result = scalar(owner_, 1);
  AlgebraElement base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

AlgebraElement AlgebraElement::scaled(const Coeff& c) const { return AlgebraElement(owner_, rep_.scaled(c)); }

bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.rep_ == b.rep_; }

std::string AlgebraElement::to_string() const { return akit::to_string(rep_, owner_->order()); }

AlgebraElement make_element(const AlgebraPtr& algebra, const Polynomial& f) {
  if (!f.ring()->same_as(*algebra->ring())) throw Error(ErrorCode::MixedRing, "polynomial outside the algebra's ring");
  return AlgebraElement(algebra, algebra->reduce(f));
}

AlgebraElement generator(const AlgebraPtr& algebra, std::size_t index) {
  return make_element(algebra, Polynomial::variable(algebra->ring(), index));
}

AlgebraElement generator(const AlgebraPtr& algebra, std::string_view name) {
  return make_element(algebra, Polynomial::variable(algebra->ring(), name));
}

AlgebraElement scalar(const AlgebraPtr& algebra, const Coeff& c) {
  return AlgebraElement(algebra, Polynomial::constant(algebra->ring(), c));
}

AlgebraElement scalar(const AlgebraPtr& algebra, long c) {
  return AlgebraElement(algebra, Polynomial::constant(algebra->ring(), c));
}

Polynomial laurent_embed(const AlgebraElement& a) {
  const Algebra& alg = *a.owner();
  if (!alg.laurent()) throw Error(ErrorCode::NoLaurentModel, "presentation has no Laurent solution");
  const RingPtr& lring = alg.laurent_ring();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < alg.generator_count(); ++i)
    images.push_back(i == alg.laurent()->solved_var ? alg.laurent()->image : Polynomial::variable(lring, i));
  return substitute(a.rep(), images, lring);
}

Degree filtration_degree(const AlgebraElement& a, const WeightVector& w) {
  if (a.owner()->is_free()) return weighted_degree(a.rep(), w);
  return weighted_degree(laurent_embed(a), w);
}

// ------------------------------------------------------ bounded subalgebras

std::vector<std::pair<std::vector<unsigned>, AlgebraElement>> bounded_products(const std::vector<AlgebraElement>& gens,
                                                                               int d) {
  if (gens.empty()) throw Error(ErrorCode::InvalidArgs, "no generators");
  const AlgebraPtr& owner = gens.front().owner();
  std::vector<int> degrees;
  for (const auto& g : gens) degrees.push_back(g.rep().total_degree());

  std::vector<std::pair<std::vector<unsigned>, AlgebraElement>> out;
  std::vector<unsigned> e(gens.size(), 0);
  std::function<void(std::size_t, int, const AlgebraElement&)> rec = [&](std::size_t i, int budget,
                                                                         const AlgebraElement& prod) {
    if (i == gens.size()) {
      out.emplace_back(e, prod);
      return;
    }
    if (degrees[i] <= 0) {  // constants add nothing beyond the empty product
      rec(i + 1, budget, prod);
      return;
    }
    AlgebraElement p = prod;
    for (unsigned k = 0; static_cast<int>(k) * degrees[i] <= budget; ++k) {
      e[i] = k;
      rec(i + 1, budget - static_cast<int>(k) * degrees[i], p);
      p *= gens[i];
    }
    e[i] = 0;
  };
  rec(0, d, scalar(owner, 1));
  return out;
}

MembershipResult subalgebra_membership_bounded(const AlgebraElement& a, const std::vector<AlgebraElement>& gens, int d) {
  if (a.rep().total_degree() > d)
    throw Error(ErrorCode::BoundTooSmall,
                "degree " + std::to_string(a.rep().total_degree()) + " exceeds bound " + std::to_string(d));
  auto products = bounded_products(gens, d);
  LinearSpan span(a.owner()->ring());
  for (const auto& [e, p] : products) span.insert(p.rep());
  auto r = span.reduce(a.rep());
  MembershipResult result;
  result.member = r.remainder.is_zero();
  if (result.member) {
    for (std::size_t k = 0; k < r.combination.size(); ++k)
      if (!r.combination[k].is_zero()) result.certificate.push_back(GeneratorProduct{products[k].first, r.combination[k]});
  }
  return result;
}

std::vector<AlgebraElement> subalgebra_intersection_bounded(const std::vector<AlgebraElement>& gens1,
                                                            const std::vector<AlgebraElement>& gens2, int d) {
  auto first = bounded_products(gens1, d);
  auto second = bounded_products(gens2, d);
  const AlgebraPtr& owner = gens1.front().owner();
  LinearSpan span(owner->ring());
  for (const auto& [e, p] : first) span.insert(p.rep());
  const std::size_t n1 = first.size();

  // Each dependency sum_k r_k v_k = 0 found while inserting the second family
  // yields sum_{k >= n1} r_k v_k, an element of both spans.
  LinearSpan common(owner->ring());
  for (const auto& [e, p] : second) {
    auto ins = span.insert(p.rep());
    if (ins.independent) continue;
    Polynomial w(owner->ring());
    for (std::size_t k = n1; k < ins.relation.size(); ++k)
      if (!ins.relation[k].is_zero()) w += second[k - n1].second.rep().scaled(ins.relation[k]);
    if (!w.is_zero()) common.insert(w);
  }
  std::vector<AlgebraElement> basis;
  for (auto& b : common.basis()) basis.emplace_back(owner, std::move(b));
  return basis;
}

bool same_span(const std::vector<AlgebraElement>& a, const std::vector<AlgebraElement>& b) {
  if (a.empty() || b.empty()) {
    auto nonzero = [](const AlgebraElement& e) { return !e.is_zero(); };
    return std::none_of(a.begin(), a.end(), nonzero) && std::none_of(b.begin(), b.end(), nonzero);
  }
  const RingPtr& ring = a.front().owner()->ring();
  LinearSpan sa(ring);
  LinearSpan sb(ring);
  for (const auto& e : a) sa.insert(e.rep());
  for (const auto& e : b) sb.insert(e.rep());
  if (sa.rank() != sb.rank()) return false;
  return std::all_of(b.begin(), b.end(), [&](const AlgebraElement& e) { return sa.contains(e.rep()); });
}

AlgebraElement random_element(const AlgebraPtr& algebra, int max_degree, int max_terms, std::mt19937_64& rng) {
  auto monomials = algebra->standard_monomials(max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, monomials.size() - 1);
  std::uniform_int_distribution<int> count(1, std::max(1, max_terms));
  std::uniform_int_distribution<long> coeff(-3, 3);
  std::vector<Term> terms;
  const int n = count(rng);
  for (int k = 0; k < n; ++k) {
    long c = 0;
    while (c == 0) c = coeff(rng);
    terms.push_back(Term{monomials[pick(rng)], Coeff(algebra->field(), c)});
  }
  return AlgebraElement(algebra, Polynomial::from_terms(algebra->ring(), std::move(terms)));
}

std::string to_string(const std::vector<GeneratorProduct>& certificate, const std::vector<AlgebraElement>& gens) {
  if (certificate.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& p : certificate) {
    const bool rational = p.coeff.field().is_rational();
    const bool negative = rational && !p.coeff.is_positive();
    const Coeff magnitude = negative ? -p.coeff : p.coeff;
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < gens.size() && i < p.exponents.size(); ++i) {
      if (p.exponents[i] == 0) continue;
      std::string g = gens[i].to_string();
      if (g.find_first_of(" +-*") != std::string::npos) g = "(" + g + ")";
      factors.push_back(p.exponents[i] == 1 ? g : g + "^" + std::to_string(p.exponents[i]));
    }
    if (factors.empty() || !magnitude.is_one()) factors.insert(factors.begin(), magnitude.to_string());
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

}  // namespace akit
