#include "akit/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace akit {

namespace {

bool is_reserved(std::string_view name) { return name == kVarU || name == kVarS; }

// Sorts by exponent vector and merges equal monomials; drops zeros.
void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exponents < b.exponents; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term acc = std::move(terms[i]);
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].exponents == acc.exponents; ++j) acc.coeff += terms[j].coeff;
    if (!acc.coeff.is_zero()) terms[out++] = std::move(acc);
    i = j;
  }
  terms.resize(out);
}

Monomial add_exponents(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = a[i] + b[i];
  return r;
}

bool divides(const Monomial& d, const Monomial& m) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (d[i] > m[i]) return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------- PolyRing

RingPtr PolyRing::make(const Field& field, std::vector<std::string> names, std::vector<bool> laurent) {
  if (names.size() > kMaxVars)
    throw Error(ErrorCode::InvalidArgs, "at most " + std::to_string(kMaxVars) + " variables supported");
  if (laurent.empty()) laurent.assign(names.size(), false);
  if (laurent.size() != names.size()) throw Error(ErrorCode::InvalidArgs, "laurent flag count mismatch");
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw Error(ErrorCode::InvalidArgs, "empty variable name");
    if (!seen.insert(n).second) throw Error(ErrorCode::InvalidArgs, "duplicate variable '" + n + "'");
  }
  return RingPtr(new PolyRing(field, std::move(names), std::move(laurent)));
}

RingPtr PolyRing::create(const Field& field, std::vector<std::string> names, std::vector<bool> laurent) {
  for (const auto& n : names)
    if (is_reserved(n)) throw Error(ErrorCode::ReservedName, "'" + n + "' is reserved for formal indeterminates");
  return make(field, std::move(names), std::move(laurent));
}

RingPtr PolyRing::with_laurent(std::vector<bool> laurent) const { return make(field_, names_, std::move(laurent)); }

RingPtr PolyRing::extended(const std::vector<std::string>& extra) const {
  auto names = names_;
  auto laurent = laurent_;
  for (const auto& e : extra) {
    names.push_back(e);
    laurent.push_back(false);
  }
  return make(field_, std::move(names), std::move(laurent));
}

RingPtr PolyRing::over(const Field& field) const { return make(field, names_, laurent_); }

bool PolyRing::has_laurent() const { return std::find(laurent_.begin(), laurent_.end(), true) != laurent_.end(); }

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool PolyRing::same_as(const PolyRing& other) const {
  return this == &other || (field_ == other.field_ && names_ == other.names_ && laurent_ == other.laurent_);
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw Error(ErrorCode::InvalidArgs, "polynomial without a ring");
}

Polynomial Polynomial::constant(RingPtr ring, const Coeff& c) {
  return monomial(std::move(ring), Monomial{}, c);
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
  Coeff k(ring->field(), c);
  return constant(std::move(ring), k);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw Error(ErrorCode::InvalidArgs, "variable index out of range");
  Monomial m{};
  m[index] = 1;
  Coeff one = Coeff::one(ring->field());
  return monomial(std::move(ring), m, one);
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  auto idx = ring->index_of(name);
  if (!idx) throw Error(ErrorCode::UnknownVariable, std::string(name));
  return variable(std::move(ring), *idx);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& exponents, const Coeff& c) {
  std::vector<Term> terms;
  terms.push_back(Term{exponents, c});
  return from_terms(std::move(ring), std::move(terms));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const PolyRing& r = *p.ring_;
  for (const auto& t : terms) {
    if (t.coeff.field() != r.field()) throw Error(ErrorCode::MixedField, "term coefficient over another field");
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (i >= r.size()) {
        if (t.exponents[i] != 0) throw Error(ErrorCode::InvalidArgs, "exponent outside the ring's variables");
      } else if (t.exponents[i] < 0 && !r.laurent(i)) {
        throw Error(ErrorCode::NegativeExponent, "variable '" + r.name(i) + "' is not Laurent");
      }
    }
  }
  canonicalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponents == Monomial{});
}

Coeff Polynomial::coefficient(const Monomial& exponents) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponents,
                             [](const Term& t, const Monomial& m) { return t.exponents < m; });
  if (it != terms_.end() && it->exponents == exponents) return it->coeff;
  return Coeff::zero(field());
}

Coeff Polynomial::constant_term() const { return coefficient(Monomial{}); }

int Polynomial::total_degree() const {
  int best = -1;
  for (const auto& t : terms_) best = std::max(best, std::accumulate(t.exponents.begin(), t.exponents.end(), 0));
  return best;
}

std::optional<Exponent> Polynomial::degree_in(std::size_t index) const {
  std::optional<Exponent> best;
  for (const auto& t : terms_)
    if (!best || t.exponents[index] > *best) best = t.exponents[index];
  return best;
}

std::optional<Exponent> Polynomial::min_degree_in(std::size_t index) const {
  std::optional<Exponent> best;
  for (const auto& t : terms_)
    if (!best || t.exponents[index] < *best) best = t.exponents[index];
  return best;
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (!ring_->same_as(*other.ring_)) throw Error(ErrorCode::MixedRing, "operands live in different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(other);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->exponents < b->exponents)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exponents < a->exponents) {
      merged.push_back(*b++);
    } else {
      Coeff c = a->coeff + b->coeff;
      if (!c.is_zero()) merged.push_back(Term{a->exponents, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  Polynomial r(a.ring_);
  if (a.is_zero() || b.is_zero()) return r;
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) r.terms_.push_back(Term{add_exponents(s.exponents, t.exponents), s.coeff * t.coeff});
  canonicalize(r.terms_);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial Polynomial::scaled(const Coeff& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!a.ring_->same_as(*b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exponents != b.terms_[i].exponents || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  return true;
}

Polynomial Polynomial::rebase(const RingPtr& target) const {
  if (ring_->field() != target->field()) throw Error(ErrorCode::MixedField, "rebase across fields");
  std::vector<std::optional<std::size_t>> map(ring_->size());
  for (std::size_t i = 0; i < ring_->size(); ++i) map[i] = target->index_of(ring_->name(i));
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m{};
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      if (t.exponents[i] == 0) continue;
      if (!map[i]) throw Error(ErrorCode::UnknownVariable, "'" + ring_->name(i) + "' is not a variable of the target ring");
      m[*map[i]] = t.exponents[i];
    }
    out.push_back(Term{m, t.coeff});
  }
  return from_terms(target, std::move(out));
}

Polynomial Polynomial::coefficient_of(std::size_t index, Exponent power) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exponents[index] != power) continue;
    Term s = t;
    s.exponents[index] = 0;
    out.push_back(std::move(s));
  }
  Polynomial r(ring_);
  canonicalize(out);
  r.terms_ = std::move(out);
  return r;
}

Polynomial poly_arith(const Polynomial& f, const Polynomial& g, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return f + g;
    case PolyOp::Sub: return f - g;
    case PolyOp::Mul: return f * g;
  }
  throw Error(ErrorCode::InvalidArgs, "unknown polynomial operation");
}

// ------------------------------------------------------------ MonomialOrder

MonomialOrder MonomialOrder::lex(std::vector<std::string> priority) {
  MonomialOrder o;
  std::unordered_set<std::string> seen;
  for (const auto& n : priority)
    if (!seen.insert(n).second) throw Error(ErrorCode::InvalidArgs, "variable '" + n + "' repeated in order");
  o.priority_ = std::move(priority);
  return o;
}

MonomialOrder::Bound MonomialOrder::bind(const PolyRing& ring) const {
  Bound b;
  std::vector<bool> used(ring.size(), false);
  for (const auto& n : priority_) {
    auto idx = ring.index_of(n);
    if (!idx) throw Error(ErrorCode::UnknownVariable, "order names unknown variable '" + n + "'");
    b.sequence_.push_back(*idx);
    used[*idx] = true;
  }
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (!used[i]) b.sequence_.push_back(i);
  return b;
}

bool MonomialOrder::Bound::less(const Monomial& a, const Monomial& b) const {
  for (std::size_t i : sequence_) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

const Term& leading_term(const Polynomial& f, const MonomialOrder::Bound& order) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "leading term of zero");
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (order.less(best->exponents, t.exponents)) best = &t;
  return *best;
}

// ------------------------------------------------------------------ Degree

const mpq_class& Degree::value() const {
  if (!finite_) throw Error(ErrorCode::InvalidArgs, "value of -infinity");
  return value_;
}

Degree operator+(const Degree& a, const Degree& b) {
  if (!a.finite_ || !b.finite_) return Degree::minus_infinity();
  return Degree(mpq_class(a.value_ + b.value_));
}

bool operator==(const Degree& a, const Degree& b) {
  if (a.finite_ != b.finite_) return false;
  return !a.finite_ || a.value_ == b.value_;
}

bool operator<(const Degree& a, const Degree& b) {
  if (!b.finite_) return false;
  if (!a.finite_) return true;
  return a.value_ < b.value_;
}

std::string Degree::to_string() const { return finite_ ? value_.get_str() : std::string("-inf"); }

// ------------------------------------------------------------ WeightVector

WeightVector::WeightVector(std::vector<std::pair<std::string, mpq_class>> entries) {
  for (auto& [name, w] : entries) set(name, w);
}

void WeightVector::set(const std::string& name, const mpq_class& weight) {
  mpq_class w(weight);
  w.canonicalize();
  for (auto& e : entries_) {
    if (e.first == name) {
      e.second = w;
      return;
    }
  }
  entries_.emplace_back(name, w);
}

bool WeightVector::has(std::string_view name) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const auto& e) { return e.first == name; });
}

const mpq_class& WeightVector::at(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.first == name) return e.second;
  throw Error(ErrorCode::UnknownVariable, "no weight for '" + std::string(name) + "'");
}

std::vector<mpq_class> WeightVector::resolve(const PolyRing& ring) const {
  std::vector<mpq_class> w;
  w.reserve(ring.size());
  for (const auto& n : ring.names()) w.push_back(at(n));
  return w;
}

mpq_class monomial_weight(const Monomial& exponents, const std::vector<mpq_class>& weights) {
  mpq_class s(0);
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (exponents[i] != 0) s += weights[i] * exponents[i];
  return s;
}

Degree weighted_degree(const Polynomial& f, const WeightVector& w) {
  if (f.is_zero()) return Degree::minus_infinity();
  auto weights = w.resolve(*f.ring());
  std::optional<mpq_class> best;
  for (const auto& t : f.terms()) {
    mpq_class d = monomial_weight(t.exponents, weights);
    if (!best || d > *best) best = d;
  }
  return Degree(*best);
}

Polynomial top_component(const Polynomial& f, const WeightVector& w) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "top component of zero");
  auto weights = w.resolve(*f.ring());
  const mpq_class top = weighted_degree(f, w).value();
  std::vector<Term> kept;
  for (const auto& t : f.terms())
    if (monomial_weight(t.exponents, weights) == top) kept.push_back(t);
  return Polynomial::from_terms(f.ring(), std::move(kept));
}

bool is_homogeneous(const Polynomial& f, const WeightVector& w) {
  return f.is_zero() || top_component(f, w).size() == f.size();
}

// ------------------------------------------------------------- normal form

Polynomial normal_form(const Polynomial& f, const Polynomial& rel, const MonomialOrder& order) {
  if (rel.is_zero()) throw Error(ErrorCode::ZeroRelation, "division by the zero polynomial");
  if (!f.ring()->same_as(*rel.ring())) throw Error(ErrorCode::MixedRing, "relation lives in another ring");
  if (f.ring()->has_laurent()) throw Error(ErrorCode::InvalidArgs, "normal forms need a non-Laurent ring");

  const auto bound = order.bind(*f.ring());
  const Term& lead = leading_term(rel, bound);
  const Coeff lead_inv = lead.coeff.inverse();

  auto greater = [&bound](const Monomial& a, const Monomial& b) { return bound.less(b, a); };
  std::map<Monomial, Coeff, decltype(greater)> work(greater);
  for (const auto& t : f.terms()) work.emplace(t.exponents, t.coeff);

  std::vector<Term> remainder;
  while (!work.empty()) {
    auto top = work.begin();
    if (!divides(lead.exponents, top->first)) {
      remainder.push_back(Term{top->first, top->second});
      work.erase(top);
      continue;
    }
    Monomial shift;
    for (std::size_t i = 0; i < kMaxVars; ++i) shift[i] = top->first[i] - lead.exponents[i];
    const Coeff factor = top->second * lead_inv;
    work.erase(top);
    for (const auto& t : rel.terms()) {
      if (t.exponents == lead.exponents) continue;
      Monomial m = add_exponents(t.exponents, shift);
      auto [it, inserted] = work.emplace(m, -(factor * t.coeff));
      if (!inserted) {
        it->second -= factor * t.coeff;
        if (it->second.is_zero()) work.erase(it);
      }
    }
  }
  return Polynomial::from_terms(f.ring(), std::move(remainder));
}

// ------------------------------------------------------------ substitution

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images, const RingPtr& target) {
  const std::size_t n = f.ring()->size();
  if (images.size() != n) throw Error(ErrorCode::InvalidArgs, "one image per variable required");
  for (const auto& im : images)
    if (!im.ring()->same_as(*target)) throw Error(ErrorCode::MixedRing, "image outside the target ring");

  // powers[i][e] caches images[i]^e; inverse_powers[i][e] caches images[i]^-e
  // and needs the image to be a unit monomial.
  std::vector<std::vector<Polynomial>> powers(n);
  std::vector<std::vector<Polynomial>> inverse_powers(n);
  auto power = [&](std::size_t i, Exponent e) -> const Polynomial& {
    auto& cache = e < 0 ? inverse_powers[i] : powers[i];
    if (cache.empty()) {
      cache.push_back(Polynomial::constant(target, 1));
      if (e < 0) {
        const Polynomial& im = images[i];
        if (im.size() != 1) throw Error(ErrorCode::NegativeExponent, "negative power of a non-monomial image");
        Monomial m;
        for (std::size_t k = 0; k < kMaxVars; ++k) m[k] = -im.terms()[0].exponents[k];
        cache.push_back(Polynomial::monomial(target, m, im.terms()[0].coeff.inverse()));
      } else {
        cache.push_back(images[i]);
      }
    }
    const auto k = static_cast<std::size_t>(e < 0 ? -e : e);
    while (cache.size() <= k) cache.push_back(cache.back() * cache[1]);
    return cache[k];
  };

  std::vector<Term> acc;
  for (const auto& t : f.terms()) {
    if (t.coeff.field() != target->field()) throw Error(ErrorCode::MixedField, "substitution across fields");
    Polynomial prod = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < n && !prod.is_zero(); ++i) {
      if (t.exponents[i] != 0) prod *= power(i, t.exponents[i]);
    }
    acc.insert(acc.end(), prod.terms().begin(), prod.terms().end());
  }
  return Polynomial::from_terms(target, std::move(acc));
}

Polynomial reinterpret(const Polynomial& f, const RingPtr& target) {
  if (f.ring()->names() != target->names()) throw Error(ErrorCode::MixedRing, "reinterpret needs identical variables");
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back(Term{t.exponents, Coeff(target->field(), t.coeff.to_rational())});
  return Polynomial::from_terms(target, std::move(out));
}

// ---------------------------------------------------------------- printing

std::string to_string(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) return "0";
  const PolyRing& ring = *f.ring();
  const auto bound = order.bind(ring);
  std::vector<const Term*> sorted;
  for (const auto& t : f.terms()) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(),
            [&](const Term* a, const Term* b) { return bound.less(b->exponents, a->exponents); });

  std::ostringstream os;
  bool first = true;
  for (const Term* t : sorted) {
    const bool rational = ring.field().is_rational();
    const bool negative = rational && !t->coeff.is_positive();
    Coeff magnitude = negative ? -t->coeff : t->coeff;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      Exponent e = t->exponents[i];
      if (e == 0) continue;
      factors.push_back(e == 1 ? ring.name(i) : ring.name(i) + "^" + std::to_string(e));
    }
    if (factors.empty() || !magnitude.is_one()) factors.insert(factors.begin(), magnitude.to_string());
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

// ----------------------------------------------------------- factorization

namespace {

// Univariate helpers over the coefficient field; index = power of s.
using Univariate = std::vector<Coeff>;

Coeff evaluate(const Univariate& p, const Coeff& s) {
  Coeff acc = Coeff::zero(s.field());
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * s + *it;
  return acc;
}

// Divides p by (s - root); p(root) must be 0.
Univariate deflate(const Univariate& p, const Coeff& root) {
  Univariate q(p.size() - 1, Coeff::zero(root.field()));
  Coeff carry = Coeff::zero(root.field());
  for (std::size_t k = p.size() - 1; k >= 1; --k) {
    carry = p[k] + carry * root;
    q[k - 1] = carry;
  }
  return q;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  if (n > mpz_class("1000000000000000000"))
    throw Error(ErrorCode::InvalidArgs, "coefficients too large for rational root search");
  std::vector<std::pair<mpz_class, unsigned>> factors;
  for (mpz_class d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) factors.emplace_back(d, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<mpz_class> divisors{1};
  for (const auto& [prime, e] : factors) {
    const std::size_t count = divisors.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= prime;
      for (std::size_t i = 0; i < count; ++i) divisors.push_back(divisors[i] * pk);
    }
  }
  return divisors;
}

std::optional<Coeff> find_root(const Univariate& p) {
  const Field& field = p.front().field();
  if (!field.is_rational()) {
    const std::uint64_t q = field.characteristic();
    if (q > 10'000'000) throw Error(ErrorCode::InvalidArgs, "exhaustive root search needs a small prime");
    for (std::uint64_t r = 0; r < q; ++r) {
      Coeff s(field, mpq_class(static_cast<unsigned long>(r)));
      if (evaluate(p, s).is_zero()) return s;
    }
    return std::nullopt;
  }
  // Rational root candidates +-d/e, d | a_0, e | a_K of the primitive integer form.
  mpz_class denom_lcm = 1;
  for (const auto& c : p) {
    mpz_class d = c.to_rational().get_den();
    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), d.get_mpz_t());
  }
  mpq_class a0 = p.front().to_rational() * denom_lcm;
  mpq_class ak = p.back().to_rational() * denom_lcm;
  auto nums = positive_divisors(a0.get_num());
  auto dens = positive_divisors(ak.get_num());
  for (const auto& d : nums) {
    for (const auto& e : dens) {
      for (int sign : {1, -1}) {
        Coeff s(field, mpq_class(mpz_class(d * sign), e));
        if (evaluate(p, s).is_zero()) return s;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

HomogFactorization weighted_homog_factor(const Polynomial& g, const WeightVector& w, std::size_t z, std::size_t t) {
  const PolyRing& ring = *g.ring();
  if (g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factorization of zero");
  if (z >= ring.size() || t >= ring.size() || z == t) throw Error(ErrorCode::InvalidArgs, "bad z/t variable indices");
  const mpq_class wz = w.at(ring.name(z));
  const mpq_class wt = w.at(ring.name(t));
  if (wt <= 0 || 2 * wz != 3 * wt)
    throw Error(ErrorCode::InvalidArgs, "weights of '" + ring.name(z) + "', '" + ring.name(t) + "' must be in ratio 3 : 2");
  for (const auto& term : g.terms())
    for (std::size_t i = 0; i < ring.size(); ++i)
      if (i != z && i != t && term.exponents[i] != 0)
        throw Error(ErrorCode::InvalidArgs, "variable '" + ring.name(i) + "' occurs besides z and t");
  for (const auto& term : g.terms())
    if (term.exponents[z] < 0 || term.exponents[t] < 0)
      throw Error(ErrorCode::InvalidArgs, "negative exponents in factorization input");

  // Homogeneity with respect to (3, 2) on (z, t).
  const long d0 = 3L * g.terms().front().exponents[z] + 2L * g.terms().front().exponents[t];
  for (const auto& term : g.terms())
    if (3L * term.exponents[z] + 2L * term.exponents[t] != d0)
      throw Error(ErrorCode::NotHomogeneous, to_string(g) + " is not weighted-homogeneous");

  HomogFactorization out;
  out.z_power = static_cast<unsigned>(*g.min_degree_in(z));
  out.t_power = static_cast<unsigned>(*g.min_degree_in(t));

  // After stripping, the exponents are (2k, 3(K-k)); collect P(s) = sum c_k s^k.
  const long residual_degree = d0 - 3L * out.z_power - 2L * out.t_power;
  const long big_k = residual_degree / 6;
  Univariate poly(static_cast<std::size_t>(big_k + 1), Coeff::zero(g.field()));
  for (const auto& term : g.terms()) {
    const long i = term.exponents[z] - static_cast<long>(out.z_power);
    const long j = term.exponents[t] - static_cast<long>(out.t_power);
    if (residual_degree % 6 != 0 || i % 2 != 0 || j % 3 != 0)
      throw Error(ErrorCode::InvalidArgs, "unexpected monomial shape after stripping z^n t^m");
    poly[static_cast<std::size_t>(i / 2)] = term.coeff;
  }
  out.lambda = poly.back();

  std::vector<Coeff> roots;
  while (poly.size() > 1) {
    auto root = find_root(poly);
    if (!root) {
      std::vector<Term> residual;
      const long k_left = static_cast<long>(poly.size()) - 1;
      for (std::size_t k = 0; k < poly.size(); ++k) {
        if (poly[k].is_zero()) continue;
        Monomial m{};
        m[z] = static_cast<Exponent>(2 * k);
        m[t] = static_cast<Exponent>(3 * (k_left - static_cast<long>(k)));
        residual.push_back(Term{m, poly[k]});
      }
      throw Error(ErrorCode::DoesNotSplit,
                  "residual factor " + to_string(Polynomial::from_terms(g.ring(), std::move(residual))) +
                      " has no root in the base field");
    }
    poly = deflate(poly, *root);
    roots.push_back(-*root);
  }
  std::sort(roots.begin(), roots.end(), [](const Coeff& a, const Coeff& b) { return canonical_compare(a, b) < 0; });
  out.mu = std::move(roots);
  return out;
}

std::pair<std::size_t, std::size_t> locate_zt(const Polynomial& g, const WeightVector& w) {
  const PolyRing& ring = *g.ring();
  std::vector<bool> occurs(ring.size(), false);
  for (const auto& term : g.terms())
    for (std::size_t i = 0; i < ring.size(); ++i)
      if (term.exponents[i] != 0) occurs[i] = true;
  std::optional<std::pair<std::size_t, std::size_t>> found;
  for (std::size_t z = 0; z < ring.size(); ++z) {
    for (std::size_t t = 0; t < ring.size(); ++t) {
      if (z == t || !w.has(ring.name(z)) || !w.has(ring.name(t))) continue;
      const mpq_class& wz = w.at(ring.name(z));
      const mpq_class& wt = w.at(ring.name(t));
      if (wt <= 0 || 2 * wz != 3 * wt) continue;
      bool covers = true;
      for (std::size_t i = 0; i < ring.size(); ++i)
        if (occurs[i] && i != z && i != t) covers = false;
      if (!covers) continue;
      if (found) throw Error(ErrorCode::InvalidArgs, "ambiguous choice of z and t variables");
      found = std::make_pair(z, t);
    }
  }
  if (!found) throw Error(ErrorCode::InvalidArgs, "no variable pair with weights in ratio 3 : 2 covers the input");
  return *found;
}

HomogFactorization weighted_homog_factor(const Polynomial& g, const WeightVector& w) {
  const auto [z, t] = locate_zt(g, w);
  return weighted_homog_factor(g, w, z, t);
}

Polynomial expand(const HomogFactorization& f, const RingPtr& ring, std::size_t z, std::size_t t) {
  Monomial m{};
  m[z] = static_cast<Exponent>(f.z_power);
  m[t] = static_cast<Exponent>(f.t_power);
  Polynomial result = Polynomial::monomial(ring, m, f.lambda);
  const Polynomial z2 = Polynomial::variable(ring, z).pow(2);
  const Polynomial t3 = Polynomial::variable(ring, t).pow(3);
  for (const auto& mu : f.mu) result *= z2 + t3.scaled(mu);
  return result;
}

}  // namespace akit
