#include "akit/expmap.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "akit/linear_span.hpp"

namespace akit {

namespace {

// Drops U from a polynomial over A[U] whose U-exponents are all zero.
AlgebraElement down(const AlgebraPtr& algebra, const Polynomial& f) {
  return AlgebraElement(algebra, f.rebase(algebra->ring()));
}

Polynomial up(const AlgebraPtr& algebra, const AlgebraElement& a) { return a.rep().rebase(algebra->ring_u()); }

bool is_power_of(std::uint64_t i, std::uint64_t p) {
  while (i % p == 0) i /= p;
  return i == 1;
}

}  // namespace

ExponentialMap::ExponentialMap(AlgebraPtr algebra, std::vector<Polynomial> images, std::string name)
    : algebra_(std::move(algebra)), name_(std::move(name)) {
  if (images.size() != algebra_->generator_count())
    throw Error(ErrorCode::InvalidArgs, "expected " + std::to_string(algebra_->generator_count()) + " images");
  for (auto& im : images) {
    if (!im.ring()->same_as(*algebra_->ring_u())) throw Error(ErrorCode::MixedRing, "image outside A[U]");
    images_.push_back(algebra_->reduce(im));
  }
}

ExponentialMap ExponentialMap::inclusion(const AlgebraPtr& algebra, std::string name) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < algebra->generator_count(); ++i)
    images.push_back(Polynomial::variable(algebra->ring_u(), i));
  return ExponentialMap(algebra, std::move(images), std::move(name));
}

bool ExponentialMap::is_trivial() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (!(images_[i] == algebra_->reduce(Polynomial::variable(algebra_->ring_u(), i)))) return false;
  return true;
}

ExponentialMap ExponentialMap::over(const Field& field) const {
  AlgebraPtr target = algebra_->over(field);
  std::vector<Polynomial> images;
  for (const auto& im : images_) images.push_back(reinterpret(im, target->ring_u()));
  return ExponentialMap(target, std::move(images), name_);
}

Polynomial apply(const ExponentialMap& phi, const AlgebraElement& a) {
  const AlgebraPtr& alg = phi.algebra();
  if (!a.owner()->ring()->same_as(*alg->ring())) throw Error(ErrorCode::MixedRing, "element outside the map's algebra");
  return alg->reduce(substitute(a.rep(), phi.images(), alg->ring_u()));
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerificationReport verify(const ExponentialMap& phi) {
  const AlgebraPtr& alg = phi.algebra();
  const std::size_t n = alg->generator_count();
  const RingPtr& ru = alg->ring_u();
  const RingPtr& rsu = alg->ring_su();
  const std::size_t u = alg->u_index();
  VerificationReport report;
  report.trivial = phi.is_trivial();

  CheckResult well_defined{"well_defined", true, std::nullopt, {}};
  if (!alg->is_free()) {
    Polynomial image = alg->reduce(substitute(alg->relation(), phi.images(), ru));
    if (!image.is_zero()) {
      well_defined.passed = false;
      well_defined.witness = image;
    }
  }
  report.checks.push_back(std::move(well_defined));

  CheckResult identity{"identity_at_zero", true, std::nullopt, {}};
  for (std::size_t i = 0; i < n && identity.passed; ++i) {
    Polynomial diff = phi.image(i).coefficient_of(u, 0) - Polynomial::variable(ru, i);
    diff = alg->reduce(diff);
    if (!diff.is_zero()) {
      identity.passed = false;
      identity.witness = diff;
      identity.detail = alg->ring()->name(i);
    }
  }
  report.checks.push_back(std::move(identity));

  // Over A[S, U] (variables X_1..X_n, S, U):
  //   phi_S : X_i -> image_i(X, S), S -> S, U -> U
  //   shift : X_i -> X_i, U -> S + U
  const std::size_t s_idx = n;
  const std::size_t u_idx = n + 1;
  std::vector<Polynomial> to_su_with_s;  // A[U] -> A[S,U], U -> S
  std::vector<Polynomial> to_su_shift;   // A[U] -> A[S,U], U -> S + U
  std::vector<Polynomial> lift;          // A[U] -> A[S,U], identity on names
  for (std::size_t i = 0; i < n; ++i) {
    to_su_with_s.push_back(Polynomial::variable(rsu, i));
    to_su_shift.push_back(Polynomial::variable(rsu, i));
    lift.push_back(Polynomial::variable(rsu, i));
  }
  to_su_with_s.push_back(Polynomial::variable(rsu, s_idx));
  to_su_shift.push_back(Polynomial::variable(rsu, s_idx) + Polynomial::variable(rsu, u_idx));
  lift.push_back(Polynomial::variable(rsu, u_idx));

  std::vector<Polynomial> phi_s;
  for (std::size_t i = 0; i < n; ++i) phi_s.push_back(substitute(phi.image(i), to_su_with_s, rsu));
  phi_s.push_back(Polynomial::variable(rsu, s_idx));
  phi_s.push_back(Polynomial::variable(rsu, u_idx));

  CheckResult composition{"composition", true, std::nullopt, {}};
  for (std::size_t i = 0; i < n && composition.passed; ++i) {
    Polynomial phi_u = substitute(phi.image(i), lift, rsu);
    Polynomial lhs = substitute(phi_u, phi_s, rsu);
    Polynomial rhs = substitute(phi.image(i), to_su_shift, rsu);
    Polynomial diff = alg->reduce(rhs - lhs);
    if (diff.is_zero()) continue;
    if (alg->field().is_rational()) {
      const Term& lead = leading_term(diff, alg->order().bind(*rsu));
      if (!lead.coeff.is_positive()) diff = -diff;
    }
    composition.passed = false;
    composition.witness = diff;
    composition.detail = alg->ring()->name(i);
  }
  report.checks.push_back(std::move(composition));
  return report;
}

std::vector<AlgebraElement> u_coefficients(const ExponentialMap& phi, const AlgebraElement& a) {
  Polynomial image = apply(phi, a);
  std::vector<AlgebraElement> out;
  if (image.is_zero()) return out;
  const std::size_t u = phi.algebra()->u_index();
  const int deg = *image.degree_in(u);
  for (int k = 0; k <= deg; ++k) out.push_back(down(phi.algebra(), image.coefficient_of(u, k)));
  return out;
}

AlgebraElement coefficient_D(const ExponentialMap& phi, unsigned n, const AlgebraElement& a) {
  Polynomial image = apply(phi, a);
  return down(phi.algebra(), image.coefficient_of(phi.algebra()->u_index(), static_cast<Exponent>(n)));
}

std::optional<int> phi_degree(const ExponentialMap& phi, const AlgebraElement& a) {
  Polynomial image = apply(phi, a);
  if (image.is_zero()) return std::nullopt;
  return *image.degree_in(phi.algebra()->u_index());
}

bool is_invariant(const ExponentialMap& phi, const AlgebraElement& a) {
  return apply(phi, a) == up(phi.algebra(), a);
}

bool check_iterative(const ExponentialMap& phi, unsigned i, unsigned j, const AlgebraElement& a) {
  AlgebraElement lhs = coefficient_D(phi, i, coefficient_D(phi, j, a));
  AlgebraElement rhs = coefficient_D(phi, i + j, a).scaled(binom_residue(i + j, i, phi.algebra()->field()));
  return lhs == rhs;
}

bool check_leibniz(const ExponentialMap& phi, unsigned n, const AlgebraElement& a, const AlgebraElement& b) {
  auto da = u_coefficients(phi, a);
  auto db = u_coefficients(phi, b);
  AlgebraElement rhs = scalar(phi.algebra(), 0);
  for (unsigned i = 0; i <= n; ++i) {
    const unsigned j = n - i;
    if (i < da.size() && j < db.size()) rhs += da[i] * db[j];
  }
  return coefficient_D(phi, n, a * b) == rhs;
}

MinimalDegree min_positive_degree(const ExponentialMap& phi, unsigned search_bound, std::uint64_t seed) {
  const AlgebraPtr& alg = phi.algebra();
  std::vector<AlgebraElement> candidates;
  std::optional<MinimalDegree> best;
  auto consider = [&](const AlgebraElement& e) {
    auto d = phi_degree(phi, e);
    if (d && *d > 0 && (!best || *d < best->degree)) best = MinimalDegree{e, *d};
  };
  for (std::size_t i = 0;; ++i) {
    bool any = false;
    for (std::size_t g = 0; g < alg->generator_count(); ++g) {
      auto ds = u_coefficients(phi, generator(alg, g));
      if (i >= ds.size()) continue;
      any = true;
      if (ds[i].is_zero()) continue;
      candidates.push_back(ds[i]);
      consider(ds[i]);
    }
    if (!any) break;
  }
  if (!best) throw Error(ErrorCode::TrivialMap, "no generator has positive phi-degree");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (unsigned trial = 0; trial < search_bound && best->degree > 1; ++trial) {
    AlgebraElement combo = scalar(alg, 0);
    for (int k = 0; k < 3; ++k) combo += candidates[pick(rng)].scaled(Coeff(alg->field(), coeff(rng)));
    consider(combo);
  }
  return *best;
}

bool check_power_support(const ExponentialMap& phi, const AlgebraElement& x_min) {
  const std::uint64_t p = phi.algebra()->field().characteristic();
  auto ds = u_coefficients(phi, x_min);
  for (std::size_t i = 1; i < ds.size(); ++i) {
    if (ds[i].is_zero()) continue;
    const bool allowed = p == 0 ? i == 1 : is_power_of(i, p);
    if (!allowed || !is_invariant(phi, ds[i])) return false;
  }
  return true;
}

bool check_degree_divisibility(const ExponentialMap& phi, int n, const std::vector<AlgebraElement>& samples) {
  if (n <= 0) throw Error(ErrorCode::InvalidArgs, "degree must be positive");
  for (const auto& a : samples) {
    auto d = phi_degree(phi, a);
    if (d && *d % n != 0) return false;
  }
  return true;
}

LocalizationExpression express_in_localization(const ExponentialMap& phi, const AlgebraElement& x_min,
                                               const AlgebraElement& a) {
  const AlgebraPtr& alg = phi.algebra();
  auto n = phi_degree(phi, x_min);
  if (!n || *n <= 0) throw Error(ErrorCode::TrivialMap, "x_min must have positive phi-degree");
  AlgebraElement c = coefficient_D(phi, static_cast<unsigned>(*n), x_min);

  // Iterative unrolling of  c^l a = y + D^{ln}(a) x^l  with deg y < deg a.
  struct Step {
    unsigned l;
    AlgebraElement top;  // D^{ln}(a) at this step
  };
  std::vector<Step> steps;
  AlgebraElement current = a;
  for (;;) {
    auto ds = u_coefficients(phi, current);
    const int d = ds.empty() ? 0 : static_cast<int>(ds.size()) - 1;
    if (d <= 0) break;
    if (d % *n != 0)
      throw Error(ErrorCode::NonDivisibleDegree,
                  "phi-degree " + std::to_string(d) + " is not a multiple of " + std::to_string(*n));
    const unsigned l = static_cast<unsigned>(d / *n);
    AlgebraElement y = c.pow(l) * current - ds[d] * x_min.pow(l);
    auto dy = phi_degree(phi, y);
    if (dy && *dy >= d) throw Error(ErrorCode::RecursionNoProgress, "phi-degree did not drop");
    steps.push_back(Step{l, ds[d]});
    current = y;
  }

  LocalizationExpression out{{current}, c, 0};
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (out.h.size() <= it->l) out.h.resize(it->l + 1, scalar(alg, 0));
    out.h[it->l] += c.pow(out.m) * it->top;
    out.m += it->l;
  }
  return out;
}

AlgebraElement evaluate(const LocalizationExpression& e, const AlgebraElement& x_min) {
  AlgebraElement sum = scalar(x_min.owner(), 0);
  AlgebraElement power = scalar(x_min.owner(), 1);
  for (const auto& h : e.h) {
    sum += h * power;
    power *= x_min;
  }
  return sum;
}

std::optional<FractionWitness> fraction_invariant_witness(const ExponentialMap& phi, const AlgebraElement& a,
                                                          const AlgebraElement& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroDenominator, "denominator is zero");
  const AlgebraPtr& alg = phi.algebra();
  Polynomial lhs = alg->reduce(up(alg, a) * apply(phi, b));
  Polynomial rhs = alg->reduce(up(alg, b) * apply(phi, a));
  if (!(lhs == rhs)) return std::nullopt;
  const int n = *phi_degree(phi, b);
  return FractionWitness{n, coefficient_D(phi, static_cast<unsigned>(n), a),
                         coefficient_D(phi, static_cast<unsigned>(n), b)};
}

std::vector<AlgebraElement> bounded_invariants(const ExponentialMap& phi, int max_degree) {
  const AlgebraPtr& alg = phi.algebra();
  auto monomials = alg->standard_monomials(max_degree);
  // A dependency among the vectors phi(m_k) - m_k is a kernel vector of phi - id.
  LinearSpan images(alg->ring_u());
  LinearSpan kernel(alg->ring());
  for (const auto& m : monomials) {
    AlgebraElement e(alg, Polynomial::monomial(alg->ring(), m, Coeff::one(alg->field())));
    auto ins = images.insert(apply(phi, e) - up(alg, e));
    if (ins.independent) continue;
    Polynomial v(alg->ring());
    for (std::size_t k = 0; k < ins.relation.size(); ++k)
      if (!ins.relation[k].is_zero())
        v += Polynomial::monomial(alg->ring(), monomials[k], ins.relation[k]);
    kernel.insert(v);
  }
  std::vector<AlgebraElement> out;
  for (auto& b : kernel.basis()) out.emplace_back(alg, std::move(b));
  return out;
}

std::string to_string(const VerificationReport& report, const ExponentialMap& phi) {
  std::ostringstream os;
  for (const auto& c : report.checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.check;
    if (!c.detail.empty()) os << " [" << c.detail << "]";
    if (c.witness) os << ": " << to_string(*c.witness, phi.algebra()->order());
    os << '\n';
  }
  return os.str();
}

std::string images_to_string(const ExponentialMap& phi) {
  std::ostringstream os;
  const auto& names = phi.algebra()->ring()->names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) os << ", ";
    os << names[i] << " -> " << to_string(phi.image(i), phi.algebra()->order());
  }
  return os.str();
}

}  // namespace akit
