#include "akit/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "akit/linear_span.hpp"

namespace akit {

namespace {

FactResult fact(std::string name, bool passed, std::string detail = {}) {
  return FactResult{std::move(name), passed, std::move(detail)};
}

bool verified(const ExponentialMap& phi) {
  VerificationReport r = verify(phi);
  return r.passed() && !r.trivial;
}

std::vector<AlgebraElement> elements(const AlgebraPtr& alg, std::initializer_list<const char*> names) {
  std::vector<AlgebraElement> out;
  for (const char* n : names) out.push_back(generator(alg, n));
  return out;
}

std::vector<AlgebraElement> product_span(const std::vector<AlgebraElement>& gens, int d) {
  std::vector<AlgebraElement> out;
  for (auto& [e, p] : bounded_products(gens, d)) out.push_back(p);
  return out;
}

// Basis of span(a) ∩ span(b).
std::vector<Polynomial> intersect_spans(const RingPtr& ring, const std::vector<Polynomial>& a,
                                        const std::vector<Polynomial>& b) {
  LinearSpan span(ring);
  for (const auto& v : a) span.insert(v);
  LinearSpan common(ring);
  for (const auto& v : b) {
    auto ins = span.insert(v);
    if (ins.independent) continue;
    Polynomial w(ring);
    for (std::size_t k = a.size(); k < ins.relation.size(); ++k)
      if (!ins.relation[k].is_zero()) w += b[k - a.size()].scaled(ins.relation[k]);
    if (!w.is_zero()) common.insert(w);
  }
  return common.basis();
}

std::string join(const std::vector<AlgebraElement>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].to_string();
  return os.str();
}

// Round trip of express_in_localization with invariant coefficients.
bool express_round_trip(const ExponentialMap& phi, const AlgebraElement& x_min, const AlgebraElement& a) {
  LocalizationExpression e = express_in_localization(phi, x_min, a);
  for (const auto& h : e.h)
    if (!is_invariant(phi, h)) return false;
  return evaluate(e, x_min) == e.c.pow(e.m) * a;
}

}  // namespace

const ExponentialMap& CatalogEntry::map(std::string_view wanted) const {
  for (const auto& m : maps)
    if (m.name() == wanted) return m;
  throw Error(ErrorCode::UnknownName, "no map '" + std::string(wanted) + "' in " + name);
}

const WeightVector& CatalogEntry::weight(std::string_view wanted) const {
  for (const auto& [n, w] : weights)
    if (n == wanted) return w;
  throw Error(ErrorCode::UnknownName, "no weights '" + std::string(wanted) + "' in " + name);
}

AlgebraElement random_subalgebra_element(const std::vector<AlgebraElement>& gens, int d, int max_terms,
                                         std::mt19937_64& rng) {
  auto products = bounded_products(gens, d);
  const AlgebraPtr& alg = gens.front().owner();
  std::uniform_int_distribution<std::size_t> pick(0, products.size() - 1);
  std::uniform_int_distribution<int> count(1, std::max(1, max_terms));
  std::uniform_int_distribution<long> coeff(-3, 3);
  AlgebraElement sum = scalar(alg, 0);
  const int n = count(rng);
  for (int k = 0; k < n; ++k) {
    long c = 0;
    while (c == 0) c = coeff(rng);
    sum += products[pick(rng)].second.scaled(Coeff(alg->field(), c));
  }
  return sum;
}

// ------------------------------------------------------------------ Russell

CatalogEntry russell(std::uint64_t p) {
  const Field field(p);
  RingPtr ring = PolyRing::create(field, {"x", "y", "z", "t"});
  auto v = [&](const char* n) { return Polynomial::variable(ring, n); };
  Polynomial rel = v("x") + v("x").pow(2) * v("y") + v("z").pow(2) + v("t").pow(3);
  AlgebraPtr alg = Algebra::create(ring, rel, MonomialOrder::lex({"y", "z", "t", "x"}), std::string("y"));

  const RingPtr& ru = alg->ring_u();
  auto V = [&](const char* n) { return Polynomial::variable(ru, n); };
  auto C = [&](long c) { return Polynomial::constant(ru, c); };
  const Polynomial x = V("x"), y = V("y"), z = V("z"), t = V("t"), u = V("U");
  ExponentialMap phi1(alg, {x, y + C(2) * z * u - x.pow(2) * u.pow(2), z - x.pow(2) * u, t}, "phi1");
  ExponentialMap phi2(alg, {x, y + C(3) * t.pow(2) * u - C(3) * x.pow(2) * t * u.pow(2) + x.pow(4) * u.pow(3), z,
                            t - x.pow(2) * u},
                      "phi2");

  CatalogEntry entry;
  entry.name = "russell";
  entry.algebra = alg;
  entry.maps = {phi1, phi2};
  entry.weights = {{"w1", WeightVector({{"x", -1}, {"y", 2}, {"z", 0}, {"t", 0}})},
                   {"w2", WeightVector({{"x", 6}, {"y", -6}, {"z", 3}, {"t", 2}})}};
  entry.documented_facts = [](const CatalogEntry& e, const FactOptions& opt) {
    std::vector<FactResult> out;
    const AlgebraPtr& alg = e.algebra;
    const ExponentialMap& phi1 = e.map("phi1");
    const ExponentialMap& phi2 = e.map("phi2");
    const bool char2 = alg->field().characteristic() == 2;
    std::mt19937_64 rng(opt.seed);

    out.push_back(fact("verify phi1", verified(phi1)));
    out.push_back(fact("verify phi2", verified(phi2)));

    {
      const RingPtr& lr = alg->laurent_ring();
      auto L = [&](const char* n) { return Polynomial::variable(lr, n); };
      Polynomial inv_x2 = Polynomial::monomial(lr, Monomial{-2}, Coeff::one(alg->field()));
      Polynomial expected = -(inv_x2 * (L("x") + L("z").pow(2) + L("t").pow(3)));
      Polynomial got = laurent_embed(generator(alg, "y"));
      out.push_back(fact("laurent image of y", got == expected, to_string(got)));
    }

    auto suite = russell_invariant_suite(e, opt.max_degree);
    out.insert(out.end(), suite.begin(), suite.end());

    FiltrationContext ctx(alg, e.weight("w1"));
    {
      const RingPtr& r = alg->ring();
      auto v = [&](const char* n) { return Polynomial::variable(r, n); };
      Polynomial expected = v("x").pow(2) * v("y") + v("z").pow(2) + v("t").pow(3);
      out.push_back(fact("gr(R) relation under w1", ctx.graded_model()->relation() == expected,
                         to_string(ctx.graded_model()->relation())));
    }
    const std::vector<std::pair<const ExponentialMap*, std::vector<AlgebraElement>>> cases = {
        {&phi1, elements(alg, {"x", "t"})}, {&phi2, elements(alg, {"x", "z"})}};
    for (const auto& [phi, invariant_gens] : cases) {
      HomogenizedMap bar = homogenize_map(ctx, *phi);
      out.push_back(fact("grdegU(w1, " + phi->name() + ") = 2", bar.grdegU == 2, bar.grdegU.get_str()));
      out.push_back(fact(phi->name() + "_bar verifies on gr(R)", bar.report.passed() && !bar.report.trivial,
                         images_to_string(bar.map)));
      std::vector<AlgebraElement> samples;
      for (unsigned k = 0; k < opt.samples; ++k)
        samples.push_back(random_subalgebra_element(invariant_gens, 4, 3, rng));
      out.push_back(fact("top parts of " + phi->name() + "-invariants are invariant",
                         check_invariant_top_parts(ctx, bar, samples)));
    }
    {
      const mpq_class g = compute_grdegU(ctx, phi1);
      auto s = support_set(ctx, phi1, generator(alg, "y"), g);
      const std::set<unsigned> expected = char2 ? std::set<unsigned>{0, 2} : std::set<unsigned>{0, 1, 2};
      out.push_back(fact("S(y) under phi1", s == expected, to_string(s)));
    }
    {
      // w2 makes the relation homogeneous; z^2 + t^3 splits with mu = {1}.
      const WeightVector& w2 = e.weight("w2");
      out.push_back(fact("relation is w2-homogeneous", is_homogeneous(alg->relation(), w2)));
      const RingPtr& r = alg->ring();
      Polynomial g = Polynomial::variable(r, "z").pow(2) + Polynomial::variable(r, "t").pow(3);
      HomogFactorization f = weighted_homog_factor(g, w2);
      const bool ok = f.lambda.is_one() && f.z_power == 0 && f.t_power == 0 && f.mu.size() == 1 && f.mu[0].is_one();
      out.push_back(fact("z^2 + t^3 factors under w2", ok));
    }
    {
      MinimalDegree m1 = min_positive_degree(phi1, 0, opt.seed);
      out.push_back(fact("min positive phi1-degree is 1 at z",
                         m1.degree == 1 && m1.element == generator(alg, "z"), m1.element.to_string()));
      out.push_back(fact("power support of z under phi1", check_power_support(phi1, m1.element)));
      MinimalDegree m2 = min_positive_degree(phi2, 0, opt.seed);
      out.push_back(fact("min positive phi2-degree is 1", m2.degree == 1, m2.element.to_string()));
      bool round_trip = true;
      for (unsigned k = 0; k < opt.samples && round_trip; ++k) {
        AlgebraElement a = random_element(alg, 3, 4, rng);
        round_trip = express_round_trip(phi1, m1.element, a) && express_round_trip(phi2, m2.element, a);
      }
      out.push_back(fact("express_in_localization round trip", round_trip));
    }
    if (alg->field().is_rational()) {
      auto o = lemma0_check(phi1, scalar(alg, 1), scalar(alg, 1), generator(alg, "x"), generator(alg, "t"), 2, 2);
      out.push_back(fact("lemma0 on x^2 + t^2", o.hypotheses_hold && o.conclusion_holds));
    } else {
      auto w = lemma0_explore(phi1, 200, opt.seed);
      std::string detail = "no witness found";
      if (w)
        detail = "c1 = " + w->c1.to_string() + ", c2 = " + w->c2.to_string() + ", a = " + w->a.to_string() +
                 ", b = " + w->b.to_string() + ", n = " + std::to_string(w->n) + ", m = " + std::to_string(w->m);
      out.push_back(fact("lemma0 explorer (p-power exponents)", true, detail));
    }
    return out;
  };
  return entry;
}

std::vector<FactResult> russell_invariant_suite(const CatalogEntry& entry, int d) {
  std::vector<FactResult> out;
  const AlgebraPtr& alg = entry.algebra;
  const ExponentialMap& phi1 = entry.map("phi1");
  const ExponentialMap& phi2 = entry.map("phi2");
  auto g = [&](const char* n) { return generator(alg, n); };

  out.push_back(fact("x, t are phi1-invariant", is_invariant(phi1, g("x")) && is_invariant(phi1, g("t"))));
  out.push_back(fact("z, y are not phi1-invariant", !is_invariant(phi1, g("z")) && !is_invariant(phi1, g("y"))));
  out.push_back(fact("x, z are phi2-invariant", is_invariant(phi2, g("x")) && is_invariant(phi2, g("z"))));
  out.push_back(fact("t, y are not phi2-invariant", !is_invariant(phi2, g("t")) && !is_invariant(phi2, g("y"))));

  const std::string bound = " (degree <= " + std::to_string(d) + ")";
  const auto xt = product_span(elements(alg, {"x", "t"}), d);
  const auto xz = product_span(elements(alg, {"x", "z"}), d);
  out.push_back(fact("phi1-invariants = k[x,t]" + bound, same_span(bounded_invariants(phi1, d), xt)));
  out.push_back(fact("phi2-invariants = k[x,z]" + bound, same_span(bounded_invariants(phi2, d), xz)));

  auto common = subalgebra_intersection_bounded(elements(alg, {"x", "t"}), elements(alg, {"x", "z"}), d);
  std::vector<AlgebraElement> powers;
  for (int i = 0; i <= d; ++i) powers.push_back(g("x").pow(static_cast<unsigned>(i)));
  out.push_back(fact("k[x,t] ∩ k[x,z] = k[x]" + bound, same_span(common, powers), join(common)));
  return out;
}

// -------------------------------------------------------- coordinate maps

CatalogEntry coordinate_maps(unsigned n, std::uint64_t p) {
  if (n < 1 || n > 4) throw Error(ErrorCode::InvalidArgs, "coordinate maps need 1 <= n <= 4");
  std::vector<std::string> names;
  for (unsigned i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
  RingPtr ring = PolyRing::create(Field(p), names);
  AlgebraPtr alg = Algebra::free(ring);
  CatalogEntry entry;
  entry.name = "coordinate";
  entry.algebra = alg;
  for (unsigned i = 0; i < n; ++i) {
    std::vector<Polynomial> images;
    for (unsigned j = 0; j < n; ++j) {
      Polynomial im = Polynomial::variable(alg->ring_u(), j);
      if (i == j) im += Polynomial::variable(alg->ring_u(), alg->u_index());
      images.push_back(std::move(im));
    }
    entry.maps.emplace_back(alg, std::move(images), "phi" + std::to_string(i + 1));
  }
  WeightVector w;
  for (const auto& name : names) w.set(name, 1);
  entry.weights = {{"standard", w}};

  entry.documented_facts = [](const CatalogEntry& e, const FactOptions& opt) {
    std::vector<FactResult> out;
    const AlgebraPtr& alg = e.algebra;
    for (const auto& phi : e.maps) out.push_back(fact("verify " + phi.name(), verified(phi)));

    const auto monomials = alg->standard_monomials(opt.max_degree);
    bool moved = true;
    for (const auto& m : monomials) {
      if (m == Monomial{}) continue;
      AlgebraElement a(alg, Polynomial::monomial(alg->ring(), m, Coeff::one(alg->field())));
      const bool some =
          std::any_of(e.maps.begin(), e.maps.end(), [&](const ExponentialMap& phi) { return !is_invariant(phi, a); });
      moved = moved && some;
    }
    out.push_back(fact("every nonconstant monomial is moved by some phi_i", moved));

    std::vector<Polynomial> common;
    for (const auto& b : bounded_invariants(e.maps.front(), opt.max_degree)) common.push_back(b.rep());
    for (std::size_t i = 1; i < e.maps.size(); ++i) {
      std::vector<Polynomial> next;
      for (const auto& b : bounded_invariants(e.maps[i], opt.max_degree)) next.push_back(b.rep());
      common = intersect_spans(alg->ring(), common, next);
    }
    const bool constants = common.size() == 1 && common.front().is_constant();
    out.push_back(fact("common invariants are the constants (degree <= " + std::to_string(opt.max_degree) + ")",
                       constants));
    return out;
  };
  return entry;
}

// -------------------------------------------------------------- char 2 plane

CatalogEntry char2_plane() {
  RingPtr ring = PolyRing::create(Field(2), {"X", "Y"});
  AlgebraPtr alg = Algebra::free(ring, MonomialOrder::lex({"Y", "X"}));
  const RingPtr& ru = alg->ring_u();
  const Polynomial X = Polynomial::variable(ru, "X"), Y = Polynomial::variable(ru, "Y"),
                   U = Polynomial::variable(ru, "U");
  CatalogEntry entry;
  entry.name = "char2_plane";
  entry.algebra = alg;
  entry.maps = {ExponentialMap(alg, {X, Y + X * U.pow(2)}, "phi")};
  entry.weights = {{"standard", WeightVector({{"X", 1}, {"Y", 1}})}};
  entry.documented_facts = [](const CatalogEntry& e, const FactOptions& opt) {
    std::vector<FactResult> out;
    const AlgebraPtr& alg = e.algebra;
    const ExponentialMap& phi = e.map("phi");
    const AlgebraElement X = generator(alg, "X"), Y = generator(alg, "Y");
    std::mt19937_64 rng(opt.seed);
    out.push_back(fact("verify phi", verified(phi)));

    MinimalDegree m = min_positive_degree(phi, 50, opt.seed);
    out.push_back(fact("min positive degree is 2 at Y", m.degree == 2 && m.element == Y, m.element.to_string()));

    std::optional<int> brute;
    for (const auto& mono : alg->standard_monomials(5)) {
      auto d = phi_degree(phi, AlgebraElement(alg, Polynomial::monomial(alg->ring(), mono, Coeff::one(alg->field()))));
      if (d && *d > 0 && (!brute || *d < *brute)) brute = d;
    }
    out.push_back(fact("brute-force minimum over monomials of degree <= 5 is 2", brute == 2));

    auto ds = u_coefficients(phi, Y);
    std::set<unsigned> support;
    for (std::size_t i = 1; i < ds.size(); ++i)
      if (!ds[i].is_zero()) support.insert(static_cast<unsigned>(i));
    out.push_back(fact("D-support of Y is {2}", support == std::set<unsigned>{2}, to_string(support)));
    out.push_back(fact("D^2(Y) = X is invariant", ds.size() > 2 && ds[2] == X && is_invariant(phi, X)));
    out.push_back(fact("power support of Y", check_power_support(phi, Y)));
    out.push_back(fact("D^2 D^2 (Y^2) = C(4,2) D^4(Y^2)", check_iterative(phi, 2, 2, Y.pow(2))));

    std::vector<AlgebraElement> samples = {Y, Y.pow(2), X * Y + Y.pow(3), X};
    for (unsigned k = 0; k < opt.samples; ++k) samples.push_back(random_element(alg, 5, 4, rng));
    out.push_back(fact("phi-degrees are even", check_degree_divisibility(phi, 2, samples)));

    bool round_trip = express_round_trip(phi, Y, Y.pow(2) + Y);
    for (unsigned k = 0; k < opt.samples && round_trip; ++k)
      round_trip = express_round_trip(phi, Y, random_element(alg, 4, 4, rng));
    out.push_back(fact("express_in_localization round trip", round_trip));
    return out;
  };
  return entry;
}

// ------------------------------------------------ char p plane with a p-power shift

std::vector<std::pair<mpq_class, mpq_class>> example2_triples(std::uint64_t p) {
  const long q = static_cast<long>(p);
  return {{mpq_class(1 - 2 * q), mpq_class(1)}, {mpq_class(1 - q), mpq_class(1)}, {mpq_class(1), mpq_class(q + 1)}};
}

Example2Result example2(std::uint64_t p, const mpq_class& alpha, const mpq_class& beta) {
  if (p == 0) throw Error(ErrorCode::InvalidCharacteristic, "example2 needs a prime characteristic");
  RingPtr ring = PolyRing::create(Field(p), {"X", "Y"});
  AlgebraPtr alg = Algebra::free(ring, MonomialOrder::lex({"Y", "X"}));
  const RingPtr& ru = alg->ring_u();
  const Polynomial X = Polynomial::variable(ru, "X"), Y = Polynomial::variable(ru, "Y"),
                   U = Polynomial::variable(ru, "U");
  const unsigned pu = static_cast<unsigned>(p);
  ExponentialMap phi(alg, {X, Y + U + X * U.pow(pu)}, "phi");
  FiltrationContext ctx(alg, WeightVector({{"X", alpha}, {"Y", beta}}));

  mpq_class slope = (beta - alpha) / mpq_class(static_cast<long>(p));
  slope.canonicalize();
  Example2Result r{Example2Case::Equal, homogenize_map(ctx, phi), beta, Y + U + X * U.pow(pu)};
  if (beta < slope) {
    r.which = Example2Case::BetaSmaller;
    r.expected_Y = Y + U;
  } else if (beta > slope) {
    r.which = Example2Case::BetaLarger;
    r.expected_grdegU = slope;
    r.expected_Y = Y + X * U.pow(pu);
  }
  r.expected_Y = r.expected_Y.rebase(ctx.graded_model()->ring_u());
  return r;
}

CatalogEntry example2_entry(std::uint64_t p) {
  if (p == 0) throw Error(ErrorCode::InvalidCharacteristic, "example2 needs a prime characteristic");
  CatalogEntry entry;
  entry.name = "example2";
  entry.algebra = Algebra::free(PolyRing::create(Field(p), {"X", "Y"}), MonomialOrder::lex({"Y", "X"}));
  entry.documented_facts = [p](const CatalogEntry&, const FactOptions&) {
    std::vector<FactResult> out;
    for (const auto& [alpha, beta] : example2_triples(p)) {
      Example2Result r = example2(p, alpha, beta);
      const std::string label =
          "(p, alpha, beta) = (" + std::to_string(p) + ", " + alpha.get_str() + ", " + beta.get_str() + ")";
      const ExponentialMap& bar = r.homogenized.map;
      const bool ok = r.homogenized.grdegU == r.expected_grdegU && bar.image(1) == r.expected_Y &&
                      bar.image(0) == Polynomial::variable(bar.algebra()->ring_u(), 0);
      out.push_back(fact(label, ok, "grdegU = " + r.homogenized.grdegU.get_str() + ", " + images_to_string(bar)));
    }
    return out;
  };
  return entry;
}

// ------------------------------------------- sums of powers with invariant scalars

Lemma0Outcome lemma0_check(const ExponentialMap& phi, const AlgebraElement& c1, const AlgebraElement& c2,
                           const AlgebraElement& a, const AlgebraElement& b, unsigned n, unsigned m) {
  if (n < 2 || m < 2) throw Error(ErrorCode::InvalidExponents, "exponents must be at least 2");
  if (c1.is_zero() || c2.is_zero() || !is_invariant(phi, c1) || !is_invariant(phi, c2))
    throw Error(ErrorCode::NonInvariantScalars, "c1 and c2 must be nonzero invariants");
  AlgebraElement sum = c1 * a.pow(n) + c2 * b.pow(m);
  Lemma0Outcome o;
  o.hypotheses_hold = !sum.is_zero() && is_invariant(phi, sum);
  o.conclusion_holds = is_invariant(phi, a) && is_invariant(phi, b);
  return o;
}

std::optional<Lemma0Instance> lemma0_explore(const ExponentialMap& phi, unsigned trials, std::uint64_t seed) {
  const AlgebraPtr& alg = phi.algebra();
  const std::uint64_t p = alg->field().characteristic();
  if (p == 0) return std::nullopt;
  std::mt19937_64 rng(seed);

  std::vector<AlgebraElement> invariants;
  for (const auto& b : bounded_invariants(phi, 2))
    if (!b.rep().is_constant()) invariants.push_back(b);
  if (invariants.empty()) invariants.push_back(scalar(alg, 1));
  std::vector<unsigned> powers = {static_cast<unsigned>(p)};
  if (p * p <= 4) powers.push_back(static_cast<unsigned>(p * p));

  std::uniform_int_distribution<std::size_t> pick_inv(0, invariants.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_pow(0, powers.size() - 1);
  std::bernoulli_distribution shifted(0.5);
  for (unsigned trial = 0; trial < trials; ++trial) {
    AlgebraElement a = random_element(alg, 2, 2, rng);
    if (is_invariant(phi, a)) continue;
    const unsigned q = powers[pick_pow(rng)];
    // b = a + h with h invariant makes a^q - b^q = -h^q invariant in char p.
    AlgebraElement b = shifted(rng) ? a + invariants[pick_inv(rng)] : random_element(alg, 2, 2, rng);
    const AlgebraElement c1 = scalar(alg, 1);
    const AlgebraElement c2 = scalar(alg, -1);
    Lemma0Outcome o = lemma0_check(phi, c1, c2, a, b, q, q);
    if (o.hypotheses_hold && !o.conclusion_holds) return Lemma0Instance{c1, c2, a, b, q, q};
  }
  return std::nullopt;
}

// -------------------------------------------------------------- non-examples

std::vector<FactResult> nonexample_suite() {
  std::vector<FactResult> out;
  {
    AlgebraPtr alg = Algebra::free(PolyRing::create(Field(0), {"X"}));
    const Polynomial X = Polynomial::variable(alg->ring_u(), "X"), U = Polynomial::variable(alg->ring_u(), "U");
    ExponentialMap psi(alg, {X + X * U}, "psi");
    VerificationReport r = verify(psi);
    const CheckResult& comp = r.checks.back();
    const std::string w = comp.witness ? to_string(*comp.witness) : "";
    out.push_back(fact("psi(X) = X + X*U fails composition with witness X*S*U", !comp.passed && w == "X*S*U", w));
  }
  for (std::uint64_t p : {0, 2, 3, 5}) {
    AlgebraPtr alg = Algebra::free(PolyRing::create(Field(p), {"Y"}));
    const Polynomial Y = Polynomial::variable(alg->ring_u(), "Y"), U = Polynomial::variable(alg->ring_u(), "U");
    ExponentialMap phi(alg, {Y + U.pow(2)}, "square_shift");
    VerificationReport r = verify(phi);
    const CheckResult& comp = r.checks.back();
    const std::string w = comp.witness ? to_string(*comp.witness) : "";
    const std::string label = "Y -> Y + U^2 in char " + std::to_string(p);
    if (p == 2)
      out.push_back(fact(label + " passes", r.passed()));
    else
      out.push_back(fact(label + " fails with witness 2*S*U", !comp.passed && w == "2*S*U", w));
  }
  {
    AlgebraPtr alg = Algebra::free(PolyRing::create(Field(0), {"X", "Y"}));
    VerificationReport r = verify(ExponentialMap::inclusion(alg));
    out.push_back(fact("inclusion passes and is trivial", r.passed() && r.trivial));
  }
  return out;
}

CatalogEntry nonexamples_entry() {
  AlgebraPtr alg = Algebra::free(PolyRing::create(Field(0), {"X"}));
  const Polynomial X = Polynomial::variable(alg->ring_u(), "X"), U = Polynomial::variable(alg->ring_u(), "U");
  CatalogEntry entry;
  entry.name = "nonexamples";
  entry.algebra = alg;
  entry.maps = {ExponentialMap(alg, {X + X * U}, "psi")};
  entry.documented_facts = [](const CatalogEntry&, const FactOptions&) { return nonexample_suite(); };
  return entry;
}

// ------------------------------------------------------------------ registry

std::vector<std::string> catalog_names() { return {"russell", "coordinate", "char2_plane", "example2", "nonexamples"}; }

CatalogEntry catalog_entry(std::string_view name, std::optional<std::uint64_t> p) {
  if (name == "russell") return russell(p.value_or(0));
  if (name == "coordinate") return coordinate_maps(3, p.value_or(0));
  if (name == "char2_plane") {
    if (p && *p != 2) throw Error(ErrorCode::InvalidArgs, "char2_plane is defined in characteristic 2 only");
    return char2_plane();
  }
  if (name == "example2") return example2_entry(p.value_or(2));
  if (name == "nonexamples") return nonexamples_entry();
  throw Error(ErrorCode::UnknownName, "no catalog entry '" + std::string(name) + "'");
}

}  // namespace akit
