#include <gtest/gtest.h>

#include <limits>
#include <random>
#include <stdexcept>

#include "support.hpp"

namespace akit {
namespace {

using testing::code_of;
using testing::el;
using testing::kSeed;

struct Russell {
  explicit Russell(std::uint64_t p = 0)
      : entry(russell(p)), alg(entry.algebra), phi1(entry.map("phi1")), phi2(entry.map("phi2")) {}
  CatalogEntry entry;
  AlgebraPtr alg;
  ExponentialMap phi1, phi2;
  AlgebraElement x() const { return el(alg, "x"); }
  AlgebraElement y() const { return el(alg, "y"); }
  AlgebraElement z() const { return el(alg, "z"); }
  AlgebraElement t() const { return el(alg, "t"); }
};

// k[name] with name -> image(name, U).
ExponentialMap one_variable_map(std::uint64_t p, const char* name,
                                const std::function<Polynomial(const Polynomial&, const Polynomial&)>& image) {
  AlgebraPtr alg = Algebra::free(PolyRing::create(Field(p), {name}));
  const RingPtr& ru = alg->ring_u();
  return ExponentialMap(alg, {image(Polynomial::variable(ru, name), Polynomial::variable(ru, "U"))});
}

const CheckResult& check(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.check == name) return c;
  throw std::runtime_error("missing check " + name);
}

TEST(Apply, RelationExpandsBackToItself) {
  Russell r;
  const RingPtr& ru = r.alg->ring_u();
  std::vector<Polynomial> images = r.phi1.images();
  auto raw = [&](const char* n) { return Polynomial::variable(r.alg->ring(), n); };
  Polynomial rel = raw("x") + raw("x").pow(2) * raw("y") + raw("z").pow(2) + raw("t").pow(3);
  // Unreduced substitution: every U-term must cancel on its own.
  Polynomial expanded = substitute(rel, images, ru);
  EXPECT_EQ(expanded, rel.rebase(ru));
}

TEST(Apply, Examples) {
  Russell r;
  EXPECT_EQ(apply(r.phi1, r.x()), r.x().rep().rebase(r.alg->ring_u()));
  for (const auto& phi : r.entry.maps)
    EXPECT_EQ(apply(phi, scalar(r.alg, 1)), Polynomial::constant(r.alg->ring_u(), 1));
}

TEST(Verify, RussellMapsPassInEveryCharacteristic) {
  for (std::uint64_t p : testing::kChars) {
    Russell r(p);
    for (const auto& phi : r.entry.maps) {
      VerificationReport v = verify(phi);
      EXPECT_TRUE(v.passed()) << phi.name() << " p=" << p << "\n" << to_string(v, phi);
      EXPECT_FALSE(v.trivial);
      EXPECT_EQ(v.checks.size(), 3u);
    }
  }
}

TEST(Verify, ScalingMapFailsCompositionWithWitness) {
  ExponentialMap psi = one_variable_map(0, "X", [](const Polynomial& X, const Polynomial& U) { return X + X * U; });
  VerificationReport v = verify(psi);
  EXPECT_FALSE(v.passed());
  EXPECT_TRUE(check(v, "well_defined").passed);
  EXPECT_TRUE(check(v, "identity_at_zero").passed);
  const CheckResult& c = check(v, "composition");
  ASSERT_FALSE(c.passed);
  ASSERT_TRUE(c.witness);
  // (X + X S) + (X + X S) U  -  (X + X (S + U))  =  X S U
  const RingPtr& rsu = psi.algebra()->ring_su();
  auto V = [&](const char* n) { return Polynomial::variable(rsu, n); };
  EXPECT_EQ(*c.witness, V("X") * V("S") * V("U"));
  EXPECT_EQ(to_string(*c.witness), "X*S*U");
}

TEST(Verify, SquareShiftDependsOnCharacteristic) {
  for (std::uint64_t p : {0, 2, 3, 5}) {
    ExponentialMap phi =
        one_variable_map(p, "Y", [](const Polynomial& Y, const Polynomial& U) { return Y + U.pow(2); });
    VerificationReport v = verify(phi);
    if (p == 2) {
      EXPECT_TRUE(v.passed());
      continue;
    }
    const CheckResult& c = check(v, "composition");
    ASSERT_FALSE(c.passed) << p;
    const RingPtr& rsu = phi.algebra()->ring_su();
    // (S + U)^2 - S^2 - U^2
    Polynomial S = Polynomial::variable(rsu, "S"), U = Polynomial::variable(rsu, "U");
    EXPECT_EQ(*c.witness, (S + U).pow(2) - S.pow(2) - U.pow(2));
    EXPECT_EQ(to_string(*c.witness), "2*S*U");
  }
}

TEST(Verify, IdentityAtZeroAndWellDefinedCanFail) {
  ExponentialMap shifted = one_variable_map(0, "X", [](const Polynomial& X, const Polynomial& U) {
    return X + Polynomial::constant(X.ring(), 1) + U;
  });
  EXPECT_FALSE(check(verify(shifted), "identity_at_zero").passed);

  Russell r;
  const RingPtr& ru = r.alg->ring_u();
  auto V = [&](const char* n) { return Polynomial::variable(ru, n); };
  ExponentialMap broken(r.alg, {V("x"), V("y"), V("z") + V("U"), V("t")});
  VerificationReport v = verify(broken);
  EXPECT_FALSE(check(v, "well_defined").passed);
  EXPECT_TRUE(check(v, "identity_at_zero").passed);
}

TEST(Verify, InclusionIsTrivial) {
  Russell r;
  VerificationReport v = verify(ExponentialMap::inclusion(r.alg));
  EXPECT_TRUE(v.passed());
  EXPECT_TRUE(v.trivial);
}

TEST(Verify, IntegerImagesSurviveReductionModP) {
  Russell q;
  for (std::uint64_t p : {2, 3, 5})
    for (const auto& phi : q.entry.maps) {
      ExponentialMap reduced = phi.over(Field(p));
      EXPECT_TRUE(verify(reduced).passed()) << phi.name() << " mod " << p;
      EXPECT_EQ(reduced.algebra()->field().characteristic(), p);
    }
  auto coords = coordinate_maps(3, 0);
  for (std::uint64_t p : {2, 3, 5})
    for (const auto& phi : coords.maps) EXPECT_TRUE(verify(phi.over(Field(p))).passed());
}

TEST(HigherDerivation, CoefficientExamples) {
  Russell r;
  EXPECT_EQ(coefficient_D(r.phi1, 1, r.z()), -r.x().pow(2));
  EXPECT_EQ(coefficient_D(r.phi2, 3, r.y()), r.x().pow(4));
  EXPECT_TRUE(coefficient_D(r.phi2, 5, r.y()).is_zero());
  EXPECT_EQ(coefficient_D(r.phi2, 0, r.y()), r.y());
}

TEST(HigherDerivation, DegreeAndInvarianceExamples) {
  for (std::uint64_t p : testing::kChars) {
    Russell r(p);
    EXPECT_EQ(phi_degree(r.phi1, r.z()), 1);
    EXPECT_EQ(phi_degree(r.phi2, r.y()), 3);
    EXPECT_EQ(phi_degree(r.phi1, r.x()), 0);
    EXPECT_EQ(phi_degree(r.phi1, scalar(r.alg, 0)), std::nullopt);
    EXPECT_TRUE(is_invariant(r.phi1, r.t()));
    EXPECT_TRUE(is_invariant(r.phi2, r.z()));
    EXPECT_FALSE(is_invariant(r.phi1, r.z()));
    EXPECT_TRUE(is_invariant(r.phi2, scalar(r.alg, 7)));
  }
}

TEST(HigherDerivation, IterativeExamples) {
  Russell r;
  // D1 D1 (y) = D1(2 z) = -2 x^2 = 2 D2(y)
  EXPECT_EQ(coefficient_D(r.phi1, 1, coefficient_D(r.phi1, 1, r.y())), scalar(r.alg, -2) * r.x().pow(2));
  EXPECT_TRUE(check_iterative(r.phi1, 1, 1, r.y()));

  CatalogEntry plane = char2_plane();
  const ExponentialMap& phi = plane.map("phi");
  AlgebraElement Y2 = el(plane.algebra, "Y").pow(2);
  EXPECT_TRUE(coefficient_D(phi, 2, coefficient_D(phi, 2, Y2)).is_zero());
  EXPECT_TRUE(binom_residue(4, 2, Field(2)).is_zero());
  EXPECT_TRUE(check_iterative(phi, 2, 2, Y2));
  EXPECT_TRUE(check_iterative(r.phi2, 0, 2, r.y()));
}

TEST(HigherDerivation, LeibnizExamples) {
  Russell r;
  EXPECT_EQ(coefficient_D(r.phi1, 2, r.z().pow(2)), r.x().pow(4));
  EXPECT_TRUE(check_leibniz(r.phi1, 2, r.z(), r.z()));
  EXPECT_TRUE(check_leibniz(r.phi2, 3, scalar(r.alg, 1), r.y()));
  Russell f5(5);
  EXPECT_TRUE(check_leibniz(f5.phi2, 4, f5.y(), f5.t()));
}

struct MapUnderTest {
  std::string label;
  ExponentialMap phi;
};

std::vector<MapUnderTest> maps_in_char(std::uint64_t p) {
  std::vector<MapUnderTest> out;
  Russell r(p);
  out.push_back({"phi1", r.phi1});
  out.push_back({"phi2", r.phi2});
  if (p == 2) out.push_back({"char2 plane", char2_plane().map("phi")});
  return out;
}

// 50 random pairs per map and characteristic, normal forms of degree <= 6.
TEST(HigherDerivation, LeibnizAndIterativeOnRandomElements) {
  std::mt19937_64 rng(kSeed);
  for (std::uint64_t p : testing::kChars) {
    for (const auto& [label, phi] : maps_in_char(p)) {
      for (int k = 0; k < 50; ++k) {
        AlgebraElement a = random_element(phi.algebra(), 6, 3, rng);
        AlgebraElement b = random_element(phi.algebra(), 6, 3, rng);
        const int top = phi_degree(phi, a * b).value_or(0);
        for (int n = 0; n <= top; ++n)
          ASSERT_TRUE(check_leibniz(phi, n, a, b)) << label << " p=" << p << " n=" << n;
        for (unsigned i = 0; i <= 6; ++i)
          for (unsigned j = 0; i + j <= 6; ++j)
            ASSERT_TRUE(check_iterative(phi, i, j, a)) << label << " p=" << p << " i=" << i << " j=" << j;
      }
    }
  }
}

TEST(DegreeFunction, LawsOnRandomElements) {
  std::mt19937_64 rng(kSeed + 1);
  for (std::uint64_t p : testing::kChars) {
    for (const auto& [label, phi] : maps_in_char(p)) {
      for (int k = 0; k < 40; ++k) {
        AlgebraElement a = random_element(phi.algebra(), 5, 3, rng);
        AlgebraElement b = random_element(phi.algebra(), 5, 3, rng);
        if (a.is_zero() || b.is_zero()) continue;
        const int da = *phi_degree(phi, a), db = *phi_degree(phi, b);
        EXPECT_EQ(phi_degree(phi, a * b), da + db) << label;
        auto sum = phi_degree(phi, a + b);
        if (sum) {
          EXPECT_LE(*sum, std::max(da, db)) << label;
        }
        // The degree of D^i(a) drops by at least i.
        for (int i = 0; i <= da; ++i) {
          auto di = phi_degree(phi, coefficient_D(phi, i, a));
          if (di) {
            EXPECT_LE(*di, da - i) << label;
          }
        }
      }
    }
  }
}

TEST(InvariantRing, FactorialClosednessContrapositive) {
  std::mt19937_64 rng(kSeed + 2);
  for (std::uint64_t p : testing::kChars) {
    Russell r(p);
    for (int k = 0; k < 40; ++k) {
      // phi1-invariants are generated by x and t.
      AlgebraElement c = testing::sample_in({r.x(), r.t()}, 4, rng);
      AlgebraElement d = testing::sample_in({r.x(), r.t()}, 4, rng);
      EXPECT_TRUE(is_invariant(r.phi1, c * d));
      AlgebraElement a = random_element(r.alg, 4, 3, rng);
      AlgebraElement b = random_element(r.alg, 4, 3, rng);
      if (b.is_zero() || is_invariant(r.phi1, a)) continue;
      EXPECT_FALSE(is_invariant(r.phi1, a * b)) << a.to_string() << " * " << b.to_string();
    }
  }
}

TEST(InvariantRing, NoAlgebraicDependenceOverInvariants) {
  std::mt19937_64 rng(kSeed + 3);
  std::uniform_int_distribution<int> deg(1, 3);
  for (std::uint64_t p : testing::kChars) {
    Russell r(p);
    int samples = 0;
    while (samples < 30) {
      AlgebraElement a = random_element(r.alg, 3, 3, rng);
      if (is_invariant(r.phi2, a)) continue;
      const int d = deg(rng);
      AlgebraElement sum = scalar(r.alg, 0);
      AlgebraElement lead = scalar(r.alg, 0);
      for (int i = 0; i <= d; ++i) {
        AlgebraElement ci = testing::sample_in({r.x(), r.z()}, 3, rng);
        if (i == d) {
          if (ci.is_zero()) ci = scalar(r.alg, 1);
          lead = ci;
        }
        sum += ci * a.pow(static_cast<unsigned>(i));
      }
      ASSERT_FALSE(lead.is_zero());
      EXPECT_FALSE(sum.is_zero()) << a.to_string();
      // The top coefficient c_d D^{dn}(a^d) is the leading U-coefficient.
      EXPECT_EQ(phi_degree(r.phi2, sum), d * *phi_degree(r.phi2, a));
      ++samples;
    }
  }
}

TEST(MinimalDegree, Examples) {
  Russell r;
  MinimalDegree m1 = min_positive_degree(r.phi1, 50, kSeed);
  EXPECT_EQ(m1.degree, 1);
  EXPECT_EQ(m1.element, r.z());

  CatalogEntry plane = char2_plane();
  MinimalDegree m2 = min_positive_degree(plane.map("phi"), 50, kSeed);
  EXPECT_EQ(m2.degree, 2);
  EXPECT_EQ(m2.element, el(plane.algebra, "Y"));

  CatalogEntry line = coordinate_maps(1, 0);
  MinimalDegree m3 = min_positive_degree(line.maps[0], 50, kSeed);
  EXPECT_EQ(m3.degree, 1);
  EXPECT_EQ(m3.element, el(line.algebra, "X1"));

  EXPECT_EQ(code_of([&] { min_positive_degree(ExponentialMap::inclusion(r.alg), 10); }), ErrorCode::TrivialMap);
}

// Brute force: every positive degree among monomials and small sums of them.
TEST(MinimalDegree, AgreesWithBruteForce) {
  std::mt19937_64 rng(kSeed + 4);
  for (std::uint64_t p : testing::kChars) {
    for (const auto& [label, phi] : maps_in_char(p)) {
      const int found = min_positive_degree(phi, 100, kSeed).degree;
      int brute = std::numeric_limits<int>::max();
      const AlgebraPtr& alg = phi.algebra();
      const auto monomials = alg->standard_monomials(5);
      for (const Monomial& m : monomials) {
        auto d = phi_degree(phi, make_element(alg, Polynomial::monomial(alg->ring(), m, Coeff::one(alg->field()))));
        if (d && *d > 0) brute = std::min(brute, *d);
      }
      for (int k = 0; k < 100; ++k) {
        auto d = phi_degree(phi, random_element(alg, 5, 3, rng));
        if (d && *d > 0) brute = std::min(brute, *d);
      }
      EXPECT_EQ(found, brute) << label << " p=" << p;
    }
  }
}

TEST(MinimalDegree, PowerSupportExamples) {
  CatalogEntry plane = char2_plane();
  const ExponentialMap& phi = plane.map("phi");
  AlgebraElement Y = el(plane.algebra, "Y");
  EXPECT_TRUE(check_power_support(phi, Y));
  EXPECT_EQ(coefficient_D(phi, 2, Y), el(plane.algebra, "X"));
  EXPECT_TRUE(is_invariant(phi, coefficient_D(phi, 2, Y)));

  Russell r;
  EXPECT_TRUE(check_power_support(r.phi1, r.z()));
  Russell r3(3);
  const RingPtr& ru = r3.alg->ring_u();
  auto V = [&](const char* n) { return Polynomial::variable(ru, n); };
  EXPECT_EQ(apply(r3.phi2, r3.t()), V("t") - V("x").pow(2) * V("U"));
  EXPECT_TRUE(check_power_support(r3.phi2, r3.t()));
  // In char 3 phi2(y) = y + x^4 U^3, support {3}; over Q the support {1, 2, 3} fails.
  EXPECT_TRUE(check_power_support(r3.phi2, r3.y()));
  EXPECT_FALSE(check_power_support(r.phi2, r.y()));
}

TEST(MinimalDegree, DegreeDivisibility) {
  CatalogEntry plane = char2_plane();
  const ExponentialMap& phi = plane.map("phi");
  AlgebraElement X = el(plane.algebra, "X"), Y = el(plane.algebra, "Y");
  const std::vector<AlgebraElement> samples{Y, Y.pow(2), X * Y + Y.pow(3), X};
  std::vector<int> degrees;
  for (const auto& s : samples) degrees.push_back(*phi_degree(phi, s));
  EXPECT_EQ(degrees, (std::vector<int>{2, 4, 6, 0}));
  EXPECT_TRUE(check_degree_divisibility(phi, 2, samples));
  EXPECT_FALSE(check_degree_divisibility(phi, 4, samples));

  std::mt19937_64 rng(kSeed + 5);
  Russell r;
  std::vector<AlgebraElement> random;
  for (int k = 0; k < 20; ++k) random.push_back(random_element(r.alg, 5, 3, rng));
  EXPECT_TRUE(check_degree_divisibility(r.phi1, 1, random));

  std::vector<AlgebraElement> plane_random;
  for (int k = 0; k < 40; ++k) plane_random.push_back(random_element(plane.algebra, 6, 3, rng));
  EXPECT_TRUE(check_degree_divisibility(phi, 2, plane_random));
}

void expect_round_trip(const ExponentialMap& phi, const AlgebraElement& x_min, const AlgebraElement& a) {
  LocalizationExpression e = express_in_localization(phi, x_min, a);
  for (const auto& h : e.h) EXPECT_TRUE(is_invariant(phi, h)) << h.to_string();
  EXPECT_EQ(e.c, coefficient_D(phi, static_cast<unsigned>(*phi_degree(phi, x_min)), x_min));
  EXPECT_EQ(evaluate(e, x_min), e.c.pow(e.m) * a) << a.to_string();
}

TEST(Localization, Examples) {
  Russell r;
  LocalizationExpression base = express_in_localization(r.phi1, r.z(), r.t());
  ASSERT_EQ(base.h.size(), 1u);
  EXPECT_EQ(base.h[0], r.t());
  EXPECT_EQ(base.m, 0u);

  CatalogEntry plane = char2_plane();
  AlgebraElement Y = el(plane.algebra, "Y");
  expect_round_trip(plane.map("phi"), Y, Y.pow(2) + Y);

  LocalizationExpression ey = express_in_localization(r.phi1, r.z(), r.y());
  EXPECT_EQ(ey.c, -r.x().pow(2));
  EXPECT_EQ(ey.h.size(), 3u);
  expect_round_trip(r.phi1, r.z(), r.y());
}

TEST(Localization, Errors) {
  Russell r;
  CatalogEntry plane = char2_plane();
  const ExponentialMap& phi = plane.map("phi");
  AlgebraElement Y = el(plane.algebra, "Y");
  // deg Y^2 = 4 does not divide deg Y = 2.
  EXPECT_EQ(code_of([&] { express_in_localization(phi, Y.pow(2), Y); }), ErrorCode::NonDivisibleDegree);
  EXPECT_EQ(code_of([&] { express_in_localization(r.phi1, r.x(), r.z()); }), ErrorCode::TrivialMap);
}

TEST(Localization, RoundTripOnRandomElements) {
  std::mt19937_64 rng(kSeed + 6);
  for (std::uint64_t p : testing::kChars) {
    for (const auto& [label, phi] : maps_in_char(p)) {
      MinimalDegree m = min_positive_degree(phi, 100, kSeed);
      for (int k = 0; k < 10; ++k) expect_round_trip(phi, m.element, random_element(phi.algebra(), 5, 3, rng));
    }
  }
}

TEST(Fractions, Examples) {
  Russell r;
  auto w = fraction_invariant_witness(r.phi1, r.z() * r.t(), r.z());
  ASSERT_TRUE(w);
  EXPECT_EQ(w->degree, 1);
  EXPECT_EQ(w->numerator_D, -r.x().pow(2) * r.t());
  EXPECT_EQ(w->denominator_D, -r.x().pow(2));
  EXPECT_EQ(r.z() * r.t() * w->denominator_D, r.z() * w->numerator_D);

  EXPECT_FALSE(fraction_invariant_witness(r.phi1, r.z(), r.t()));

  auto trivial = fraction_invariant_witness(r.phi1, r.t(), scalar(r.alg, 1));
  ASSERT_TRUE(trivial);
  EXPECT_EQ(trivial->degree, 0);
  EXPECT_EQ(trivial->numerator_D, r.t());
  EXPECT_EQ(trivial->denominator_D, scalar(r.alg, 1));

  EXPECT_EQ(code_of([&] { fraction_invariant_witness(r.phi1, r.z(), scalar(r.alg, 0)); }),
            ErrorCode::ZeroDenominator);
}

// a = c*f, b = c*g with f, g invariant and c arbitrary: a/b = f/g is invariant.
TEST(Fractions, InvariantFractionsHaveInvariantWitnesses) {
  std::mt19937_64 rng(kSeed + 7);
  for (std::uint64_t p : testing::kChars) {
    Russell r(p);
    for (int k = 0; k < 20; ++k) {
      AlgebraElement f = testing::sample_in({r.x(), r.t()}, 3, rng);
      AlgebraElement g = testing::sample_in({r.x(), r.t()}, 3, rng);
      AlgebraElement c = random_element(r.alg, 3, 3, rng);
      if (g.is_zero() || c.is_zero()) continue;
      auto w = fraction_invariant_witness(r.phi1, c * f, c * g);
      ASSERT_TRUE(w);
      EXPECT_TRUE(is_invariant(r.phi1, w->numerator_D));
      EXPECT_TRUE(is_invariant(r.phi1, w->denominator_D));
      EXPECT_EQ(c * f * w->denominator_D, c * g * w->numerator_D);
      EXPECT_FALSE(w->denominator_D.is_zero());
    }
  }
}

TEST(Invariants, BoundedInvariantsOfPhi1AreSpannedByXAndT) {
  Russell r;
  std::vector<AlgebraElement> expected;
  for (const auto& [e, prod] : bounded_products({r.x(), r.t()}, 4)) expected.push_back(prod);
  EXPECT_TRUE(same_span(bounded_invariants(r.phi1, 4), expected));
}

}  // namespace
}  // namespace akit
