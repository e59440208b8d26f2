#include "akit/grading.hpp"

#include <sstream>

namespace akit {

FiltrationContext::FiltrationContext(AlgebraPtr algebra, WeightVector weights)
    : algebra_(std::move(algebra)), weights_(std::move(weights)) {
  weights_.resolve(*algebra_->ring());
  if (algebra_->is_free()) {
    graded_ = algebra_;
    return;
  }
  const auto& sol = algebra_->laurent();
  if (!sol) throw Error(ErrorCode::NoLaurentModel, "weight filtrations need a Laurent model");
  const std::string& solved = algebra_->ring()->name(sol->solved_var);
  const Degree image_degree = weighted_degree(sol->image, weights_);
  if (!(image_degree == Degree(weights_.at(solved))))
    throw Error(ErrorCode::InconsistentWeights, "w(" + solved + ") = " + Degree(weights_.at(solved)).to_string() +
                                                    " but its Laurent image has degree " + image_degree.to_string());

  Polynomial top = top_component(algebra_->relation(), weights_);
  if (top.coefficient(*algebra_->relation_lead()).is_zero())
    throw Error(ErrorCode::UnsupportedFiltration, "leading monomial of the relation is not of top weight");
  graded_ = Algebra::create(algebra_->ring(), top, algebra_->order(), algebra_->solve_name());
}

Degree FiltrationContext::grdeg(const AlgebraElement& a) const { return filtration_degree(a, weights_); }

mpq_class compute_grdegU(const FiltrationContext& ctx, const ExponentialMap& phi) {
  const AlgebraPtr& alg = phi.algebra();
  std::optional<mpq_class> best;
  for (std::size_t g = 0; g < alg->generator_count(); ++g) {
    AlgebraElement x = generator(alg, g);
    auto ds = u_coefficients(phi, x);
    const mpq_class gx = ctx.grdeg(x).value();
    for (std::size_t i = 1; i < ds.size(); ++i) {
      if (ds[i].is_zero()) continue;
      mpq_class candidate = (gx - ctx.grdeg(ds[i]).value()) / mpq_class(static_cast<long>(i));
      candidate.canonicalize();
      if (!best || candidate < *best) best = candidate;
    }
  }
  if (!best) throw Error(ErrorCode::TrivialMap, "every D^i(x) with i >= 1 vanishes");
  return *best;
}

std::set<unsigned> support_set(const FiltrationContext& ctx, const ExponentialMap& phi, const AlgebraElement& a,
                               const mpq_class& grdegU) {
  std::set<unsigned> out;
  auto ds = u_coefficients(phi, a);
  if (ds.empty()) return out;
  const mpq_class ga = ctx.grdeg(a).value();
  for (std::size_t n = 0; n < ds.size(); ++n) {
    if (ds[n].is_zero()) continue;
    if (ctx.grdeg(ds[n]).value() + grdegU * static_cast<long>(n) == ga) out.insert(static_cast<unsigned>(n));
  }
  return out;
}

AlgebraElement top_part(const FiltrationContext& ctx, const AlgebraElement& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroElement, "the zero element has no top part");
  const AlgebraPtr& graded = ctx.graded_model();
  const auto w = ctx.weights().resolve(*a.owner()->ring());

  // Normal monomials of maximal weight; their graded images cannot cancel
  // because the graded model is a domain with the same normal monomials.
  mpq_class top_weight = monomial_weight(a.rep().terms().front().exponents, w);
  for (const auto& t : a.rep().terms()) top_weight = std::max(top_weight, monomial_weight(t.exponents, w));
  std::vector<Term> top;
  for (const auto& t : a.rep().terms())
    if (monomial_weight(t.exponents, w) == top_weight) top.push_back(t);
  AlgebraElement bar(graded, Polynomial::from_terms(graded->ring(), std::move(top)));

  if (!graded->is_free()) {
    Polynomial expected = top_component(laurent_embed(a), ctx.weights());
    if (!(laurent_embed(bar) == expected))
      throw Error(ErrorCode::UnsupportedFiltration, "top part of " + a.to_string() + " disagrees with its Laurent image");
  }
  return bar;
}

HomogenizedMap homogenize_map(const FiltrationContext& ctx, const ExponentialMap& phi) {
  const AlgebraPtr& alg = phi.algebra();
  const AlgebraPtr& graded = ctx.graded_model();
  const mpq_class grdegU = compute_grdegU(ctx, phi);
  std::vector<std::set<unsigned>> supports;
  std::vector<Polynomial> images;
  const Polynomial u = Polynomial::variable(graded->ring_u(), graded->u_index());
  for (std::size_t g = 0; g < alg->generator_count(); ++g) {
    AlgebraElement x = generator(alg, g);
    auto ds = u_coefficients(phi, x);
    auto s = support_set(ctx, phi, x, grdegU);
    Polynomial image(graded->ring_u());
    for (unsigned n : s) image += top_part(ctx, ds[n]).rep().rebase(graded->ring_u()) * u.pow(n);
    supports.push_back(std::move(s));
    images.push_back(std::move(image));
  }
  ExponentialMap bar(graded, std::move(images), phi.name() + "_bar");
  VerificationReport report = verify(bar);
  if (!report.passed() || report.trivial) {
    std::ostringstream os;
    os << "homogenized map of " << phi.name() << " with grdegU = " << grdegU.get_str() << ": "
       << images_to_string(bar) << (report.trivial ? " (trivial)\n" : "\n") << to_string(report, bar);
    throw Error(ErrorCode::HomogenizationNotExponential, os.str());
  }
  return HomogenizedMap{grdegU, std::move(supports), std::move(bar), std::move(report)};
}

bool check_invariant_top_parts(const FiltrationContext& ctx, const HomogenizedMap& bar,
                               const std::vector<AlgebraElement>& samples) {
  for (const auto& s : samples) {
    if (s.is_zero()) continue;
    if (!is_invariant(bar.map, top_part(ctx, s))) return false;
  }
  return true;
}

std::string to_string(const std::set<unsigned>& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (unsigned n : s) {
    os << (first ? "" : ", ") << n;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace akit
