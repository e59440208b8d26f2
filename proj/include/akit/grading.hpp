#ifndef AKIT_GRADING_HPP
#define AKIT_GRADING_HPP

#include <set>
#include <vector>

#include "akit/expmap.hpp"

namespace akit {

/// A weight filtration on a presented algebra together with its associated
/// graded algebra, presented by the top component of the relation.
class FiltrationContext {
 public:
  /// Requires a Laurent model for non-free algebras.  Throws
  /// InconsistentWeights when the solved variable's weight differs from the
  /// degree of its Laurent image, UnsupportedFiltration when the leading
  /// monomial of the relation is not in its top component.
  FiltrationContext(AlgebraPtr algebra, WeightVector weights);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const WeightVector& weights() const noexcept { return weights_; }
  const AlgebraPtr& graded_model() const noexcept { return graded_; }

  /// Filtration degree of an element of algebra() or graded_model().
  Degree grdeg(const AlgebraElement& a) const;

 private:
  AlgebraPtr algebra_;
  WeightVector weights_;
  AlgebraPtr graded_;
};

/// min over generators x and i >= 1 with D^i(x) != 0 of
/// (grdeg x - grdeg D^i(x)) / i.  Throws TrivialMap.
mpq_class compute_grdegU(const FiltrationContext& ctx, const ExponentialMap& phi);

/// { n : grdeg D^n(a) + n grdegU = grdeg a }.  Empty for a = 0.
std::set<unsigned> support_set(const FiltrationContext& ctx, const ExponentialMap& phi, const AlgebraElement& a,
                               const mpq_class& grdegU);

/// The class of a in gr(A), as an element of the graded model.
/// Throws ZeroElement.
AlgebraElement top_part(const FiltrationContext& ctx, const AlgebraElement& a);

struct HomogenizedMap {
  mpq_class grdegU;
  std::vector<std::set<unsigned>> supports;  // S(x) per generator
  ExponentialMap map;                        // on ctx.graded_model()
  VerificationReport report;
};

/// phi-bar(x) = sum_{n in S(x)} top(D^n x) U^n on each generator, verified.
/// Throws HomogenizationNotExponential when the result fails verification
/// or is trivial.
HomogenizedMap homogenize_map(const FiltrationContext& ctx, const ExponentialMap& phi);

/// Every nonzero sample's top part is fixed by phi-bar.
bool check_invariant_top_parts(const FiltrationContext& ctx, const HomogenizedMap& bar,
                               const std::vector<AlgebraElement>& samples);

/// `{0, 1, 2}`.
std::string to_string(const std::set<unsigned>& s);

}  // namespace akit

#endif  // AKIT_GRADING_HPP
