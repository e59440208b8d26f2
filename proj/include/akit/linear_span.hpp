#ifndef AKIT_LINEAR_SPAN_HPP
#define AKIT_LINEAR_SPAN_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "akit/poly.hpp"

namespace akit {

/// Exact echelon form of a family of polynomials viewed as coefficient
/// vectors over the monomial basis.  Every stored row remembers which
/// combination of the inserted vectors produced it.
class LinearSpan {
 public:
  explicit LinearSpan(RingPtr ring) : ring_(std::move(ring)) {}

  struct Insertion {
    bool independent = false;
    /// When dependent: sum_k relation[k] * v_k = 0 over insertion indices,
    /// with relation[last] = 1.
    std::vector<Coeff> relation;
  };

  Insertion insert(const Polynomial& v);

  /// remainder = v - sum_k combination[k] * v_k.
  struct Reduction {
    Polynomial remainder;
    std::vector<Coeff> combination;
  };
  Reduction reduce(const Polynomial& v) const;

  bool contains(const Polynomial& v) const { return reduce(v).remainder.is_zero(); }
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t inserted() const noexcept { return inserted_; }

  /// Reduced echelon basis, ordered by increasing leading monomial.
  std::vector<Polynomial> basis() const;

 private:
  struct Row {
    Polynomial vec;  // leading (largest stored) coefficient is 1
    std::vector<Coeff> combination;
  };

  RingPtr ring_;
  std::map<Monomial, Row> rows_;  // keyed by leading monomial
  std::size_t inserted_ = 0;
};

}  // namespace akit

#endif  // AKIT_LINEAR_SPAN_HPP
