#include "akit/linear_span.hpp"

namespace akit {

namespace {

void axpy(std::vector<Coeff>& target, const Coeff& scale, const std::vector<Coeff>& source) {
  if (target.size() < source.size()) target.resize(source.size(), Coeff::zero(scale.field()));
  for (std::size_t k = 0; k < source.size(); ++k)
    if (!source[k].is_zero()) target[k] += scale * source[k];
}

}  // namespace

LinearSpan::Reduction LinearSpan::reduce(const Polynomial& v) const {
  if (!v.ring()->same_as(*ring_)) throw Error(ErrorCode::MixedRing, "vector outside the span's ring");
  Reduction r{v, std::vector<Coeff>(inserted_, Coeff::zero(ring_->field()))};
  // Terms above a pivot are untouched by eliminating it, so one top-down pass suffices.
  std::size_t pos = r.remainder.size();
  while (pos > 0) {
    const Term& t = r.remainder.terms()[pos - 1];
    auto it = rows_.find(t.exponents);
    if (it == rows_.end()) {
      --pos;
      continue;
    }
    const Monomial lead = t.exponents;
    const Coeff c = t.coeff;
    r.remainder -= it->second.vec.scaled(c);
    axpy(r.combination, c, it->second.combination);
    // Resume below the eliminated monomial.
    const auto& terms = r.remainder.terms();
    pos = 0;
    while (pos < terms.size() && terms[pos].exponents < lead) ++pos;
  }
  return r;
}

LinearSpan::Insertion LinearSpan::insert(const Polynomial& v) {
  Reduction r = reduce(v);
  const Field& field = ring_->field();
  // row = v - sum combination_k v_k, i.e. coefficients (-combination, 1).
  std::vector<Coeff> relation(inserted_ + 1, Coeff::zero(field));
  for (std::size_t k = 0; k < inserted_; ++k) relation[k] = -r.combination[k];
  relation[inserted_] = Coeff::one(field);
  ++inserted_;
  if (r.remainder.is_zero()) return Insertion{false, std::move(relation)};

  const Term& lead = r.remainder.terms().back();
  const Coeff inv = lead.coeff.inverse();
  for (auto& c : relation) c *= inv;
  const Monomial key = lead.exponents;
  rows_.emplace(key, Row{r.remainder.scaled(inv), std::move(relation)});
  return Insertion{true, {}};
}

std::vector<Polynomial> LinearSpan::basis() const {
  std::vector<Polynomial> out;
  for (const auto& [lead, row] : rows_) {
    // Clear every non-leading term that is the lead of a smaller row.
    Polynomial vec = row.vec;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& t : vec.terms()) {
        if (t.exponents == lead) continue;
        auto it = rows_.find(t.exponents);
        if (it == rows_.end()) continue;
        vec -= it->second.vec.scaled(t.coeff);
        changed = true;
        break;
      }
    }
    out.push_back(std::move(vec));
  }
  return out;
}

}  // namespace akit
