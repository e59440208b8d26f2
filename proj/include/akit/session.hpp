#ifndef AKIT_SESSION_HPP
#define AKIT_SESSION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "akit/expmap.hpp"

namespace akit {

/// One algebra with its named weight vectors and maps, as read from a
/// session file:
///
///   field char = 0
///   ring vars = x, y, z, t
///   relation = x + x^2*y + z^2 + t^3
///   solve = y
///   order = lex(y, z, t, x)
///   weights w1: x = -1, y = 2, z = 0, t = 0
///   map phi1: x -> x, y -> y + 2*z*U - x^2*U^2, z -> z - x^2*U, t -> t
///
/// Line breaks are insignificant; `#` starts a comment.  `field`, `ring`
/// and `relation` come first, in that order.
struct Session {
  AlgebraPtr algebra;
  std::vector<std::string> order;  // as declared; empty when absent
  std::vector<std::pair<std::string, WeightVector>> weights;
  std::vector<ExponentialMap> maps;

  /// Throws UnknownName.
  const ExponentialMap& map(std::string_view name) const;
  const WeightVector& weight(std::string_view name) const;
};

/// Throws ParseError (with line and column), UnknownVariable, ReservedName,
/// and whatever Algebra::create rejects.  `characteristic` replaces the
/// declared field.
Session parse_session(std::string_view text, std::optional<std::uint64_t> characteristic = std::nullopt);

/// Canonical session text; parse_session(print_session(s)) reproduces s.
std::string print_session(const Session& s);

/// Structural equality: field, variables, relation, solve variable, order,
/// weights and map images.
bool same_structure(const Session& a, const Session& b);

/// Parses one expression over `ring` (variables only; U where the ring has it).
Polynomial parse_expression(std::string_view text, const RingPtr& ring);

/// `n/d`, always with a denominator.
std::string fraction_text(const mpq_class& q);

}  // namespace akit

#endif  // AKIT_SESSION_HPP
