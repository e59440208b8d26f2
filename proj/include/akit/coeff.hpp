#ifndef AKIT_COEFF_HPP
#define AKIT_COEFF_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "akit/error.hpp"

namespace akit {

/// The base field: Q when the characteristic is 0, F_p otherwise.
class Field {
 public:
  /// Throws InvalidCharacteristic unless `characteristic` is 0 or prime.
  explicit Field(std::uint64_t characteristic = 0);

  static Field rationals() { return Field(0); }

  std::uint64_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint64_t p_;
};

/// An exact scalar of a Field.  Residues mod p are kept in [0, p).
class Coeff {
 public:
  /// Zero of Q.
  Coeff() : field_(), value_(mpq_class(0)) {}
  Coeff(const Field& field, long value);
  Coeff(const Field& field, const mpq_class& value);

  static Coeff zero(const Field& field) { return Coeff(field, 0L); }
  static Coeff one(const Field& field) { return Coeff(field, 1L); }

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Rational value in char 0; the residue (as an integer) in char p.
  mpq_class to_rational() const;
  /// Residue in char p.  Throws InvalidArgs in char 0.
  std::uint64_t residue() const;

  Coeff operator-() const;
  Coeff inverse() const;

  Coeff& operator+=(const Coeff& other);
  Coeff& operator-=(const Coeff& other);
  Coeff& operator*=(const Coeff& other);
  Coeff& operator/=(const Coeff& other);

  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
  friend Coeff operator/(Coeff a, const Coeff& b) { return a /= b; }

  friend bool operator==(const Coeff& a, const Coeff& b);

  /// A total order used only for canonical sorting (residue order in char p).
  friend std::strong_ordering canonical_compare(const Coeff& a, const Coeff& b);

  /// Positive in the ordered field Q; in char p, true for every nonzero value.
  bool is_positive() const;

  std::string to_string() const;

 private:
  void check_same_field(const Coeff& other) const;

  Field field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Coeff& c);

enum class FieldOp { Add, Sub, Mul, Div };

/// Exact field arithmetic dispatch.  Throws MixedField or DivisionByZero.
Coeff field_ops(const Coeff& a, const Coeff& b, FieldOp op);

/// C(n, k) reduced into `field`.  In char p it is evaluated digit-wise
/// (Lucas), in char 0 exactly.  Throws InvalidArgs if k > n.
Coeff binom_residue(std::uint64_t n, std::uint64_t k, const Field& field);

}  // namespace akit

#endif  // AKIT_COEFF_HPP
