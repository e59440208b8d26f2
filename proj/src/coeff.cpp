#include "akit/coeff.hpp"

#include <ostream>
#include <vector>

namespace akit {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return result;
}

std::uint64_t reduce_rational(const mpq_class& q, std::uint64_t p) {
  mpz_class m(static_cast<unsigned long>(p));
  mpz_class num = q.get_num() % m;
  if (num < 0) num += m;
  mpz_class den = q.get_den() % m;
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes mod " + std::to_string(p));
  std::uint64_t n = num.get_ui();
  std::uint64_t d = den.get_ui();
  return mul_mod(n, pow_mod(d, p - 2, p), p);
}

// C(n, k) mod p for n, k < p.
std::uint64_t small_binom_mod(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  if (k > n) return 0;
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num = mul_mod(num, (n - i) % p, p);
    den = mul_mod(den, (i + 1) % p, p);
  }
  return mul_mod(num, pow_mod(den, p - 2, p), p);
}

}  // namespace

Field::Field(std::uint64_t characteristic) : p_(characteristic) {
  if (p_ == 0) return;
  mpz_class z(static_cast<unsigned long>(p_));
  if (p_ < 2 || mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
    throw Error(ErrorCode::InvalidCharacteristic, std::to_string(p_) + " is neither 0 nor prime");
}

Coeff::Coeff(const Field& field, long value) : field_(field) {
  if (field_.is_rational()) {
    value_ = mpq_class(value);
  } else {
    std::uint64_t p = field_.characteristic();
    long r = value % static_cast<long>(p);
    if (r < 0) r += static_cast<long>(p);
    value_ = static_cast<std::uint64_t>(r);
  }
}

Coeff::Coeff(const Field& field, const mpq_class& value) : field_(field) {
  if (field_.is_rational()) {
    mpq_class v(value);
    v.canonicalize();
    value_ = std::move(v);
  } else {
    value_ = reduce_rational(value, field_.characteristic());
  }
}

bool Coeff::is_zero() const noexcept {
  if (auto r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Coeff::is_one() const noexcept {
  if (auto r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

mpq_class Coeff::to_rational() const {
  if (auto r = std::get_if<std::uint64_t>(&value_)) return mpq_class(static_cast<unsigned long>(*r));
  return std::get<mpq_class>(value_);
}

std::uint64_t Coeff::residue() const {
  if (auto r = std::get_if<std::uint64_t>(&value_)) return *r;
  throw Error(ErrorCode::InvalidArgs, "residue() requested for a rational coefficient");
}

void Coeff::check_same_field(const Coeff& other) const {
  if (field_ != other.field_)
    throw Error(ErrorCode::MixedField, "char " + std::to_string(field_.characteristic()) + " vs char " +
                                           std::to_string(other.field_.characteristic()));
}

Coeff Coeff::operator-() const {
  Coeff r(*this);
  if (auto v = std::get_if<std::uint64_t>(&r.value_)) {
    if (*v != 0) *v = field_.characteristic() - *v;
  } else {
    auto& q = std::get<mpq_class>(r.value_);
    q = -q;
  }
  return r;
}

Coeff Coeff::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  Coeff r(*this);
  if (auto v = std::get_if<std::uint64_t>(&r.value_)) {
    std::uint64_t p = field_.characteristic();
    *v = pow_mod(*v, p - 2, p);
  } else {
    auto& q = std::get<mpq_class>(r.value_);
    q = 1 / q;
  }
  return r;
}

Coeff& Coeff::operator+=(const Coeff& other) {
  check_same_field(other);
  if (auto v = std::get_if<std::uint64_t>(&value_)) {
    std::uint64_t p = field_.characteristic();
    std::uint64_t o = std::get<std::uint64_t>(other.value_);
    *v = (*v >= p - o) ? *v - (p - o) : *v + o;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
  }
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& other) {
  check_same_field(other);
  return *this += -other;
}

Coeff& Coeff::operator*=(const Coeff& other) {
  check_same_field(other);
  if (auto v = std::get_if<std::uint64_t>(&value_)) {
    *v = mul_mod(*v, std::get<std::uint64_t>(other.value_), field_.characteristic());
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
  }
  return *this;
}

Coeff& Coeff::operator/=(const Coeff& other) {
  check_same_field(other);
  return *this *= other.inverse();
}

bool operator==(const Coeff& a, const Coeff& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::strong_ordering canonical_compare(const Coeff& a, const Coeff& b) {
  if (a.field_.characteristic() != b.field_.characteristic())
    return a.field_.characteristic() <=> b.field_.characteristic();
  if (auto v = std::get_if<std::uint64_t>(&a.value_)) return *v <=> std::get<std::uint64_t>(b.value_);
  int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

bool Coeff::is_positive() const {
  if (auto v = std::get_if<std::uint64_t>(&value_)) return *v != 0;
  return sgn(std::get<mpq_class>(value_)) > 0;
}

std::string Coeff::to_string() const {
  if (auto v = std::get_if<std::uint64_t>(&value_)) return std::to_string(*v);
  return std::get<mpq_class>(value_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Coeff& c) { return os << c.to_string(); }

Coeff field_ops(const Coeff& a, const Coeff& b, FieldOp op) {
  switch (op) {
    case FieldOp::Add: return a + b;
    case FieldOp::Sub: return a - b;
    case FieldOp::Mul: return a * b;
    case FieldOp::Div: return a / b;
  }
  throw Error(ErrorCode::InvalidArgs, "unknown field operation");
}

Coeff binom_residue(std::uint64_t n, std::uint64_t k, const Field& field) {
  if (k > n)
    throw Error(ErrorCode::InvalidArgs, "C(" + std::to_string(n) + ", " + std::to_string(k) + ") with k > n");
  if (field.is_rational()) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Coeff(field, mpq_class(b));
  }
  const std::uint64_t p = field.characteristic();
  std::uint64_t result = 1;
  while (n > 0 || k > 0) {
    std::uint64_t nd = n % p;
    std::uint64_t kd = k % p;
    if (kd > nd) return Coeff::zero(field);
    result = mul_mod(result, small_binom_mod(nd, kd, p), p);
    n /= p;
    k /= p;
  }
  return Coeff(field, mpq_class(static_cast<unsigned long>(result)));
}

}  // namespace akit
