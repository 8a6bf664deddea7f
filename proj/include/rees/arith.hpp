#ifndef REES_ARITH_HPP
#define REES_ARITH_HPP

// Exact coefficient fields: arbitrary-precision rationals and prime fields GF(p).
//
// A field is a small descriptor type (RationalField, PrimeField) exposing
// `value_type` plus constructors for constants. Everything above this header is
// templated on the descriptor, so a Polynomial<PrimeField> and a
// Polynomial<RationalField> never mix. Two GF(p) values with different moduli
// can still meet at runtime; that raises FieldMismatch.

#include <cstdint>
#include <gmpxx.h>
#include <random>
#include <stdexcept>
#include <string>

namespace rees {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

class FieldMismatch : public std::invalid_argument {
 public:
  explicit FieldMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Reduced fraction with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}
  Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw DivisionByZero();
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& value() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_negative() const { return sgn(v_) < 0; }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(mpq_class(1) / v_);
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

  /// "n" or "n/d"
  std::string to_string() const { return v_.get_str(); }

 private:
  mpq_class v_{0};
};

/// Residue in [0, p) carrying its modulus.
class ModP {
 public:
  ModP() = default;
  ModP(std::uint64_t residue, std::uint32_t p) : v_(static_cast<std::uint32_t>(residue % p)), p_(p) {}

  std::uint32_t residue() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  ModP inverse() const {
    if (v_ == 0) throw DivisionByZero();
    // extended Euclid on (v, p)
    std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      std::int64_t q = a / b;
      std::int64_t t = a - q * b; a = b; b = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    x0 %= static_cast<std::int64_t>(p_);
    if (x0 < 0) x0 += p_;
    return from_raw(static_cast<std::uint32_t>(x0), p_);
  }

  ModP& operator+=(const ModP& o) {
    check(o);
    std::uint32_t s = v_ + o.v_;
    v_ = s >= p_ ? s - p_ : s;
    return *this;
  }
  ModP& operator-=(const ModP& o) {
    check(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
  }
  ModP& operator*=(const ModP& o) {
    check(o);
    v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % p_);
    return *this;
  }
  ModP& operator/=(const ModP& o) {
    check(o);
    return *this *= o.inverse();
  }
  ModP operator-() const { return from_raw(v_ == 0 ? 0 : p_ - v_, p_); }

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend bool operator!=(const ModP& a, const ModP& b) { return !(a == b); }

  /// Symmetric representative, so -1 prints as "-1" rather than "p-1".
  std::int64_t signed_value() const {
    return v_ > p_ / 2 ? static_cast<std::int64_t>(v_) - static_cast<std::int64_t>(p_)
                       : static_cast<std::int64_t>(v_);
  }
  bool is_negative() const { return signed_value() < 0; }
  std::string to_string() const { return std::to_string(signed_value()); }

 private:
  static ModP from_raw(std::uint32_t v, std::uint32_t p) {
    ModP r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }
  void check(const ModP& o) const {
    if (p_ != o.p_) {
      throw FieldMismatch("GF(" + std::to_string(p_) + ") combined with GF(" + std::to_string(o.p_) + ")");
    }
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 2;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::uint32_t next_prime(std::uint32_t n) {
  std::uint64_t c = static_cast<std::uint64_t>(n) + 1;
  while (!is_prime(c)) ++c;
  return static_cast<std::uint32_t>(c);
}

/// The field Q.
struct RationalField {
  using value_type = Rational;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(long n) const { return Rational(n); }
  Rational from_ratio(const mpz_class& n, const mpz_class& d) const { return Rational(n, d); }

  /// Small integers in [-9, 9]; keeps exact runs readable.
  template <class Rng>
  Rational random(Rng& rng) const {
    std::uniform_int_distribution<long> dist(-9, 9);
    return Rational(dist(rng));
  }

  std::string name() const { return "q"; }
  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// The field GF(p), p prime and below 2^31.
struct PrimeField {
  static constexpr std::uint32_t kDefaultPrime = 32003;

  std::uint32_t p = kDefaultPrime;

  PrimeField() = default;
  explicit PrimeField(std::uint32_t prime) : p(prime) {
    if (prime < 2 || prime >= (1u << 31) || !is_prime(prime)) {
      throw std::invalid_argument("modulus " + std::to_string(prime) + " is not a prime below 2^31");
    }
  }

  using value_type = ModP;

  ModP zero() const { return ModP(0, p); }
  ModP one() const { return ModP(1, p); }
  ModP from_int(long n) const {
    long r = n % static_cast<long>(p);
    if (r < 0) r += p;
    return ModP(static_cast<std::uint64_t>(r), p);
  }
  ModP from_ratio(const mpz_class& n, const mpz_class& d) const {
    mpz_class pn = n % p, pd = d % p;
    if (pn < 0) pn += p;
    if (pd < 0) pd += p;
    ModP den(pd.get_ui(), p);
    return ModP(pn.get_ui(), p) / den;
  }

  template <class Rng>
  ModP random(Rng& rng) const {
    std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
    return ModP(dist(rng), p);
  }

  std::string name() const { return "fp:" + std::to_string(p); }
  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p == b.p; }
};

/// Image of a rational in GF(p); throws DivisionByZero when p divides the denominator.
inline ModP reduce_mod(const Rational& q, const PrimeField& field) {
  return field.from_ratio(q.numerator(), q.denominator());
}

}  // namespace rees

#endif  // REES_ARITH_HPP
