#ifndef NCREG_FIELD_HPP
#define NCREG_FIELD_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "ncreg/errors.hpp"

namespace ncreg {

/// Runtime description of the coefficient field.
struct FieldSpec {
  enum class Kind { rationals, prime_field };
  Kind kind = Kind::rationals;
  std::int64_t characteristic = 0;  // 0 for the rationals, a prime < 2^31 otherwise

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// F_p for a prime p < 2^31. Elements are canonical representatives in [0, p).
/// All arithmetic is exact; products fit in 64 bits because p < 2^31.
class PrimeField {
 public:
  using Elem = std::int64_t;

  explicit PrimeField(std::int64_t p) : p_(p) {
    if (!is_prime(p) || p >= (std::int64_t{1} << 31))
      throw Error("characteristic must be a prime < 2^31, got " +
                  std::to_string(p));
  }

  FieldSpec spec() const { return {FieldSpec::Kind::prime_field, p_}; }
  std::int64_t characteristic() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const {
    Elem s = a - b;
    return s < 0 ? s + p_ : s;
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }

  Elem inv(Elem a) const {
    if (a == 0) throw Error("division by zero in F_" + std::to_string(p_));
    // extended Euclid
    Elem t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      Elem q = r / new_r;
      t -= q * new_t;
      std::swap(t, new_t);
      r -= q * new_r;
      std::swap(r, new_r);
    }
    return t < 0 ? t + p_ : t;
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem from_long(std::int64_t n) const {
    Elem r = n % p_;
    return r < 0 ? r + p_ : r;
  }
  Elem from_fraction(std::int64_t num, std::int64_t den) const {
    return div(from_long(num), from_long(den));
  }

  std::string to_string(Elem a) const { return std::to_string(a); }

 private:
  std::int64_t p_;
};

/// The rationals with arbitrary-precision integers underneath.
class Rationals {
 public:
  using Elem = boost::multiprecision::cpp_rational;

  FieldSpec spec() const { return {FieldSpec::Kind::rationals, 0}; }
  std::int64_t characteristic() const { return 0; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw Error("division by zero in Q");
    return Elem(1) / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return a / inv_check(b); }

  Elem from_long(std::int64_t n) const { return Elem(n); }
  Elem from_fraction(std::int64_t num, std::int64_t den) const {
    if (den == 0) throw Error("zero denominator");
    return Elem(num) / Elem(den);
  }

  std::string to_string(const Elem& a) const { return a.str(); }

 private:
  const Elem& inv_check(const Elem& b) const {
    if (b == 0) throw Error("division by zero in Q");
    return b;
  }
};

}  // namespace ncreg

#endif
