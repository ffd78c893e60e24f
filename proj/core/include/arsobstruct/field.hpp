#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "arsobstruct/errors.hpp"

namespace arsob {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Exact coefficient field: the rationals or a prime field F_p (p <= 2^31).
// Elements are stored as Rational values; over F_p an element is its
// canonical residue 0..p-1 (denominator 1).  One storage type keeps the
// whole linear-algebra stack field-generic without templates.
class Field {
public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);

  bool is_rationals() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }

  // Canonicalize an arbitrary rational into this field.  Over F_p this
  // reduces numerator and denominator mod p; a denominator divisible by p
  // is a FieldMismatch.
  Rational make(const Rational& value) const;
  Rational make_int(long value) const { return make(Rational(value)); }

  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  Rational inv(const Rational& a) const;  // a must be nonzero

  bool eq(const Rational& a, const Rational& b) const { return a == b; }

  // Parse "a" or "a/b" with optional sign.
  Rational parse(const std::string& text) const;
  std::string to_string(const Rational& a) const;

  bool operator==(const Field& other) const { return p_ == other.p_; }
  bool operator!=(const Field& other) const { return p_ != other.p_; }

  std::string name() const;

private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;  // 0 = rationals
};

}  // namespace arsob
