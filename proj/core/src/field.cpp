#include "arsobstruct/field.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace arsob {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::ValuationMismatch: return "ValuationMismatch";
    case ErrorKind::DoubleArrow: return "DoubleArrow";
    case ErrorKind::OrbitNotClosed: return "OrbitNotClosed";
    case ErrorKind::ResultNotTranslationQuiver: return "ResultNotTranslationQuiver";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::UnknownComponent: return "UnknownComponent";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownArrow: return "UnknownArrow";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::NonComposablePath: return "NonComposablePath";
    case ErrorKind::MixedEndpointsInRelation: return "MixedEndpointsInRelation";
    case ErrorKind::RelationTooShort: return "RelationTooShort";
    case ErrorKind::NotAdmissibleWithinCap: return "NotAdmissibleWithinCap";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::BasisMismatch: return "BasisMismatch";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::GorensteinUnverified: return "GorensteinUnverified";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::OutOfCatalogue: return "OutOfCatalogue";
    case ErrorKind::ReductionMismatch: return "ReductionMismatch";
    case ErrorKind::CatalogueLoadError: return "CatalogueLoadError";
    case ErrorKind::NotVanishingAtOrigin: return "NotVanishingAtOrigin";
    case ErrorKind::ZeroLinearPart: return "ZeroLinearPart";
    case ErrorKind::NotMutuallyPrime: return "NotMutuallyPrime";
    case ErrorKind::EmptyConfiguration: return "EmptyConfiguration";
    case ErrorKind::EvenDimension: return "EvenDimension";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Field Field::prime(std::uint32_t p) {
  if (p < 2) fail(ErrorKind::FieldMismatch, "field characteristic must be a prime >= 2");
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) fail(ErrorKind::FieldMismatch, "field characteristic must be prime: " + std::to_string(p));
  }
  return Field(p);
}

namespace {

Integer mod_reduce(const Integer& a, std::uint32_t p) {
  Integer r = a % p;
  if (r < 0) r += p;
  return r;
}

Integer mod_inverse(const Integer& a, std::uint32_t p) {
  // extended Euclid on (a, p); a assumed nonzero mod p
  Integer old_r = mod_reduce(a, p), r = p;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  return mod_reduce(old_s, p);
}

}  // namespace

Rational Field::make(const Rational& value) const {
  if (is_rationals()) return value;
  Integer num = boost::multiprecision::numerator(value);
  Integer den = boost::multiprecision::denominator(value);
  Integer dmod = mod_reduce(den, p_);
  if (dmod == 0)
    fail(ErrorKind::FieldMismatch,
         "coefficient denominator divisible by field characteristic " + std::to_string(p_));
  Integer r = mod_reduce(mod_reduce(num, p_) * mod_inverse(dmod, p_), p_);
  return Rational(r);
}

Rational Field::add(const Rational& a, const Rational& b) const {
  Rational r = a + b;
  return is_rationals() ? r : make(r);
}

Rational Field::sub(const Rational& a, const Rational& b) const {
  Rational r = a - b;
  return is_rationals() ? r : make(r);
}

Rational Field::mul(const Rational& a, const Rational& b) const {
  Rational r = a * b;
  return is_rationals() ? r : make(r);
}

Rational Field::neg(const Rational& a) const {
  Rational r = -a;
  return is_rationals() ? r : make(r);
}

Rational Field::inv(const Rational& a) const {
  if (a == 0) fail(ErrorKind::InvalidInput, "division by zero");
  if (is_rationals()) return Rational(1) / a;
  return Rational(mod_inverse(boost::multiprecision::numerator(a), p_));
}

Rational Field::parse(const std::string& text) const {
  try {
    Rational value(text);
    return make(value);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorKind::SyntaxError, "bad coefficient: '" + text + "'");
  }
}

std::string Field::to_string(const Rational& a) const {
  return a.str();
}

std::string Field::name() const {
  return is_rationals() ? "Q" : ("F" + std::to_string(p_));
}

}  // namespace arsob
