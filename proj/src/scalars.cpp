// SPDX-License-Identifier: Apache-2.0

#include "polycalc/scalars.hpp"

namespace polycalc {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Integer num(text);
      return Rational(num);
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in rational literal: " + text);
    if (den < 0) {  // the gmp backend requires a positive denominator
      num = -num;
      den = -den;
    }
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
}

std::string format_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

const Rational& ExtendedRational::finite() const {
  if (kind_ != Kind::Finite) throw std::domain_error("infinite value used where a finite rational is required");
  return value_;
}

ExtendedRational ExtendedRational::operator-() const {
  switch (kind_) {
    case Kind::Finite: return ExtendedRational(-value_);
    case Kind::PlusInf: return minus_infinity();
    case Kind::MinusInf: return plus_infinity();
  }
  throw std::logic_error("unreachable");
}

ExtendedRational ExtendedRational::operator+(const ExtendedRational& rhs) const {
  if (kind_ == Kind::Finite && rhs.kind_ == Kind::Finite) return ExtendedRational(value_ + rhs.value_);
  if ((is_plus_infinity() && rhs.is_minus_infinity()) || (is_minus_infinity() && rhs.is_plus_infinity()))
    throw std::domain_error("attempted to form inf - inf");
  if (is_plus_infinity() || rhs.is_plus_infinity()) return plus_infinity();
  return minus_infinity();
}

ExtendedRational ExtendedRational::operator-(const ExtendedRational& rhs) const { return *this + (-rhs); }

bool ExtendedRational::operator==(const ExtendedRational& rhs) const {
  if (kind_ != rhs.kind_) return false;
  if (kind_ != Kind::Finite) return true;
  return value_ == rhs.value_;
}

bool ExtendedRational::operator<(const ExtendedRational& rhs) const {
  if (is_minus_infinity()) return !rhs.is_minus_infinity();
  if (is_plus_infinity()) return false;
  if (rhs.is_plus_infinity()) return true;
  if (rhs.is_minus_infinity()) return false;
  return value_ < rhs.value_;
}

bool ExtendedRational::operator<=(const ExtendedRational& rhs) const { return *this < rhs || *this == rhs; }

std::string ExtendedRational::str() const {
  if (is_plus_infinity()) return "+inf";
  if (is_minus_infinity()) return "-inf";
  return format_rational(value_);
}

ExtendedRational ExtendedRational::parse(const std::string& text) {
  if (text == "+inf" || text == "inf") return plus_infinity();
  if (text == "-inf") return minus_infinity();
  return ExtendedRational(parse_rational(text));
}

QVector zero_vector(Index n) {
  QVector v(n);
  for (Index i = 0; i < n; ++i) v(i) = 0;
  return v;
}

QMatrix zero_matrix(Index rows, Index cols) {
  QMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = 0;
  return m;
}

}  // namespace polycalc
