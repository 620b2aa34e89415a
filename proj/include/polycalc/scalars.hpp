// SPDX-License-Identifier: Apache-2.0
//
// Exact scalar types: arbitrary-precision rationals and their extension by
// +inf / -inf, plus the dense rational vector/matrix types used everywhere.

#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <string>

namespace polycalc {

/// Exact rational scalar. Always stored in canonical form: gcd(|num|, den) = 1,
/// den >= 1, zero is 0/1. Canonicalization is maintained by GMP on every
/// operation, so equality of values is structural equality.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

/// Parses "p", "p/q" or "-p/q". Rejects zero denominators and garbage.
Rational parse_rational(const std::string& text);

/// Renders canonically: bare integer when the denominator is 1, else "p/q".
std::string format_rational(const Rational& q);

/// Rational extended with +inf / -inf. Used for optimal values, conjugates
/// and support functions. Arithmetic that would form inf - inf throws
/// std::domain_error.
class ExtendedRational {
 public:
  ExtendedRational() : kind_(Kind::Finite), value_(0) {}
  ExtendedRational(Rational v) : kind_(Kind::Finite), value_(std::move(v)) {}
  ExtendedRational(int v) : kind_(Kind::Finite), value_(v) {}

  static ExtendedRational plus_infinity() { return ExtendedRational(Kind::PlusInf); }
  static ExtendedRational minus_infinity() { return ExtendedRational(Kind::MinusInf); }

  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_plus_infinity() const { return kind_ == Kind::PlusInf; }
  bool is_minus_infinity() const { return kind_ == Kind::MinusInf; }

  /// The finite value; throws std::domain_error when infinite.
  const Rational& finite() const;

  ExtendedRational operator-() const;
  ExtendedRational operator+(const ExtendedRational& rhs) const;
  ExtendedRational operator-(const ExtendedRational& rhs) const;

  bool operator==(const ExtendedRational& rhs) const;
  bool operator!=(const ExtendedRational& rhs) const { return !(*this == rhs); }
  bool operator<(const ExtendedRational& rhs) const;
  bool operator<=(const ExtendedRational& rhs) const;
  bool operator>(const ExtendedRational& rhs) const { return rhs < *this; }
  bool operator>=(const ExtendedRational& rhs) const { return rhs <= *this; }

  std::string str() const;

  /// Parses the output of str(): "+inf", "-inf" or a rational literal.
  static ExtendedRational parse(const std::string& text);

 private:
  enum class Kind { Finite, PlusInf, MinusInf };
  explicit ExtendedRational(Kind k) : kind_(k), value_(0) {}

  Kind kind_;
  Rational value_;
};

inline bool is_zero_vector(const QVector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

QVector zero_vector(Index n);
QMatrix zero_matrix(Index rows, Index cols);

}  // namespace polycalc
