/*
   Copyright 2026 The cering authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CERING_SCALARS_HPP
#define CERING_SCALARS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace cering {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Extended Euclid: returns g = gcd(a, b) and x, y with a*x + b*y = g.
struct ExtendedGcd {
  Int g, x, y;
};
ExtendedGcd extended_gcd(Int a, Int b);

/// Inverse of a modulo m (m > 1, gcd(a, m) = 1). Throws std::domain_error
/// otherwise.
Int invert_mod(const Int& a, const Int& m);

/// Euclidean remainder in [0, m).
Int mod_floor(const Int& a, const Int& m);

bool is_probable_prime(const Int& n);

/// The coefficient domain of an exact computation: the rationals or a prime
/// field F_p. Every Scalar, Matrix and Subspace carries one of these and
/// mixed-field arithmetic is rejected.
class FieldSpec {
 public:
  enum class Kind { rationals, prime_field };

  static FieldSpec rationals() { return FieldSpec(Kind::rationals, 0); }
  /// Throws std::invalid_argument unless p is prime.
  static FieldSpec prime_field(Int p);

  Kind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == Kind::rationals; }
  bool is_prime_field() const { return kind_ == Kind::prime_field; }
  /// The characteristic p; only valid for prime fields.
  const Int& prime() const { return p_; }

  bool operator==(const FieldSpec& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  std::string str() const;  // "Q" or "F<p>"

 private:
  FieldSpec(Kind k, Int p) : kind_(k), p_(std::move(p)) {}
  Kind kind_;
  Int p_;
};

/// An exact scalar tagged by its field. Rationals are kept in lowest terms
/// with positive denominator (cpp_rational maintains that form); prime-field
/// residues are kept in [0, p).
class Scalar {
 public:
  Scalar(FieldSpec field, Rational value);

  static Scalar zero(const FieldSpec& f) { return Scalar(f, Rational(0)); }
  static Scalar one(const FieldSpec& f) { return Scalar(f, Rational(1)); }
  static Scalar of_int(const FieldSpec& f, const Int& v) {
    return Scalar(f, Rational(v));
  }
  static Scalar of_int(const FieldSpec& f, long v) {
    return Scalar(f, Rational(v));
  }

  const FieldSpec& field() const { return field_; }
  const Rational& value() const { return v_; }
  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_ == 1; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;  // throws std::domain_error on zero

  bool operator==(const Scalar& o) const {
    return field_ == o.field_ && v_ == o.v_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// "5", "-3/2"; parse accepts the same forms.
  std::string str() const;
  static Scalar parse(const FieldSpec& f, const std::string& text);

 private:
  void normalize();
  void require_same_field(const Scalar& o) const;

  FieldSpec field_;
  Rational v_;
};

}  // namespace cering

#endif  // CERING_SCALARS_HPP
