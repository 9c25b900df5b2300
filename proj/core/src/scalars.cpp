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

#include "cering/scalars.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <utility>

namespace cering {

ExtendedGcd extended_gcd(Int a, Int b) {
  Int old_r = std::move(a), r = std::move(b);
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

Int invert_mod(const Int& a, const Int& m) {
  ExtendedGcd e = extended_gcd(mod_floor(a, m), m);
  if (e.g != 1) throw std::domain_error("invert_mod: element is not a unit");
  return mod_floor(e.x, m);
}

Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if ((n & 1) == 0) return false;
  return boost::multiprecision::miller_rabin_test(n, 32);
}

FieldSpec FieldSpec::prime_field(Int p) {
  if (!is_probable_prime(p))
    throw std::invalid_argument("FieldSpec: characteristic must be prime, got " +
                                p.str());
  return FieldSpec(Kind::prime_field, std::move(p));
}

std::string FieldSpec::str() const {
  return is_rationals() ? "Q" : "F" + p_.str();
}

Scalar::Scalar(FieldSpec field, Rational value)
    : field_(std::move(field)), v_(std::move(value)) {
  normalize();
}

void Scalar::normalize() {
  if (field_.is_prime_field()) {
    // Residues are integers mod p; rational input c/d maps to c * d^{-1}.
    Int num = numerator(v_);
    Int den = denominator(v_);
    const Int& p = field_.prime();
    Int r = mod_floor(num, p);
    if (den != 1) r = mod_floor(r * invert_mod(den, p), p);
    v_ = Rational(r);
  }
}

void Scalar::require_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw std::invalid_argument("Scalar: mixed-field arithmetic (" +
                                field_.str() + " vs " + o.field_.str() + ")");
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  return Scalar(field_, v_ + o.v_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_field(o);
  return Scalar(field_, v_ - o.v_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  return Scalar(field_, v_ * o.v_);
}

Scalar Scalar::operator-() const { return Scalar(field_, -v_); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
  if (field_.is_rationals()) return Scalar(field_, 1 / v_);
  return Scalar(field_, Rational(invert_mod(numerator(v_), field_.prime())));
}

std::string Scalar::str() const {
  Int num = numerator(v_);
  Int den = denominator(v_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Scalar::parse: empty string");
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) return Scalar(f, Rational(Int(text)));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Scalar(f, Rational(num) / Rational(den));
  } catch (const std::exception&) {
    throw std::invalid_argument("Scalar::parse: bad scalar literal '" + text +
                                "'");
  }
}

}  // namespace cering
