#pragma once

/**
 * @file hyperrational.hpp
 * @brief Exact arithmetic in the ordered field Q(aleph).
 *
 * A Hyperrational is a ratio of two polynomials in a single indeterminate
 * `aleph` with arbitrary-precision integer coefficients. The field is ordered
 * by taking aleph to be larger than every rational number, so it contains
 * infinite values (aleph, aleph/2), appreciable values (3/4, 1 + 1/aleph) and
 * infinitesimals (1/aleph).
 *
 * Canonical form:
 * - numerator and denominator are coprime as polynomials over Q
 * - the integer content of all coefficients (numerator and denominator
 *   together) is 1
 * - the denominator's leading coefficient is positive
 * - zero is uniquely 0/1
 *
 * Under these rules two Hyperrationals are equal as values iff their
 * representations are identical, so operator== is structural.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace evidentia {

/// Integer-coefficient polynomial in aleph, lowest degree first. The zero
/// polynomial is the empty vector; otherwise the last coefficient is nonzero.
using Poly = std::vector<mpz_class>;

enum class MagnitudeClass { zero, infinitesimal, appreciable, infinite };

std::string_view to_string(MagnitudeClass m);

class Hyperrational {
public:
  /// Zero.
  Hyperrational();
  Hyperrational(long value);  // NOLINT(google-explicit-constructor)
  explicit Hyperrational(const mpz_class& value);
  explicit Hyperrational(const mpq_class& value);

  /// p/q; throws std::domain_error when q == 0.
  static Hyperrational from_rational(const mpz_class& p, const mpz_class& q);

  /// The infinite unit.
  static Hyperrational aleph();

  /// (num/den) * aleph^power. Throws std::domain_error when den == 0.
  static Hyperrational monomial(mpz_class num, mpz_class den, int power);

  /// num/den for arbitrary polynomials; canonicalizes. Throws
  /// std::domain_error on a zero denominator.
  static Hyperrational from_polys(Poly num, Poly den);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  bool is_zero() const { return num_.empty(); }
  /// True when the value has aleph-degree 0, i.e. is an ordinary rational.
  bool is_rational() const { return num_.size() <= 1 && den_.size() == 1; }
  /// -1, 0 or +1.
  int sign() const;
  /// 0 <= value <= 1.
  bool in_unit_interval() const;

  MagnitudeClass magnitude() const;

  /// The unique rational infinitely close to this value. Throws
  /// std::domain_error for infinite values.
  mpq_class standard_part() const;

  /// Exact rational value; throws std::domain_error unless is_rational().
  mpq_class to_rational() const;

  /// Value at aleph := point. Throws std::domain_error if the denominator
  /// vanishes there.
  mpq_class substitute(const mpz_class& point) const;

  /// A point beyond which substituting for aleph preserves sign and
  /// leading-term dominance: (1 + max |coefficient|) * (1 + max degree).
  mpz_class substitution_bound() const;

  Hyperrational operator-() const;
  Hyperrational reciprocal() const;

  friend Hyperrational operator+(const Hyperrational& a, const Hyperrational& b);
  friend Hyperrational operator-(const Hyperrational& a, const Hyperrational& b);
  friend Hyperrational operator*(const Hyperrational& a, const Hyperrational& b);
  /// Throws std::domain_error when b == 0.
  friend Hyperrational operator/(const Hyperrational& a, const Hyperrational& b);

  Hyperrational& operator+=(const Hyperrational& rhs) { return *this = *this + rhs; }
  Hyperrational& operator-=(const Hyperrational& rhs) { return *this = *this - rhs; }
  Hyperrational& operator*=(const Hyperrational& rhs) { return *this = *this * rhs; }
  Hyperrational& operator/=(const Hyperrational& rhs) { return *this = *this / rhs; }

  friend bool operator==(const Hyperrational& a, const Hyperrational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Hyperrational& a, const Hyperrational& b);

  /// Canonical text, e.g. `aleph/2`, `1/2 + 3/aleph`, `(aleph + 1)/(aleph - 1)`.
  std::string to_string() const;

  /// Parses the text syntax produced by to_string() (and general
  /// +, -, *, /, ^ expressions over integers and `aleph`). Throws
  /// std::invalid_argument on malformed input.
  static Hyperrational parse(std::string_view text);

private:
  Hyperrational(Poly num, Poly den, bool canonical);
  void canonicalize();

  Poly num_;
  Poly den_;
};

std::ostream& operator<<(std::ostream& os, const Hyperrational& h);

// Free-function spellings of the field operations.
inline Hyperrational hr_from_rational(const mpz_class& p, const mpz_class& q) {
  return Hyperrational::from_rational(p, q);
}
inline Hyperrational hr_aleph() { return Hyperrational::aleph(); }
inline std::strong_ordering hr_cmp(const Hyperrational& a, const Hyperrational& b) {
  return a <=> b;
}
inline MagnitudeClass hr_magnitude(const Hyperrational& a) { return a.magnitude(); }
inline mpq_class hr_standard_part(const Hyperrational& a) { return a.standard_part(); }

namespace poly {

void trim(Poly& p);
int degree(const Poly& p);  // -1 for the zero polynomial
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
/// gcd of all coefficients (non-negative); 0 for the zero polynomial.
mpz_class content(const Poly& p);
/// Greatest common divisor over Z, primitive with positive leading
/// coefficient. gcd(0, 0) is the zero polynomial.
Poly gcd(Poly a, Poly b);
/// a / b where b divides a exactly over Z. Throws std::logic_error otherwise.
Poly divide_exact(const Poly& a, const Poly& b);
/// Polynomial text with integer coefficients in descending degree.
std::string to_string(const Poly& p);

}  // namespace poly

}  // namespace evidentia
