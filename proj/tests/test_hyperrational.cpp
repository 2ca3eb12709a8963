#include <doctest.h>

#include "evidentia/checks.hpp"
#include "evidentia/hyperrational.hpp"

using namespace evidentia;

namespace {

Hyperrational hr(const char* text) { return Hyperrational::parse(text); }
const Hyperrational A = Hyperrational::aleph();

mpz_class pow10(unsigned long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

}  // namespace

TEST_CASE("from_rational reduces to lowest terms") {
  CHECK(hr_from_rational(1, 2).to_string() == "1/2");
  CHECK(hr_from_rational(0, 7).is_zero());
  CHECK(hr_from_rational(0, 7).to_string() == "0");
  CHECK(hr_from_rational(4, 52) == hr_from_rational(1, 13));
  CHECK(hr_from_rational(4, 52).to_string() == "1/13");
  CHECK(hr_from_rational(3, -6).to_string() == "-1/2");
  CHECK_THROWS_AS(hr_from_rational(1, 0), std::domain_error);
}

TEST_CASE("aleph is infinite and exceeds every natural") {
  CHECK(hr_aleph().to_string() == "aleph");
  CHECK(hr_magnitude(hr_aleph()) == MagnitudeClass::infinite);
  CHECK(A * A.reciprocal() == Hyperrational(1));
  CHECK(hr_cmp(A, Hyperrational(pow10(100))) == std::strong_ordering::greater);
  for (unsigned long k = 0; k <= 200; k += 10)
    CHECK(A > Hyperrational(pow10(k)));
}

TEST_CASE("field operations") {
  CHECK(A / 2 + A / 2 == A);
  CHECK((A / 2 + A / 2).to_string() == "aleph");
  CHECK(A.reciprocal() * A == Hyperrational(1));
  CHECK_THROWS_AS(A / Hyperrational(), std::domain_error);
  CHECK_THROWS_AS(Hyperrational().reciprocal(), std::domain_error);

  const Hyperrational q = (3 * A + 5) / (4 * A);
  for (unsigned long k : {6ul, 9ul}) {
    const mpz_class x = pow10(k);
    mpq_class expected(3 * x + 5, 4 * x);
    expected.canonicalize();
    CHECK(q.substitute(x) == expected);
  }
  CHECK(q.substitute(pow10(6)) == mpq_class(600001, 800000));
  CHECK(q.substitute(pow10(9)) == mpq_class(600000001, 800000000));
}

TEST_CASE("canonical form makes equal values identical") {
  const Hyperrational a = (A * A - 1) / (A - 1);
  CHECK(a == A + 1);
  CHECK(a.numerator() == Poly{1, 1});
  CHECK(a.denominator() == Poly{1});
  const Hyperrational b = (2 * A + 2) / (4 * A + 4);
  CHECK(b == hr_from_rational(1, 2));
  const Hyperrational c = Hyperrational::from_polys(Poly{0, 3}, Poly{0, 0, -6});
  CHECK(c.to_string() == "-1/(2*aleph)");
  CHECK(c.denominator().back() > 0);
  CHECK_THROWS_AS(Hyperrational::from_polys(Poly{1}, Poly{0}), std::domain_error);
}

TEST_CASE("ordering") {
  const Hyperrational eps = A.reciprocal();
  CHECK(hr_cmp(eps, 0) == std::strong_ordering::greater);
  for (unsigned long k = 1; k <= 100; ++k)
    CHECK(hr_cmp(eps, hr_from_rational(1, pow10(k))) == std::strong_ordering::less);
  CHECK(hr_cmp((A + 1) / A, 1) == std::strong_ordering::greater);
  CHECK(((A + 1) / A).substitute(pow10(6)) > 1);
  CHECK(-A < Hyperrational(-1000000));
  CHECK(hr("1/2 + 3/aleph") > hr_from_rational(1, 2));
  CHECK(hr("1/2 - 3/aleph") < hr_from_rational(1, 2));
  CHECK(hr("aleph^2") > hr("1000*aleph"));
  CHECK(hr_cmp(A / 3, A / 3) == std::strong_ordering::equal);
}

TEST_CASE("magnitude classes") {
  CHECK(hr_magnitude(A / 2) == MagnitudeClass::infinite);
  CHECK(hr_magnitude(3 / A) == MagnitudeClass::infinitesimal);
  CHECK(hr_magnitude((3 * A + 5) / (4 * A)) == MagnitudeClass::appreciable);
  CHECK(hr_magnitude(Hyperrational()) == MagnitudeClass::zero);
  CHECK(to_string(MagnitudeClass::infinitesimal) == "infinitesimal");
}

TEST_CASE("standard part") {
  CHECK(hr_standard_part((3 * A + 5) / (4 * A)) == mpq_class(3, 4));
  CHECK(hr_standard_part(hr("1/2 + 3/aleph")) == mpq_class(1, 2));
  CHECK(hr_standard_part(Hyperrational()) == 0);
  CHECK(hr_standard_part(1 / A) == 0);
  CHECK_THROWS_AS(hr_standard_part(A), std::domain_error);

  // Substituting ever larger values converges on the standard part.
  const Hyperrational q = (3 * A + 5) / (4 * A);
  mpq_class previous = 1;
  for (unsigned long k = 1; k <= 12; ++k) {
    const mpq_class gap = abs(q.substitute(pow10(k)) - mpq_class(3, 4));
    CHECK(gap < previous);
    previous = gap;
  }
}

TEST_CASE("text rendering") {
  CHECK((A / 2).to_string() == "aleph/2");
  CHECK((1 / A).to_string() == "1/aleph");
  CHECK((hr_from_rational(1, 2) + 3 / A).to_string() == "1/2 + 3/aleph");
  CHECK((3 * A + 5).to_string() == "3*aleph + 5");
  CHECK(((3 * A + 5) / (4 * A)).to_string() == "3/4 + 5/(4*aleph)");
  CHECK(((A + 1) / (A - 1)).to_string() == "(aleph + 1)/(aleph - 1)");
  CHECK((A / (A * A + 1)).to_string() == "aleph/(aleph^2 + 1)");
  CHECK((3 * A * A / 2).to_string() == "3*aleph^2/2");
  CHECK((-A / 90).to_string() == "-aleph/90");
  CHECK(Hyperrational(-7).to_string() == "-7");
}

TEST_CASE("parsing") {
  CHECK(hr("aleph/2") == A / 2);
  CHECK(hr("ℵ/2") == A / 2);
  CHECK(hr("(3*aleph + 5)/(4*aleph)") == (3 * A + 5) / (4 * A));
  CHECK(hr("3/4 + 5/(4*aleph)") == (3 * A + 5) / (4 * A));
  CHECK(hr("-aleph^2 + 2*aleph - 1") == -(A - 1) * (A - 1));
  CHECK(hr(" 1 / 13 ") == hr_from_rational(1, 13));
  CHECK(hr("0") == Hyperrational());
  CHECK(hr("007") == Hyperrational(7));
  for (const char* bad : {"", "aleph +", "2 ** 3", "(1", "x", "1/0", "aleph^-1", "1 2"})
    CHECK_THROWS_AS(hr(bad), std::invalid_argument);
}

TEST_CASE("rendering round-trips through the parser") {
  for (const Hyperrational& v :
       {A / 2, 1 / A, (3 * A + 5) / (4 * A), (A + 1) / (A - 1), hr_from_rational(-22, 7),
        A * A * A / (2 * A - 3), Hyperrational()})
    CHECK(hr(v.to_string().c_str()) == v);
}

TEST_CASE("substitution bound") {
  const Hyperrational a = (A * A - 7 * A) / (2 * A + 9);
  CHECK(a.substitution_bound() == mpz_class((1 + 9) * (1 + 2)));
  const mpz_class x = a.substitution_bound() + 1;
  CHECK(sgn(a.substitute(x)) == a.sign());
  CHECK_THROWS_AS((1 / (A - 2)).substitute(2), std::domain_error);
}

TEST_CASE("randomized field, order and substitution laws") {
  const auto r = checks::hyperrational_suite(2000, 7);
  for (const auto& c : r.counterexamples)
    MESSAGE(c);
  CHECK(r.cases == 2000);
  CHECK(r.failures == 0);
}
