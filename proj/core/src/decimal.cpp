#include "evidentia/decimal.hpp"

#include <stdexcept>

#include <mpfr.h>

namespace evidentia {

namespace {

std::string with_point(mpz_class scaled, int digits) {
  const bool negative = scaled < 0;
  std::string s = mpz_class(abs(scaled)).get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits))
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  return (negative ? "-" : "") + s;
}

mpz_class pow10(int digits) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return p;
}

class MpfrValue {
public:
  explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return v_; }

private:
  mpfr_t v_;
};

}  // namespace

std::string format_decimal(const mpq_class& value, int digits) {
  if (digits < 0)
    throw std::invalid_argument("negative digit count");
  const mpq_class scaled = value * mpq_class(pow10(digits));
  // floor, then round half to even on the remainder
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  const mpq_class frac = scaled - mpq_class(q);
  const int c = cmp(frac, mpq_class(1, 2));
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t())))
    q += 1;
  return with_point(q, digits);
}

std::string format_log(const mpq_class& value, int digits, LogBase base) {
  if (value <= 0)
    throw std::domain_error("logarithm of a non-positive value");
  if (digits < 0)
    throw std::invalid_argument("negative digit count");
  const auto prec = static_cast<mpfr_prec_t>(digits * 4 + 128);
  MpfrValue x(prec);
  mpfr_set_q(x.get(), value.get_mpq_t(), MPFR_RNDN);
  switch (base) {
    case LogBase::natural: mpfr_log(x.get(), x.get(), MPFR_RNDN); break;
    case LogBase::two: mpfr_log2(x.get(), x.get(), MPFR_RNDN); break;
    case LogBase::ten: mpfr_log10(x.get(), x.get(), MPFR_RNDN); break;
  }
  MpfrValue scale(prec);
  mpfr_set_z(scale.get(), pow10(digits).get_mpz_t(), MPFR_RNDN);
  mpfr_mul(x.get(), x.get(), scale.get(), MPFR_RNDN);
  mpfr_rint(x.get(), x.get(), MPFR_RNDN);  // ties to even
  mpz_class scaled;
  mpfr_get_z(scaled.get_mpz_t(), x.get(), MPFR_RNDN);
  return with_point(scaled, digits);
}

}  // namespace evidentia
