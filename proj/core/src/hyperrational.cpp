#include "evidentia/hyperrational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace evidentia {

std::string_view to_string(MagnitudeClass m) {
  switch (m) {
    case MagnitudeClass::zero: return "zero";
    case MagnitudeClass::infinitesimal: return "infinitesimal";
    case MagnitudeClass::appreciable: return "appreciable";
    case MagnitudeClass::infinite: return "infinite";
  }
  return "?";
}

namespace poly {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i)
    r[i] += b[i];
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i)
    r[i] -= b[i];
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty())
    return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

mpz_class content(const Poly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1)
      break;
  }
  return g;
}

namespace {

Poly primitive_part(Poly p) {
  if (p.empty())
    return p;
  mpz_class c = content(p);
  if (p.back() < 0)
    c = -c;
  if (c != 1)
    for (auto& x : p)
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return p;
}

// lc(b)^k * a reduced modulo b, integer arithmetic only.
Poly pseudo_remainder(Poly r, const Poly& b) {
  const int db = degree(b);
  const mpz_class& lb = b.back();
  while (!r.empty() && degree(r) >= db) {
    const int shift = degree(r) - db;
    const mpz_class lr = r.back();
    for (auto& x : r)
      x *= lb;
    for (int j = 0; j <= db; ++j)
      r[j + shift] -= lr * b[j];
    trim(r);
  }
  return r;
}

}  // namespace

Poly gcd(Poly a, Poly b) {
  a = primitive_part(std::move(a));
  b = primitive_part(std::move(b));
  if (degree(a) < degree(b))
    std::swap(a, b);
  while (!b.empty()) {
    Poly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(std::move(r));
  }
  return a;
}

Poly divide_exact(const Poly& a, const Poly& b) {
  if (b.empty())
    throw std::logic_error("polynomial division by zero");
  if (a.empty())
    return {};
  if (degree(a) < degree(b))
    throw std::logic_error("polynomial division is not exact");
  Poly r = a;
  Poly q(a.size() - b.size() + 1);
  const int db = degree(b);
  while (!r.empty() && degree(r) >= db) {
    const int shift = degree(r) - db;
    if (!mpz_divisible_p(r.back().get_mpz_t(), b.back().get_mpz_t()))
      throw std::logic_error("polynomial division is not exact");
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), r.back().get_mpz_t(), b.back().get_mpz_t());
    q[shift] = t;
    for (int j = 0; j <= db; ++j)
      r[j + shift] -= t * b[j];
    trim(r);
  }
  if (!r.empty())
    throw std::logic_error("polynomial division is not exact");
  trim(q);
  return q;
}

namespace {

std::string power_text(int e) {
  return e == 1 ? std::string("aleph") : "aleph^" + std::to_string(e);
}

// |coef| * aleph^e with coef a positive rational.
std::string term_text(const mpq_class& coef, int e) {
  const mpz_class& p = coef.get_num();
  const mpz_class& q = coef.get_den();
  if (e == 0)
    return q == 1 ? p.get_str() : p.get_str() + "/" + q.get_str();
  if (e > 0) {
    std::string body = p == 1 ? power_text(e) : p.get_str() + "*" + power_text(e);
    return q == 1 ? body : body + "/" + q.get_str();
  }
  const std::string x = power_text(-e);
  return p.get_str() + "/" + (q == 1 ? x : "(" + q.get_str() + "*" + x + ")");
}

struct Term {
  mpq_class coef;
  int power;
};

std::string sum_text(const std::vector<Term>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const bool negative = terms[i].coef < 0;
    if (i == 0)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += term_text(abs(terms[i].coef), terms[i].power);
  }
  return out;
}

std::vector<Term> poly_terms(const Poly& p) {
  std::vector<Term> terms;
  for (int i = degree(p); i >= 0; --i)
    if (p[i] != 0)
      terms.push_back({mpq_class(p[i]), i});
  return terms;
}

}  // namespace

std::string to_string(const Poly& p) {
  if (p.empty())
    return "0";
  return sum_text(poly_terms(p));
}

}  // namespace poly

// --- Hyperrational ---------------------------------------------------------

Hyperrational::Hyperrational() : num_{}, den_{mpz_class(1)} {}

Hyperrational::Hyperrational(long value) : Hyperrational(mpz_class(value)) {}

Hyperrational::Hyperrational(const mpz_class& value) : num_{}, den_{mpz_class(1)} {
  if (value != 0)
    num_.push_back(value);
}

Hyperrational::Hyperrational(const mpq_class& value)
    : Hyperrational(from_rational(value.get_num(), value.get_den())) {}

Hyperrational::Hyperrational(Poly num, Poly den, bool canonical)
    : num_(std::move(num)), den_(std::move(den)) {
  if (!canonical)
    canonicalize();
}

Hyperrational Hyperrational::from_rational(const mpz_class& p, const mpz_class& q) {
  if (q == 0)
    throw std::domain_error("zero denominator");
  return Hyperrational(Poly{p}, Poly{q}, false);
}

Hyperrational Hyperrational::aleph() {
  return Hyperrational(Poly{mpz_class(0), mpz_class(1)}, Poly{mpz_class(1)}, true);
}

namespace {

const mpz_class kZero;

}  // namespace

Hyperrational Hyperrational::from_polys(Poly num, Poly den) {
  return Hyperrational(std::move(num), std::move(den), false);
}

void Hyperrational::canonicalize() {
  poly::trim(num_);
  poly::trim(den_);
  if (den_.empty())
    throw std::domain_error("zero denominator");
  if (num_.empty()) {
    den_ = Poly{mpz_class(1)};
    return;
  }

  // Common powers of aleph first; most values here are monomials.
  std::size_t shift = 0;
  while (num_[shift] == 0 && den_[shift] == 0)
    ++shift;
  if (shift > 0) {
    num_.erase(num_.begin(), num_.begin() + static_cast<std::ptrdiff_t>(shift));
    den_.erase(den_.begin(), den_.begin() + static_cast<std::ptrdiff_t>(shift));
  }

  if (poly::degree(num_) > 0 && poly::degree(den_) > 0) {
    Poly g = poly::gcd(num_, den_);
    if (poly::degree(g) > 0) {
      num_ = poly::divide_exact(num_, g);
      den_ = poly::divide_exact(den_, g);
    }
  }

  mpz_class c = poly::content(num_);
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), poly::content(den_).get_mpz_t());
  if (den_.back() < 0)
    c = -c;
  if (c != 1) {
    for (auto& x : num_)
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    for (auto& x : den_)
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
}

int Hyperrational::sign() const {
  return num_.empty() ? 0 : sgn(num_.back());
}

bool Hyperrational::in_unit_interval() const {
  if (num_.empty())
    return true;
  if (num_.back() < 0)
    return false;
  if (num_.size() != den_.size())
    return num_.size() < den_.size();
  if (num_.size() == 1)
    return num_[0] <= den_[0];
  return *this <= Hyperrational(1);
}

MagnitudeClass Hyperrational::magnitude() const {
  if (num_.empty())
    return MagnitudeClass::zero;
  const int dn = poly::degree(num_);
  const int dd = poly::degree(den_);
  if (dn > dd)
    return MagnitudeClass::infinite;
  if (dn < dd)
    return MagnitudeClass::infinitesimal;
  return MagnitudeClass::appreciable;
}

mpq_class Hyperrational::standard_part() const {
  switch (magnitude()) {
    case MagnitudeClass::infinite:
      throw std::domain_error("standard part of an infinite value: " + to_string());
    case MagnitudeClass::appreciable: {
      mpq_class q(num_.back(), den_.back());
      q.canonicalize();
      return q;
    }
    default:
      return 0;
  }
}

mpq_class Hyperrational::to_rational() const {
  if (!is_rational())
    throw std::domain_error("not a rational value: " + to_string());
  if (num_.empty())
    return 0;
  mpq_class q(num_[0], den_[0]);
  q.canonicalize();
  return q;
}

namespace {

mpz_class horner(const Poly& p, const mpz_class& x) {
  mpz_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

}  // namespace

mpq_class Hyperrational::substitute(const mpz_class& point) const {
  const mpz_class d = horner(den_, point);
  if (d == 0)
    throw std::domain_error("denominator vanishes at substitution point");
  mpq_class q(horner(num_, point), d);
  q.canonicalize();
  return q;
}

mpz_class Hyperrational::substitution_bound() const {
  mpz_class m = 0;
  for (const auto* p : {&num_, &den_})
    for (const auto& c : *p)
      if (abs(c) > m)
        m = abs(c);
  const int deg = std::max(poly::degree(num_), poly::degree(den_));
  return (1 + m) * (1 + std::max(deg, 0));
}

Hyperrational Hyperrational::operator-() const {
  Poly n = num_;
  for (auto& x : n)
    x = -x;
  return Hyperrational(std::move(n), den_, true);
}

Hyperrational Hyperrational::reciprocal() const {
  if (num_.empty())
    throw std::domain_error("division by zero");
  return Hyperrational(den_, num_, false);
}

namespace {

// c * aleph^power, the shape of nearly every evidence value.
struct Monomial {
  const mpz_class* coef;
  int power;
};

bool as_monomial(const Poly& p, Monomial& m) {
  const int d = poly::degree(p);
  for (int i = 0; i < d; ++i)
    if (p[i] != 0)
      return false;
  m = {&p.back(), d};
  return true;
}

}  // namespace

Hyperrational Hyperrational::monomial(mpz_class num, mpz_class den, int power) {
  if (den == 0)
    throw std::domain_error("zero denominator");
  if (num == 0)
    return {};
  if (den != 1) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (den < 0)
      g = -g;
    if (g != 1) {
      mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
    }
  }
  Poly n(static_cast<std::size_t>(std::max(power, 0)) + 1);
  Poly d(static_cast<std::size_t>(std::max(-power, 0)) + 1);
  n.back() = std::move(num);
  d.back() = std::move(den);
  return Hyperrational(std::move(n), std::move(d), true);
}

Hyperrational operator+(const Hyperrational& a, const Hyperrational& b) {
  if (a.is_zero())
    return b;
  if (b.is_zero())
    return a;
  if (a.den_ == b.den_) {
    if (a.den_.size() == 1 && a.num_.size() == 1 && b.num_.size() == 1)
      return Hyperrational::monomial(a.num_[0] + b.num_[0], a.den_[0], 0);
    return Hyperrational(poly::add(a.num_, b.num_), a.den_, false);
  }
  return Hyperrational(poly::add(poly::mul(a.num_, b.den_), poly::mul(b.num_, a.den_)),
                       poly::mul(a.den_, b.den_), false);
}

Hyperrational operator-(const Hyperrational& a, const Hyperrational& b) {
  return a + (-b);
}

Hyperrational operator*(const Hyperrational& a, const Hyperrational& b) {
  if (a.is_zero() || b.is_zero())
    return {};
  Monomial an, ad, bn, bd;
  if (as_monomial(a.num_, an) && as_monomial(a.den_, ad) && as_monomial(b.num_, bn) &&
      as_monomial(b.den_, bd))
    return Hyperrational::monomial(*an.coef * *bn.coef, *ad.coef * *bd.coef,
                                   an.power + bn.power - ad.power - bd.power);
  return Hyperrational(poly::mul(a.num_, b.num_), poly::mul(a.den_, b.den_), false);
}

Hyperrational operator/(const Hyperrational& a, const Hyperrational& b) {
  if (b.is_zero())
    throw std::domain_error("division by zero");
  if (a.is_zero())
    return {};
  Monomial an, ad, bn, bd;
  if (as_monomial(a.num_, an) && as_monomial(a.den_, ad) && as_monomial(b.num_, bn) &&
      as_monomial(b.den_, bd))
    return Hyperrational::monomial(*an.coef * *bd.coef, *ad.coef * *bn.coef,
                                   an.power + bd.power - ad.power - bn.power);
  return Hyperrational(poly::mul(a.num_, b.den_), poly::mul(a.den_, b.num_), false);
}

std::strong_ordering operator<=>(const Hyperrational& a, const Hyperrational& b) {
  if (a == b)
    return std::strong_ordering::equal;
  if (a.is_rational() && b.is_rational()) {
    const mpz_class& an = a.num_.empty() ? kZero : a.num_[0];
    const mpz_class& bn = b.num_.empty() ? kZero : b.num_[0];
    const int c = cmp(an * b.den_[0], bn * a.den_[0]);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  // Denominators have positive leading coefficients, so the sign of a - b is
  // the sign of the leading coefficient of the cross difference.
  const Poly diff = poly::sub(poly::mul(a.num_, b.den_), poly::mul(b.num_, a.den_));
  if (diff.empty())
    return std::strong_ordering::equal;
  return diff.back() > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::string Hyperrational::to_string() const {
  if (num_.empty())
    return "0";
  const int dd = poly::degree(den_);
  const bool monomial_den =
      std::all_of(den_.begin(), den_.end() - 1, [](const mpz_class& c) { return c == 0; });
  if (monomial_den) {
    std::vector<poly::Term> terms;
    for (int i = poly::degree(num_); i >= 0; --i) {
      if (num_[i] == 0)
        continue;
      mpq_class c(num_[i], den_.back());
      c.canonicalize();
      terms.push_back({c, i - dd});
    }
    return poly::sum_text(terms);
  }
  std::size_t nonzero = static_cast<std::size_t>(
      std::count_if(num_.begin(), num_.end(), [](const mpz_class& c) { return c != 0; }));
  std::string n = poly::to_string(num_);
  if (nonzero > 1)
    n = "(" + n + ")";
  return n + "/(" + poly::to_string(den_) + ")";
}

std::ostream& operator<<(std::ostream& os, const Hyperrational& h) {
  return os << h.to_string();
}

// --- parsing ---------------------------------------------------------------

namespace {

class TextParser {
public:
  explicit TextParser(std::string_view text) : text_(text) {}

  Hyperrational run() {
    Hyperrational v = expr();
    skip_space();
    if (pos_ != text_.size())
      fail("unexpected trailing input");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("bad hyperrational '" + std::string(text_) + "' at offset " +
                                std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(std::string_view s) {
    skip_space();
    if (text_.substr(pos_, s.size()) == s) {
      pos_ += s.size();
      return true;
    }
    return false;
  }

  Hyperrational expr() {
    Hyperrational v = term();
    for (;;) {
      if (accept("+"))
        v += term();
      else if (accept("-"))
        v -= term();
      else
        return v;
    }
  }

  Hyperrational term() {
    Hyperrational v = factor();
    for (;;) {
      if (accept("*"))
        v *= factor();
      else if (accept("/")) {
        Hyperrational d = factor();
        if (d.is_zero())
          fail("division by zero");
        v /= d;
      } else
        return v;
    }
  }

  Hyperrational factor() {
    if (accept("-"))
      return -factor();
    Hyperrational base = primary();
    if (accept("^")) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (start == pos_)
        fail("expected exponent");
      const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      Hyperrational r = 1;
      for (unsigned long i = 0; i < e; ++i)
        r *= base;
      return r;
    }
    return base;
  }

  Hyperrational primary() {
    skip_space();
    if (accept("(")) {
      Hyperrational v = expr();
      if (!accept(")"))
        fail("expected ')'");
      return v;
    }
    if (accept("aleph") || accept("ℵ"))
      return Hyperrational::aleph();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected integer, 'aleph' or '('");
    return Hyperrational(mpz_class(std::string(text_.substr(start, pos_ - start)), 10));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Hyperrational Hyperrational::parse(std::string_view text) { return TextParser(text).run(); }

}  // namespace evidentia
