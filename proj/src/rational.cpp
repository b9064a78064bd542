#include "garsia/rational.hpp"

namespace garsia {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  std::string t = s;
  auto dot = t.find('.');
  if (dot != std::string::npos && t.find('/') == std::string::npos) {
    // decimal literal: scale by a power of ten
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    size_t frac_len = t.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") throw ParseError("bad rational literal: " + s);
    try {
      Integer num(digits, 10);
      Integer den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
      Rational q(num, den);
      q.canonicalize();
      return q;
    } catch (const std::invalid_argument&) {
      throw ParseError("bad rational literal: " + s);
    }
  }
  try {
    Rational q(t, 10);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal: " + s);
  }
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer floor_int(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Rational frac_part(const Rational& q) { return q - Rational(floor_int(q)); }

Rational pow_rational(const Rational& base, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
  r.canonicalize();
  return r;
}

double log_rational(const Rational& q) {
  // log(m * 2^e) with m in [0.5, 1); exact for magnitudes beyond double range
  signed long en, ed;
  double mn = mpz_get_d_2exp(&en, q.get_num().get_mpz_t());
  double md = mpz_get_d_2exp(&ed, q.get_den().get_mpz_t());
  return std::log(mn) - std::log(md) + (static_cast<double>(en) - static_cast<double>(ed)) * M_LN2;
}

}  // namespace garsia
