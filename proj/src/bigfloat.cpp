#include "garsia/bigfloat.hpp"

namespace garsia {

Rational BigFloat::to_rational() const {
  if (mpfr_zero_p(v_)) return Rational(0);
  if (!mpfr_number_p(v_)) throw std::domain_error("non-finite BigFloat has no rational value");
  Integer m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
  Rational q(m);
  if (e >= 0) {
    Integer sc;
    mpz_mul_2exp(sc.get_mpz_t(), Integer(1).get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    q *= Rational(sc);
  } else {
    Integer sc;
    mpz_mul_2exp(sc.get_mpz_t(), Integer(1).get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    q /= Rational(sc);
  }
  q.canonicalize();
  return q;
}

Rational sqrt_rational_dir(const Rational& q, mpfr_prec_t prec, bool round_up) {
  if (q < 0) throw std::domain_error("sqrt of negative rational");
  BigFloat x = BigFloat::from_rational(q, prec, round_up ? MPFR_RNDU : MPFR_RNDD);
  BigFloat r = x.sqrt(round_up ? MPFR_RNDU : MPFR_RNDD);
  Rational out = r.to_rational();
  // directed rounding of the input then of the sqrt keeps the bound valid
  return out;
}

}  // namespace garsia
