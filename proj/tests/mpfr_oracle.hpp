#pragma once

// Arbitrary-precision reference values for the scaled complementary error
// function and the quasi-1D effective potential, used only by tests. MPFR's
// wide exponent range lets us form exp(x^2) * erfc(x) directly without
// overflow and round once at the end.

#include <mpfr.h>

namespace oracle {

// e^{x^2} erfc(x) at 256-bit working precision, rounded to double.
inline double erfcx_mp(double x) {
  const mpfr_prec_t prec = 256;
  mpfr_t mx, sq, er;
  mpfr_inits2(prec, mx, sq, er, (mpfr_ptr)nullptr);
  mpfr_set_d(mx, x, MPFR_RNDN);
  mpfr_sqr(sq, mx, MPFR_RNDN);
  mpfr_exp(sq, sq, MPFR_RNDN);
  mpfr_erfc(er, mx, MPFR_RNDN);
  mpfr_mul(er, er, sq, MPFR_RNDN);
  const double out = mpfr_get_d(er, MPFR_RNDN);
  mpfr_clears(mx, sq, er, (mpfr_ptr)nullptr);
  return out;
}

// Reduced effective potential q sqrt(pi w / 2) erfcx(sqrt(w/2) r), all in
// 256-bit arithmetic.
inline double v_eff_reduced_mp(double q, double w, double r) {
  const mpfr_prec_t prec = 256;
  mpfr_t mw, mr, arg, pref, er, pi;
  mpfr_inits2(prec, mw, mr, arg, pref, er, pi, (mpfr_ptr)nullptr);
  mpfr_set_d(mw, w, MPFR_RNDN);
  mpfr_set_d(mr, r, MPFR_RNDN);
  mpfr_const_pi(pi, MPFR_RNDN);

  // arg = sqrt(w/2) * |r|
  mpfr_div_ui(arg, mw, 2, MPFR_RNDN);
  mpfr_sqrt(arg, arg, MPFR_RNDN);
  mpfr_abs(mr, mr, MPFR_RNDN);
  mpfr_mul(arg, arg, mr, MPFR_RNDN);

  // er = exp(arg^2) erfc(arg)
  mpfr_sqr(pref, arg, MPFR_RNDN);
  mpfr_exp(pref, pref, MPFR_RNDN);
  mpfr_erfc(er, arg, MPFR_RNDN);
  mpfr_mul(er, er, pref, MPFR_RNDN);

  // pref = q sqrt(pi w / 2)
  mpfr_mul(pref, pi, mw, MPFR_RNDN);
  mpfr_div_ui(pref, pref, 2, MPFR_RNDN);
  mpfr_sqrt(pref, pref, MPFR_RNDN);
  mpfr_mul_d(pref, pref, q, MPFR_RNDN);

  mpfr_mul(er, er, pref, MPFR_RNDN);
  const double out = mpfr_get_d(er, MPFR_RNDN);
  mpfr_clears(mw, mr, arg, pref, er, pi, (mpfr_ptr)nullptr);
  return out;
}

}  // namespace oracle
