#include "cyclominus/numeric.hpp"

#include <numeric>
#include <stdexcept>

#include <mpfr.h>

#include "cyclominus/arith.hpp"
#include "cyclominus/dirichlet.hpp"

namespace cyclominus {

namespace {

mpfr_prec_t prec_for_digits(int digits) {
  if (digits < 1) throw std::invalid_argument("digits must be positive");
  // ~3.33 bits per decimal digit plus guard bits
  return static_cast<mpfr_prec_t>(digits * 10 / 3 + 64);
}

std::string format_mpfr(mpfr_t x, int digits) {
  char* out = nullptr;
  mpfr_asprintf(&out, "%.*R*g", digits, MPFR_RNDN, x);
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

}  // namespace

std::string decimal_root(const mpz_class& base, i64 num, i64 den, int digits) {
  if (den < 1 || num < 0 || base < 1) throw std::invalid_argument("decimal_root: bad power");
  mpfr_t x;
  mpfr_init2(x, prec_for_digits(digits));
  mpfr_set_z(x, base.get_mpz_t(), MPFR_RNDN);
  mpfr_pow_ui(x, x, static_cast<unsigned long>(num), MPFR_RNDN);
  if (den > 1) mpfr_rootn_ui(x, x, static_cast<unsigned long>(den), MPFR_RNDN);
  std::string s = format_mpfr(x, digits);
  mpfr_clear(x);
  return s;
}

RootDiscriminant root_discriminant(const FieldSpec& spec, int digits) {
  RootDiscriminant rd;
  rd.disc = 1;
  for (const auto& chi : characters_of(spec)) rd.disc *= chi.conductor();

  const i64 n = spec.degree();
  if (rd.disc == 1) {
    rd.base = 1;
    rd.num = 1;
    rd.den = 1;
    rd.decimal = decimal_root(rd.base, 1, 1, digits);
    return rd;
  }

  // factor the discriminant over the primes of the modulus
  std::vector<std::pair<i64, i64>> fact;  // prime, exponent
  {
    mpz_class rest = rd.disc;
    const auto mf = Factorization::of(spec.modulus());
    for (const auto& [p, e] : mf.entries()) {
      (void)e;
      mpz_class pz = static_cast<long>(p);
      const auto k = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), pz.get_mpz_t());
      if (k > 0) fact.push_back({p, static_cast<i64>(k)});
    }
    if (rest != 1) throw std::logic_error("discriminant has a prime outside the modulus");
  }

  i64 g = 0;
  for (const auto& [p, e] : fact) {
    (void)p;
    g = std::gcd(g, e);
  }

  rd.base = 1;
  for (const auto& [p, e] : fact) {
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(e / g));
    rd.base *= pk;
  }
  const i64 q = std::gcd(g, n);
  rd.num = g / q;
  rd.den = n / q;
  if (rd.den == 1) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), rd.base.get_mpz_t(), static_cast<unsigned long>(rd.num));
    rd.base = out;
    rd.num = 1;
  }
  rd.decimal = decimal_root(rd.base, rd.num, rd.den, digits);
  return rd;
}

std::string minkowski_bound(i64 n, i64 s, int digits) {
  if (n < 1 || s < 0 || 2 * s > n) throw std::invalid_argument("minkowski_bound: need n >= 1, 0 <= 2s <= n");
  mpfr_t x, t;
  const auto prec = prec_for_digits(digits);
  mpfr_init2(x, prec);
  mpfr_init2(t, prec);

  // (pi/4)^s
  mpfr_const_pi(x, MPFR_RNDN);
  mpfr_div_ui(x, x, 4, MPFR_RNDN);
  mpfr_pow_ui(x, x, static_cast<unsigned long>(s), MPFR_RNDN);
  // * n^n
  mpfr_ui_pow_ui(t, static_cast<unsigned long>(n), static_cast<unsigned long>(n), MPFR_RNDN);
  mpfr_mul(x, x, t, MPFR_RNDN);
  // / n!
  mpfr_fac_ui(t, static_cast<unsigned long>(n), MPFR_RNDN);
  mpfr_div(x, x, t, MPFR_RNDN);
  // square
  mpfr_sqr(x, x, MPFR_RNDN);

  std::string out = format_mpfr(x, digits);
  mpfr_clear(x);
  mpfr_clear(t);
  return out;
}

bool rd_less_than_degree(const FieldSpec& spec) {
  const auto rd = root_discriminant(spec, 10);
  const i64 n = spec.degree();
  if (n <= 1) return false;
  mpz_class nn;
  mpz_ui_pow_ui(nn.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n));
  return rd.disc < nn;
}

}  // namespace cyclominus
