#pragma once

#include <vector>

#include <gmpxx.h>

#include "cyclominus/arith.hpp"

namespace cyclominus {

// dense integer polynomial, coefficients low degree -> high degree
using Poly = std::vector<mpz_class>;

// n-th cyclotomic polynomial (cached)
const Poly& cyclotomic_poly(i64 n);

// Res(f, g) for integer polynomials via the Sylvester matrix
mpz_class resultant(const Poly& f, const Poly& g);

// element of Q(zeta_N) on the power basis 1, z, ..., z^(phi(N)-1)
class CycloElement {
 public:
  explicit CycloElement(i64 order);  // zero
  static CycloElement from_rational(i64 order, const mpq_class& r);
  static CycloElement root_power(i64 order, i64 e);  // zeta_N^e

  i64 order() const { return order_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  CycloElement operator+(const CycloElement& o) const;
  CycloElement operator-(const CycloElement& o) const;
  CycloElement operator*(const CycloElement& o) const;
  CycloElement scaled(const mpq_class& r) const;
  CycloElement conjugate(i64 j) const;  // zeta -> zeta^j, gcd(j, N) = 1

  bool operator==(const CycloElement& o) const;
  bool is_zero() const;
  bool is_rational() const;
  mpq_class rational_value() const;  // requires is_rational()

 private:
  i64 order_;
  std::vector<mpq_class> coeffs_;
};

// Norm from Q(zeta_N) down to Q of beta, as Res(Phi_N, c*B)/c^phi(N)
// with c clearing denominators of beta.
mpq_class field_norm(const CycloElement& beta);

}  // namespace cyclominus
