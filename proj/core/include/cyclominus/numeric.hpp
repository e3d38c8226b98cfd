#pragma once

#include <string>

#include <gmpxx.h>

#include "cyclominus/field_spec.hpp"

namespace cyclominus {

// rd = base^(num/den) with base perfect-power-free and num/den in lowest terms;
// den = 1 collapses to an integer rd (base = rd, num = 1).
struct RootDiscriminant {
  mpz_class disc;  // conductor-discriminant product
  mpz_class base;
  i64 num = 1;
  i64 den = 1;
  std::string decimal;
};

RootDiscriminant root_discriminant(const FieldSpec& spec, int digits = 50);

// [(pi/4)^s * n^n / n!]^2 to `digits` significant digits, round-half-even.
std::string minkowski_bound(i64 n, i64 s, int digits = 50);

// Exact comparison rd < degree, i.e. disc < degree^degree.
bool rd_less_than_degree(const FieldSpec& spec);

// decimal rendering of an exact rational power base^(num/den)
std::string decimal_root(const mpz_class& base, i64 num, i64 den, int digits);

}  // namespace cyclominus
