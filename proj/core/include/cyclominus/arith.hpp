#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace cyclominus {

using i64 = std::int64_t;

struct FactorEntry {
  i64 prime;
  int exponent;
};

// Prime factorization with entries sorted by ascending prime.
class Factorization {
 public:
  static Factorization of(i64 n);  // n >= 1; throws std::invalid_argument otherwise

  const std::vector<FactorEntry>& entries() const { return entries_; }
  i64 value() const { return value_; }
  int valuation(i64 p) const;  // exponent of p, 0 if absent
  std::vector<i64> divisors() const;  // all positive divisors, ascending
  bool empty() const { return entries_.empty(); }

 private:
  i64 value_ = 1;
  std::vector<FactorEntry> entries_;
};

i64 gcd64(i64 a, i64 b);
i64 mulmod(i64 a, i64 b, i64 m);
i64 powmod(i64 a, i64 e, i64 m);
i64 invmod(i64 a, i64 m);  // throws std::domain_error if gcd(a,m) != 1

i64 euler_phi(i64 n);               // n >= 1
i64 mult_order(i64 a, i64 n);       // n >= 2, gcd(a,n) = 1
bool is_self_conjugate(i64 p, i64 n);  // true iff some power of p is -1 mod n; n in {1,2} -> true

struct Congruence {
  i64 residue;
  i64 modulus;
};

// Least non-negative solution of simultaneous congruences with pairwise coprime moduli.
i64 crt_lift(std::span<const Congruence> system);

// Smallest positive primitive root mod p^k (p odd prime, or p = 2 with k <= 2).
i64 smallest_primitive_root(i64 p, int k);

bool is_prime(i64 n);

}  // namespace cyclominus
