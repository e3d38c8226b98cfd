#include "cyclominus/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cyclominus {

Factorization Factorization::of(i64 n) {
  if (n < 1) throw std::invalid_argument("Factorization: n must be >= 1, got " + std::to_string(n));
  Factorization f;
  f.value_ = n;
  for (i64 p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) { n /= p; ++e; }
    f.entries_.push_back({p, e});
  }
  if (n > 1) f.entries_.push_back({n, 1});
  return f;
}

int Factorization::valuation(i64 p) const {
  for (const auto& [q, e] : entries_)
    if (q == p) return e;
  return 0;
}

std::vector<i64> Factorization::divisors() const {
  std::vector<i64> divs{1};
  for (const auto& [p, e] : entries_) {
    const std::size_t base = divs.size();
    i64 pe = 1;
    for (int i = 1; i <= e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

i64 gcd64(i64 a, i64 b) { return std::gcd(a, b); }

i64 mulmod(i64 a, i64 b, i64 m) {
  return static_cast<i64>(static_cast<__int128>(a) * b % m);
}

i64 powmod(i64 a, i64 e, i64 m) {
  if (m <= 0) throw std::invalid_argument("powmod: modulus must be positive");
  if (e < 0) throw std::invalid_argument("powmod: negative exponent");
  a %= m;
  if (a < 0) a += m;
  i64 r = 1 % m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

i64 invmod(i64 a, i64 m) {
  // extended Euclid
  i64 r0 = m, r1 = ((a % m) + m) % m, t0 = 0, t1 = 1;
  while (r1) {
    i64 q = r0 / r1;
    r0 -= q * r1; std::swap(r0, r1);
    t0 -= q * t1; std::swap(t0, t1);
  }
  if (r0 != 1) throw std::domain_error("invmod: " + std::to_string(a) + " not invertible mod " + std::to_string(m));
  return ((t0 % m) + m) % m;
}

i64 euler_phi(i64 n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
  i64 phi = 1;
  const auto fact = Factorization::of(n);
  for (const auto& [p, e] : fact.entries()) {
    i64 pe = 1;
    for (int i = 1; i < e; ++i) pe *= p;
    phi *= pe * (p - 1);
  }
  return phi;
}

i64 mult_order(i64 a, i64 n) {
  if (n < 2) throw std::invalid_argument("mult_order: n must be >= 2");
  a = ((a % n) + n) % n;
  if (std::gcd(a, n) != 1) throw std::domain_error("mult_order: gcd(a,n) != 1");
  // start from phi(n) and strip unnecessary prime factors
  i64 ord = euler_phi(n);
  const auto fact = Factorization::of(ord);
  for (const auto& [p, e] : fact.entries()) {
    for (int i = 0; i < e; ++i) {
      if (powmod(a, ord / p, n) == 1) ord /= p;
      else break;
    }
  }
  return ord;
}

bool is_self_conjugate(i64 p, i64 n) {
  if (n < 1) throw std::invalid_argument("is_self_conjugate: n must be >= 1");
  if (std::gcd(((p % n) + n) % n, n) != 1 && n > 1)
    throw std::domain_error("is_self_conjugate: gcd(p,n) != 1");
  if (n <= 2) return true;  // -1 = 1 in (Z/n)^x
  const i64 d = mult_order(p, n);
  if (d % 2) return false;  // <p> has odd order, cannot contain -1
  return powmod(p, d / 2, n) == n - 1;
}

i64 crt_lift(std::span<const Congruence> system) {
  i64 mod = 1, res = 0;
  for (const auto& [r, m] : system) {
    if (m < 1) throw std::invalid_argument("crt_lift: moduli must be positive");
    if (m == 1) continue;
    if (std::gcd(mod, m) != 1) throw std::domain_error("crt_lift: moduli not pairwise coprime");
    __int128 next_mod = static_cast<__int128>(mod) * m;
    if (next_mod > INT64_MAX) throw std::overflow_error("crt_lift: modulus product overflows");
    // res' = res + mod * ((r - res) / mod  mod m)
    i64 rr = ((r % m) + m) % m;
    i64 diff = ((rr - res % m) % m + m) % m;
    i64 step = mulmod(diff, invmod(mod % m, m), m);
    res += mod * step;
    mod = static_cast<i64>(next_mod);
  }
  return ((res % mod) + mod) % mod;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 p = 2; p * p <= n; p += (p == 2) ? 1 : 2)
    if (n % p == 0) return false;
  return true;
}

i64 smallest_primitive_root(i64 p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("smallest_primitive_root: p not prime");
  if (k < 1) throw std::invalid_argument("smallest_primitive_root: k must be >= 1");
  if (p == 2) {
    if (k == 1) return 1;
    if (k == 2) return 3;
    throw std::domain_error("smallest_primitive_root: (Z/2^k)^x not cyclic for k >= 3");
  }
  i64 pk = 1;
  for (int i = 0; i < k; ++i) pk *= p;
  const i64 phi = pk / p * (p - 1);
  const auto phi_primes = Factorization::of(phi).entries();
  for (i64 g = 2; g < pk; ++g) {
    if (g % p == 0) continue;
    bool primitive = true;
    for (const auto& [q, e] : phi_primes) {
      if (powmod(g, phi / q, pk) == 1) { primitive = false; break; }
    }
    if (primitive) return g;
  }
  throw std::logic_error("smallest_primitive_root: none found");
}

}  // namespace cyclominus
