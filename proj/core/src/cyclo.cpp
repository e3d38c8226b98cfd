#include "cyclominus/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "cyclominus/abelian.hpp"

namespace cyclominus {

namespace {

i64 poly_degree(const Poly& f) {
  for (i64 i = static_cast<i64>(f.size()) - 1; i >= 0; --i)
    if (f[static_cast<size_t>(i)] != 0) return i;
  return -1;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// exact division by a monic divisor
Poly poly_divexact_monic(Poly num, const Poly& den) {
  const i64 dn = poly_degree(num), dd = poly_degree(den);
  if (dd < 0 || den[static_cast<size_t>(dd)] != 1) throw std::logic_error("divisor not monic");
  if (dn < dd) throw std::logic_error("degree underflow in polynomial division");
  Poly q(static_cast<size_t>(dn - dd + 1), mpz_class(0));
  for (i64 k = dn - dd; k >= 0; --k) {
    const mpz_class c = num[static_cast<size_t>(k + dd)];
    if (c == 0) continue;
    q[static_cast<size_t>(k)] = c;
    for (i64 i = 0; i <= dd; ++i) num[static_cast<size_t>(k + i)] -= c * den[static_cast<size_t>(i)];
  }
  for (const auto& c : num)
    if (c != 0) throw std::logic_error("inexact polynomial division");
  return q;
}

}  // namespace

const Poly& cyclotomic_poly(i64 n) {
  static std::map<i64, Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (n < 1) throw std::invalid_argument("cyclotomic_poly: n must be positive");
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // x^n - 1 divided by the cyclotomic polynomials of the proper divisors
  Poly num(static_cast<size_t>(n) + 1, mpz_class(0));
  num[0] = -1;
  num[static_cast<size_t>(n)] = 1;
  Poly den{mpz_class(1)};
  const auto fact = Factorization::of(n);
  for (i64 d : fact.divisors()) {
    if (d == n) continue;
    // recurse without re-locking: compute proper divisors bottom-up
    auto dit = cache.find(d);
    if (dit == cache.end()) {
      // divisors() is sorted ascending, so every proper divisor of d
      // is already cached by the time we get here — except on first use.
      Poly dnum(static_cast<size_t>(d) + 1, mpz_class(0));
      dnum[0] = -1;
      dnum[static_cast<size_t>(d)] = 1;
      Poly dden{mpz_class(1)};
      for (i64 e : Factorization::of(d).divisors()) {
        if (e == d) continue;
        dden = poly_mul(dden, cache.at(e));  // guaranteed present by ascending order
      }
      cache.emplace(d, poly_divexact_monic(std::move(dnum), dden));
      dit = cache.find(d);
    }
    den = poly_mul(den, dit->second);
  }
  auto [pos, ok] = cache.emplace(n, poly_divexact_monic(std::move(num), den));
  (void)ok;
  return pos->second;
}

mpz_class resultant(const Poly& f, const Poly& g) {
  const i64 df = poly_degree(f), dg = poly_degree(g);
  if (df < 0 || dg < 0) throw std::invalid_argument("resultant of zero polynomial");
  if (dg == 0) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), g[0].get_mpz_t(), static_cast<unsigned long>(df));
    return out;
  }
  if (df == 0) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), f[0].get_mpz_t(), static_cast<unsigned long>(dg));
    return out;
  }
  const i64 n = df + dg;
  IntMatrix syl(n, n);
  for (i64 r = 0; r < dg; ++r)
    for (i64 i = 0; i <= df; ++i) syl.at(r, r + i) = f[static_cast<size_t>(df - i)];
  for (i64 r = 0; r < df; ++r)
    for (i64 i = 0; i <= dg; ++i) syl.at(dg + r, r + i) = g[static_cast<size_t>(dg - i)];
  return det_bareiss(syl);
}

CycloElement::CycloElement(i64 order) : order_(order) {
  if (order < 1) throw std::invalid_argument("CycloElement: order must be positive");
  coeffs_.assign(static_cast<size_t>(euler_phi(order)), mpq_class(0));
}

namespace {

// reduce a rational polynomial modulo the (monic, integer) cyclotomic polynomial
std::vector<mpq_class> reduce_mod_cyclo(std::vector<mpq_class> a, i64 order) {
  const Poly& phi = cyclotomic_poly(order);
  const i64 d = static_cast<i64>(phi.size()) - 1;
  for (i64 k = static_cast<i64>(a.size()) - 1; k >= d; --k) {
    mpq_class c = a[static_cast<size_t>(k)];
    if (c == 0) continue;
    a[static_cast<size_t>(k)] = 0;
    for (i64 i = 0; i < d; ++i)
      a[static_cast<size_t>(k - d + i)] -= c * mpq_class(phi[static_cast<size_t>(i)]);
  }
  a.resize(static_cast<size_t>(d));
  for (auto& c : a) c.canonicalize();
  return a;
}

}  // namespace

CycloElement CycloElement::from_rational(i64 order, const mpq_class& r) {
  CycloElement out(order);
  out.coeffs_[0] = r;
  out.coeffs_[0].canonicalize();
  return out;
}

CycloElement CycloElement::root_power(i64 order, i64 e) {
  e %= order;
  if (e < 0) e += order;
  std::vector<mpq_class> raw(static_cast<size_t>(order) + 1, mpq_class(0));
  raw[static_cast<size_t>(e)] = 1;
  CycloElement out(order);
  out.coeffs_ = reduce_mod_cyclo(std::move(raw), order);
  return out;
}

CycloElement CycloElement::operator+(const CycloElement& o) const {
  if (order_ != o.order_) throw std::invalid_argument("mixed cyclotomic orders");
  CycloElement out(order_);
  for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
  return out;
}

CycloElement CycloElement::operator-(const CycloElement& o) const {
  if (order_ != o.order_) throw std::invalid_argument("mixed cyclotomic orders");
  CycloElement out(order_);
  for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
  return out;
}

CycloElement CycloElement::operator*(const CycloElement& o) const {
  if (order_ != o.order_) throw std::invalid_argument("mixed cyclotomic orders");
  std::vector<mpq_class> conv(2 * coeffs_.size(), mpq_class(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) conv[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  CycloElement out(order_);
  out.coeffs_ = reduce_mod_cyclo(std::move(conv), order_);
  return out;
}

CycloElement CycloElement::scaled(const mpq_class& r) const {
  CycloElement out(order_);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    out.coeffs_[i] = coeffs_[i] * r;
    out.coeffs_[i].canonicalize();
  }
  return out;
}

CycloElement CycloElement::conjugate(i64 j) const {
  j %= order_;
  if (j < 0) j += order_;
  if (std::gcd(j, order_) != 1)
    throw std::invalid_argument("conjugate exponent not coprime to the order");
  std::vector<mpq_class> raw(static_cast<size_t>(order_), mpq_class(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const i64 e = (static_cast<i64>(i) * j) % order_;
    raw[static_cast<size_t>(e)] += coeffs_[i];
  }
  CycloElement out(order_);
  out.coeffs_ = reduce_mod_cyclo(std::move(raw), order_);
  return out;
}

bool CycloElement::operator==(const CycloElement& o) const {
  return order_ == o.order_ && coeffs_ == o.coeffs_;
}

bool CycloElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloElement::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

mpq_class CycloElement::rational_value() const {
  if (!is_rational()) throw std::domain_error("element is not rational");
  return coeffs_[0];
}

mpq_class field_norm(const CycloElement& beta) {
  const i64 n = euler_phi(beta.order());
  if (beta.is_rational()) {
    const mpq_class r = beta.rational_value();
    mpq_class out;
    mpz_pow_ui(out.get_num_mpz_t(), r.get_num().get_mpz_t(), static_cast<unsigned long>(n));
    mpz_pow_ui(out.get_den_mpz_t(), r.get_den().get_mpz_t(), static_cast<unsigned long>(n));
    out.canonicalize();
    return out;
  }

  // clear denominators: beta = B(zeta)/c with B integral
  mpz_class c(1);
  for (const auto& q : beta.coeffs()) mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), q.get_den().get_mpz_t());
  Poly b;
  b.reserve(beta.coeffs().size());
  for (const auto& q : beta.coeffs()) {
    mpq_class scaledq = q * mpq_class(c);
    scaledq.canonicalize();
    if (scaledq.get_den() != 1) throw std::logic_error("denominator clearing failed");
    b.push_back(scaledq.get_num());
  }
  while (!b.empty() && b.back() == 0) b.pop_back();

  mpz_class cn;
  mpz_pow_ui(cn.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n));
  mpq_class out(resultant(cyclotomic_poly(beta.order()), b), cn);
  out.canonicalize();
  return out;
}

}  // namespace cyclominus
