#include "cyclominus/rayclass.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace cyclominus {

const std::vector<QuadraticBase>& quadratic_bases() {
  static const std::vector<QuadraticBase> bases = {
      {"gaussian", -4, 4, 0, 1},    {"eisenstein", -3, 6, 1, 1}, {"d7", -7, 2, -1, 2},
      {"d8", -8, 2, 0, 2},          {"d11", -11, 2, -1, 3},      {"d19", -19, 2, -1, 5},
      {"d43", -43, 2, -1, 11},      {"d67", -67, 2, -1, 17},     {"d163", -163, 2, -1, 41},
  };
  return bases;
}

const QuadraticBase& quadratic_base(std::string_view name_or_disc) {
  for (const auto& b : quadratic_bases())
    if (name_or_disc == b.name || name_or_disc == std::to_string(b.disc)) return b;
  throw std::invalid_argument("unknown base field: " + std::string(name_or_disc));
}

BaseFieldInvariants base_invariants(const QuadraticBase& base) {
  return BaseFieldInvariants{2, base.w, 1, 1};
}

bool splits(const QuadraticBase& base, i64 p) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("split test needs an odd prime");
  i64 d = base.disc % p;
  if (d < 0) d += p;
  if (d == 0) throw std::invalid_argument("p ramifies in this base field");
  return powmod(d, (p - 1) / 2, p) == 1;
}

namespace {

i64 poly_at(const QuadraticBase& base, i64 x, i64 mod) {
  // x^2 + b x + c mod `mod`, inputs reduced first
  i64 xr = ((x % mod) + mod) % mod;
  i64 br = ((base.b % mod) + mod) % mod;
  i64 cr = ((base.c % mod) + mod) % mod;
  return (mulmod(xr, xr, mod) + mulmod(br, xr, mod) + cr) % mod;
}

}  // namespace

Pair SplitResidueRing::mul(Pair a, Pair b) const {
  return {mulmod(a.first, b.first, pf), mulmod(a.second, b.second, pf)};
}

Pair SplitResidueRing::inv(Pair a) const { return {invmod(a.first, pf), invmod(a.second, pf)}; }

Pair SplitResidueRing::pow(Pair a, i64 e) const {
  if (e < 0) return pow(inv(a), -e);
  return {powmod(a.first, e, pf), powmod(a.second, e, pf)};
}

Pair SplitResidueRing::embed(i64 a0, i64 a1) const {
  i64 r0 = ((a0 % pf) + pf) % pf;
  i64 r1 = ((a1 % pf) + pf) % pf;
  return {(r0 + mulmod(r1, root, pf)) % pf, (r0 + mulmod(r1, conj_root, pf)) % pf};
}

i64 SplitResidueRing::norm(Pair a) const { return mulmod(a.first, a.second, pf); }

SplitResidueRing split_ring(const QuadraticBase& base, i64 p, i64 f,
                            std::optional<i64> chosen_root) {
  if (f < 1) throw std::invalid_argument("exponent must be >= 1");
  if (!splits(base, p)) throw std::domain_error("p does not split in this base field");
  i64 pf = 1;
  for (i64 i = 0; i < f; ++i) {
    if (pf > 1000000 / p) throw std::invalid_argument("p^f out of the supported range");
    pf *= p;
  }

  // root of x^2 + bx + c mod p, then Hensel lifting one power at a time
  i64 r = -1;
  for (i64 x = 0; x < p; ++x)
    if (poly_at(base, x, p) == 0) {
      r = x;
      break;
    }
  if (r < 0) throw std::logic_error("split prime without a root");
  i64 mod = p;
  for (i64 k = 1; k < f; ++k) {
    const i64 next = mod * p;
    // correction t with f(r + t*mod) = 0 mod next; f'(r) = 2r + b is a unit
    const i64 val = poly_at(base, r, next);
    const i64 deriv = ((2 * (r % p) + base.b) % p + p) % p;
    const i64 t = mulmod((p - (val / mod) % p) % p, invmod(deriv, p), p);
    r = (r + t * mod) % next;
    mod = next;
  }
  if (poly_at(base, r, pf) != 0) throw std::logic_error("Hensel lifting failed");

  SplitResidueRing ring;
  ring.base = base;
  ring.p = p;
  ring.f = f;
  ring.pf = pf;
  ring.phi = pf / p * (p - 1);
  i64 conj = ((-base.b - r) % pf + pf) % pf;
  if (conj == r) throw std::logic_error("split roots collided");
  if (chosen_root) {
    if (*chosen_root != r && *chosen_root != conj)
      throw std::invalid_argument("chosen residue is not a root of the defining polynomial");
    if (*chosen_root == conj) std::swap(r, conj);
  } else if (conj < r) {
    std::swap(r, conj);
  }
  ring.root = r;
  ring.conj_root = conj;

  if (base.w == 4) {
    ring.unit_image = ring.embed(0, 1);  // omega itself: a fourth root of unity
  } else if (base.w == 6) {
    ring.unit_image = ring.embed(1, 1);  // 1 + omega: a sixth root of unity
  } else {
    ring.unit_image = {pf - 1, pf - 1};  // -1
  }

  // the embedded generator must have exact order w and norm 1
  const i64 o1 = mult_order(ring.unit_image.first, pf);
  const i64 o2 = mult_order(ring.unit_image.second, pf);
  if (std::lcm(o1, o2) != base.w) throw std::logic_error("embedded unit has the wrong order");
  if (ring.norm(ring.unit_image) != 1) throw std::logic_error("embedded unit has norm != 1");
  return ring;
}

RayClassGroup::RayClassGroup(SplitResidueRing ring)
    : ring_(std::move(ring)), units_(ring_.pf) {
  if (units_.factors().size() != 1) throw std::logic_error("unit group of p^f must be cyclic");
  const i64 c = units_.factors()[0].order;
  if (c != ring_.phi) throw std::logic_error("unit group order mismatch");

  const Pair udlog = unit_dlog(ring_.unit_image);
  relations_ = IntMatrix(3, 2);
  relations_.at(0, 0) = c;
  relations_.at(1, 1) = c;
  relations_.at(2, 0) = udlog.first;
  relations_.at(2, 1) = udlog.second;

  SnfResult snf = smith_normal_form(relations_, false, true);
  if (snf.rank != 2) throw std::logic_error("ray class relation lattice must have full rank");
  v_ = snf.v;
  diag_ = {snf.d.at(0, 0), snf.d.at(1, 1)};
  std::vector<mpz_class> inv = diag_;
  type_ = AbelianType::from_invariant_factors(std::move(inv));

  mpz_class expected = mpz_class(c) * c;
  if (expected % ring_.base.w != 0 || type_.order() != expected / ring_.base.w)
    throw std::logic_error("ray class group order is off the unit-index formula");
}

Pair RayClassGroup::unit_dlog(Pair x) const {
  return {units_.dlog(x.first)[0], units_.dlog(x.second)[0]};
}

std::vector<mpz_class> RayClassGroup::coords(Pair x) const {
  const Pair dl = unit_dlog(x);
  std::vector<mpz_class> out(2);
  for (int j = 0; j < 2; ++j) {
    mpz_class c = dl.first * v_.at(0, j) + dl.second * v_.at(1, j);
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), diag_[static_cast<size_t>(j)].get_mpz_t());
    out[static_cast<size_t>(j)] = c;
  }
  return out;
}

bool RayClassGroup::is_principal(Pair x) const {
  for (const auto& c : coords(x))
    if (c != 0) return false;
  return true;
}

std::string to_string(KernelMatch m) {
  switch (m) {
    case KernelMatch::equal: return "equal";
    case KernelMatch::contains: return "contains";
    case KernelMatch::fail: return "fail";
  }
  return "fail";
}

NormKernelReport norm_kernel(const SplitResidueRing& ring) {
  NormKernelReport rep;
  rep.base_name = ring.base.name;
  rep.p = ring.p;
  rep.f = ring.f;
  rep.w = ring.base.w;
  rep.phi_sq = mpz_class(ring.phi) * ring.phi;

  RayClassGroup rcg{ring};
  rep.ray_class_type = rcg.type();
  rep.order = rcg.order();
  rep.order_formula_ok = rep.order * rep.w == rep.phi_sq;

  // the norm-one residues form the cyclic group generated by (g, g^{-1})
  const i64 c = ring.phi;
  IntMatrix relations(3, 2);
  relations.at(0, 0) = c;
  relations.at(1, 1) = c;
  const Pair udlog = rcg.unit_dlog(ring.unit_image);
  relations.at(2, 0) = udlog.first;
  relations.at(2, 1) = udlog.second;
  IntMatrix gens(1, 2);
  gens.at(0, 0) = 1;
  gens.at(0, 1) = c - 1;
  rep.kernel_type = subgroup_in_presentation(relations, gens);

  rep.predicted = scholz_subgroup(base_invariants(ring.base), ring.p, ring.f);
  if (rep.kernel_type == rep.predicted)
    rep.match = KernelMatch::equal;
  else if (rep.predicted.embeds_in(rep.kernel_type))
    rep.match = KernelMatch::contains;
  else
    rep.match = KernelMatch::fail;

  rep.kernel_matches_degree =
      rep.kernel_type.order() == cnf_degree(base_invariants(ring.base), ring.p, ring.f);
  return rep;
}

NormKernelReport norm_kernel(const QuadraticBase& base, i64 p, i64 f) {
  return norm_kernel(split_ring(base, p, f));
}

EsfReport esf_check(const SplitResidueRing& ring) {
  EsfReport rep;
  RayClassGroup rcg{ring};

  // all residue pairs of norm one: (a, a^{-1}) for units a
  std::vector<Pair> norm_one;
  for (i64 a = 1; a < ring.pf; ++a) {
    if (a % ring.p == 0) continue;
    norm_one.push_back({a, invmod(a, ring.pf)});
  }
  rep.norm_one_count = static_cast<i64>(norm_one.size());

  std::set<Pair> unit_powers;
  Pair u = ring.one();
  for (i64 k = 0; k < ring.base.w; ++k) {
    unit_powers.insert(u);
    u = ring.mul(u, ring.unit_image);
  }
  if (u != ring.one()) throw std::logic_error("unit generator order drifted");
  rep.unit_image_count = static_cast<i64>(unit_powers.size());

  std::set<std::vector<mpz_class>> image;
  bool elementwise = true;
  for (const Pair& x : norm_one) {
    const auto co = rcg.coords(x);
    image.insert(co);
    const bool principal = std::all_of(co.begin(), co.end(), [](const mpz_class& v) { return v == 0; });
    const bool is_unit_power = unit_powers.count(x) > 0;
    if (principal != is_unit_power) elementwise = false;
  }
  rep.kernel_order = static_cast<long>(image.size());
  rep.element_level_ok = elementwise;
  rep.counts_exact = mpz_class(rep.norm_one_count) == rep.kernel_order * rep.unit_image_count;
  rep.pass = rep.element_level_ok && rep.counts_exact && rep.unit_image_count == ring.base.w;
  return rep;
}

TranslationReport translation_check(const SplitResidueRing& ring) {
  TranslationReport rep;
  RayClassGroup rcg{ring};

  rep.identity_trivial = rcg.is_principal(ring.one()) && ring.norm(ring.one()) == 1;

  rep.units_principal = true;
  Pair u = ring.one();
  for (i64 k = 0; k < ring.base.w; ++k) {
    u = ring.mul(u, ring.unit_image);
    if (!rcg.is_principal(u) || ring.norm(u) != 1) rep.units_principal = false;
  }

  // norm-one residues are closed under products and inverses
  const i64 g = UnitGroup(ring.pf).factors()[0].generator;
  const Pair kappa{g, invmod(g, ring.pf)};
  rep.closed_under_product = true;
  std::mt19937_64 rng(4057);
  std::uniform_int_distribution<i64> exp(0, ring.phi - 1);
  for (int trial = 0; trial < 32; ++trial) {
    const Pair a = rcg.ring().pow(kappa, exp(rng));
    const Pair b = rcg.ring().pow(kappa, exp(rng));
    const Pair ab = ring.mul(a, b);
    if (ring.norm(ab) != 1 || ring.norm(ring.inv(a)) != 1) rep.closed_under_product = false;
  }

  std::set<std::vector<mpz_class>> image;
  Pair x = ring.one();
  for (i64 k = 0; k < ring.phi; ++k) {
    image.insert(rcg.coords(x));
    x = ring.mul(x, kappa);
  }
  rep.image_index_ok = static_cast<i64>(image.size()) * ring.base.w == ring.phi;

  rep.pass = rep.identity_trivial && rep.units_principal && rep.closed_under_product &&
             rep.image_index_ok;
  return rep;
}

Lemma3Report lemma3_check(i64 m, i64 n, i64 cap) {
  Lemma3Report rep;
  rep.m = m;
  rep.n = n;
  if (m < 2) throw std::invalid_argument("modulus must be >= 2");
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (cap < 1000) throw std::invalid_argument("cap too small to be useful");

  const UnitGroup units(m);
  const i64 phi = units.phi();
  if (phi > cap) throw std::invalid_argument("unit group larger than the cap");

  // surjectivity: the witness (a, 1, ..., 1) multiplies out to a
  rep.witnesses = 0;
  bool surjective = true;
  for (i64 a = 1; a < m; ++a) {
    if (gcd64(a, m) != 1) continue;
    i64 prod = a % m;
    for (i64 slot = 1; slot < n; ++slot) prod = mulmod(prod, 1, m);
    if (prod != a % m) surjective = false;
    ++rep.witnesses;
  }
  rep.surjective = surjective && rep.witnesses == phi;

  // kernel structure: generated by (g_i at slot j, g_i^{-1} at slot j+1)
  const i64 k = static_cast<i64>(units.factors().size());
  const i64 cols = k * n;
  IntMatrix relations(static_cast<int>(cols), static_cast<int>(cols));
  for (i64 slot = 0; slot < n; ++slot)
    for (i64 i = 0; i < k; ++i) {
      const auto idx = static_cast<int>(slot * k + i);
      relations.at(idx, idx) = units.factors()[static_cast<size_t>(i)].order;
    }

  if (n == 1) {
    rep.kernel_type = AbelianType();
    rep.expected_type = AbelianType();
    rep.types_match = true;
  } else {
    IntMatrix gens(static_cast<int>((n - 1) * k), static_cast<int>(cols));
    int grow = 0;
    for (i64 slot = 0; slot + 1 < n; ++slot)
      for (i64 i = 0; i < k; ++i, ++grow) {
        const i64 order = units.factors()[static_cast<size_t>(i)].order;
        gens.at(grow, static_cast<int>(slot * k + i)) = 1;
        gens.at(grow, static_cast<int>((slot + 1) * k + i)) = order - 1;
      }
    rep.kernel_type = subgroup_in_presentation(relations, gens);

    std::vector<mpz_class> orders;
    for (i64 slot = 0; slot + 1 < n; ++slot)
      for (i64 i = 0; i < k; ++i)
        orders.push_back(units.factors()[static_cast<size_t>(i)].order);
    rep.expected_type = AbelianType::from_cyclic_orders(std::span<const mpz_class>(orders));
    rep.types_match = rep.kernel_type == rep.expected_type;
  }

  // completion: any partial tuple extends to the kernel through the last slot
  std::mt19937_64 rng(20260818);
  const auto elements = [&] {
    std::vector<i64> out;
    for (i64 a = 1; a < m; ++a)
      if (gcd64(a, m) == 1) out.push_back(a);
    return out;
  }();
  std::uniform_int_distribution<size_t> pick(0, elements.size() - 1);
  rep.completion_ok = true;
  for (int trial = 0; trial < 64; ++trial) {
    i64 prod = 1;
    for (i64 slot = 0; slot + 1 < n; ++slot) prod = mulmod(prod, elements[pick(rng)], m);
    const i64 last = invmod(prod, m);
    if (mulmod(prod, last, m) != 1 % m) rep.completion_ok = false;
  }

  // full enumeration when the tuple space fits under the cap
  double size = 1;
  for (i64 slot = 0; slot < n; ++slot) size *= static_cast<double>(phi);
  if (size <= static_cast<double>(cap)) {
    rep.enumerated = true;
    i64 kernel_count = 0;
    std::vector<size_t> idx(static_cast<size_t>(n), 0);
    for (;;) {
      i64 prod = 1;
      for (i64 slot = 0; slot < n; ++slot) prod = mulmod(prod, elements[idx[static_cast<size_t>(slot)]], m);
      if (prod == 1 % m) ++kernel_count;
      i64 carry = 0;
      while (carry < n) {
        if (++idx[static_cast<size_t>(carry)] < elements.size()) break;
        idx[static_cast<size_t>(carry)] = 0;
        ++carry;
      }
      if (carry == n) break;
    }
    mpz_class expected = 1;
    for (i64 slot = 0; slot + 1 < n; ++slot) expected *= phi;
    rep.enumeration_ok = mpz_class(kernel_count) == expected;
  }

  rep.pass = rep.surjective && rep.types_match && rep.completion_ok &&
             (!rep.enumerated || rep.enumeration_ok);
  return rep;
}

}  // namespace cyclominus
