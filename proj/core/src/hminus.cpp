#include "cyclominus/hminus.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclominus/abelian.hpp"

namespace cyclominus {

CycloElement bernoulli_b1(const DirichletCharacter& chi) {
  if (chi.is_trivial()) throw std::invalid_argument("B_1 of the trivial character");
  const i64 f = chi.conductor();
  const i64 d = chi.order();
  CycloElement sum(d);
  for (i64 a = 1; a < f; ++a) {
    const auto e = chi.exponent_at(a);
    if (!e) continue;
    sum = sum + CycloElement::root_power(d, *e).scaled(mpq_class(a));
  }
  if (f == 1) throw std::logic_error("trivial character slipped through");
  return sum.scaled(mpq_class(1, f));
}

HasseQ hasse_q(const FieldSpec& spec) {
  if (!spec.is_cm()) throw std::domain_error("unit index policy needs a CM field");
  const i64 f = spec.conductor();
  if (Factorization::of(f).entries().size() == 1) return {1, true};
  if (spec.degree() == euler_phi(spec.modulus()) && spec.modulus() == f) return {2, true};
  return {1, false};
}

HMinusResult h_minus(const FieldSpec& spec, std::optional<int> q_override) {
  if (!spec.is_cm()) throw std::domain_error("minus class number needs a CM field");

  HMinusResult res;
  res.w = w_general(spec);

  const auto chars = characters_of(spec);
  std::vector<DirichletCharacter> odd;
  for (const auto& chi : chars)
    if (chi.is_odd()) odd.push_back(chi);
  if (static_cast<i64>(odd.size()) * 2 != spec.degree())
    throw std::logic_error("odd characters must be half of the character group");

  mpq_class prod(1);
  i64 covered = 0;
  for (const auto& orbit : galois_orbits(odd)) {
    const auto& rep = orbit.representative();
    if (static_cast<i64>(orbit.members.size()) != euler_phi(rep.order()))
      throw std::logic_error("incomplete Galois orbit among the odd characters");
    covered += static_cast<i64>(orbit.members.size());
    const CycloElement b1 = bernoulli_b1(rep);
    const mpq_class value = field_norm(b1.scaled(mpq_class(-1, 2)));
    OrbitFactor of;
    of.conductor = rep.conductor();
    of.order = rep.order();
    of.size = static_cast<i64>(orbit.members.size());
    of.value = value;
    res.orbit_factors.push_back(of);
    prod *= value;
  }
  if (covered * 2 != spec.degree()) throw std::logic_error("orbit sizes do not cover the odd characters");
  std::sort(res.orbit_factors.begin(), res.orbit_factors.end(),
            [](const OrbitFactor& a, const OrbitFactor& b) {
              return std::tie(a.conductor, a.order) < std::tie(b.conductor, b.order);
            });

  const HasseQ policy = hasse_q(spec);
  res.q = policy.q;
  res.q_certain = policy.certain;
  if (q_override) {
    if (policy.certain && *q_override != policy.q)
      throw std::invalid_argument("unit index override conflicts with a certain policy");
    if (*q_override != 1 && *q_override != 2)
      throw std::invalid_argument("unit index must be 1 or 2");
    res.q = *q_override;
  }

  mpq_class assembled = prod * res.w * res.q;
  assembled.canonicalize();
  if (!q_override && !policy.certain && assembled.get_den() == 2) {
    // integrality forces the larger unit index; certainty is NOT upgraded
    res.q = 2;
    res.q_inferred = true;
    assembled *= 2;
    assembled.canonicalize();
  }
  if (assembled.get_den() != 1 || assembled <= 0)
    throw std::domain_error("assembled minus class number is not a positive integer under q=" +
                            std::to_string(res.q));
  res.value = assembled.get_num();
  return res;
}

HMinusResult h_minus_pinned(const FieldSpec& spec, std::optional<int> policy) {
  if (policy && hasse_q(spec).certain) policy.reset();
  return h_minus(spec, policy);
}

RelativeHMinus h_minus_relative(const FieldSpec& L, const FieldSpec& K,
                                std::optional<int> q_override) {
  if (!K.is_subfield_of(L)) throw std::domain_error("relative minus class number needs nested fields");
  RelativeHMinus out;
  out.top = h_minus_pinned(L, q_override);
  out.bottom = h_minus_pinned(K, q_override);
  out.ratio = mpq_class(out.top.value, out.bottom.value);
  out.ratio.canonicalize();
  out.integral = out.ratio.get_den() == 1;
  return out;
}

mpz_class maillet_h_minus(i64 p) {
  if (!is_prime(p) || p < 3) throw std::invalid_argument("Maillet determinant needs an odd prime");
  const i64 half = (p - 1) / 2;
  IntMatrix m(half, half);
  for (i64 r = 1; r <= half; ++r)
    for (i64 s = 1; s <= half; ++s)
      m.at(r - 1, s - 1) = mulmod(r, invmod(s, p), p);
  mpz_class det = det_bareiss(m);
  mpz_class a = abs(det);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>((p - 3) / 2));
  mpz_class h, rem;
  mpz_fdiv_qr(h.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), scale.get_mpz_t());
  if (rem != 0) throw std::logic_error("determinant is not divisible by the expected prime power");
  return h;
}

}  // namespace cyclominus
