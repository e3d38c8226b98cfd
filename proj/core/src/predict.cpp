#include "cyclominus/predict.hpp"

#include <numeric>
#include <stdexcept>

namespace cyclominus {

void BaseFieldInvariants::validate() const {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("base degree must be even and >= 2");
  if (w < 2 || w % 2 != 0) throw std::invalid_argument("base root number must be even and >= 2");
  if (h < 1 || unit_index < 1) throw std::invalid_argument("class number and unit index must be >= 1");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::not_checked: return "not-checked";
    case Verdict::verified: return "verified";
    case Verdict::refuted: return "refuted";
    case Verdict::ambiguous_by_2: return "oracle-ambiguous-by-2";
  }
  return "not-checked";
}

namespace {

mpz_class prime_power(i64 p, i64 f) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(f));
  return out;
}

void check_modulus(i64 p, i64 f) {
  if (!is_prime(p)) throw std::invalid_argument("ramified modulus must be a prime power");
  if (f < 1) throw std::invalid_argument("exponent must be >= 1");
  if (prime_power(p, f) <= 2) throw std::invalid_argument("modulus must exceed 2");
  if (f > 40) throw std::invalid_argument("modulus exponent out of range");
}

void set_not_applicable(PredictionReport& rep, std::string reason) {
  rep.applicable = false;
  rep.note = std::move(reason);
  rep.predicted_type = AbelianType::from_invariant_factors({});
  rep.predicted_order = 1;
}

}  // namespace

AbelianType scholz_subgroup(const BaseFieldInvariants& base, i64 p, i64 f) {
  base.validate();
  check_modulus(p, f);
  const mpz_class phi = prime_power(p, f) - prime_power(p, f - 1);
  if (phi % base.w != 0) throw std::domain_error("root number does not divide phi(p^f)");
  if (phi.fits_slong_p() == 0) throw std::invalid_argument("modulus out of range");
  const i64 phi_l = static_cast<i64>(phi.get_si());
  std::vector<i64> orders{phi_l / base.w};
  for (i64 i = 0; i < base.n / 2 - 1; ++i) orders.push_back(phi_l);
  return AbelianType::from_cyclic_orders(orders);
}

mpz_class cnf_degree(const BaseFieldInvariants& base, i64 p, i64 f) {
  base.validate();
  check_modulus(p, f);
  const mpz_class phi = prime_power(p, f) - prime_power(p, f - 1);
  mpz_class num;
  mpz_pow_ui(num.get_mpz_t(), phi.get_mpz_t(), static_cast<unsigned long>(base.n / 2));
  num *= base.h;
  num *= base.unit_index;
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), mpz_class(base.w).get_mpz_t());
  if (r != 0) throw std::domain_error("degree formula is not integral for these invariants");
  return q;
}

PredictionReport scholz_predict(const BaseFieldInvariants& base, i64 p, i64 f) {
  PredictionReport rep;
  rep.claim = "scholz";
  rep.inputs = {{"n", std::to_string(base.n)},
                {"w", std::to_string(base.w)},
                {"h", base.h.get_str()},
                {"unit_index", base.unit_index.get_str()},
                {"p", std::to_string(p)},
                {"f", std::to_string(f)}};
  rep.predicted_type = scholz_subgroup(base, p, f);
  rep.predicted_order = rep.predicted_type.order();
  return rep;
}

PredictionReport c1_predict(i64 n, i64 p, i64 f) {
  PredictionReport rep;
  rep.claim = "c1";
  rep.inputs = {{"n", std::to_string(n)},
                {"p", std::to_string(p)},
                {"f", std::to_string(f)}};
  if (n < 1 || f < 1) throw std::invalid_argument("need n >= 1 and f >= 1");
  if (!is_prime(p)) {
    set_not_applicable(rep, "p must be prime");
    return rep;
  }
  if (n % 4 == 2) {
    set_not_applicable(rep, "modulus " + std::to_string(n) + " is 2 mod 4; use " +
                                std::to_string(n / 2) + " for the same field");
    return rep;
  }
  if (std::gcd(p, n) != 1) {
    set_not_applicable(rep, "p must not divide n");
    return rep;
  }
  mpz_class pf = prime_power(p, f);
  if (pf <= 2 || pf.fits_slong_p() == 0) {
    set_not_applicable(rep, "p^f must exceed 2 and stay in range");
    return rep;
  }
  if (is_self_conjugate(p, n)) {
    set_not_applicable(rep, "p is self-conjugate modulo " + std::to_string(n) +
                                ": the decomposition field is real");
    return rep;
  }

  const i64 u = euler_phi(p) * (f > 1 ? static_cast<i64>(prime_power(p, f - 1).get_si()) : 1);
  const i64 e = euler_phi(n) / mult_order(p, n);
  if (e % 2 != 0) throw std::logic_error("imaginary decomposition field with odd degree");
  const i64 w = w_lemma(n, p);
  if (u % w != 0) throw std::logic_error("root number does not divide the local unit order");

  std::vector<i64> orders{u / w};
  for (i64 i = 0; i < e / 2 - 1; ++i) orders.push_back(u);
  rep.predicted_type = AbelianType::from_cyclic_orders(orders);
  rep.predicted_order = rep.predicted_type.order();

  const i64 pfl = static_cast<i64>(pf.get_si());
  const i64 big = n * pfl;
  rep.relative = FieldSpec(n, {p % n});
  rep.target = FieldSpec(big, {crt_lift(std::vector<Congruence>{{1, pfl}, {p % n, n}})});
  return rep;
}

PredictionReport schmidt_predict(i64 m, i64 p) {
  PredictionReport rep;
  rep.claim = "schmidt";
  rep.inputs = {{"m", std::to_string(m)}, {"p", std::to_string(p)}};
  if (m < 1) throw std::invalid_argument("need m >= 1");
  if (!is_prime(p)) {
    set_not_applicable(rep, "p must be prime");
    return rep;
  }
  if (m % 4 == 2) {
    set_not_applicable(rep, "modulus " + std::to_string(m) + " is 2 mod 4; use " +
                                std::to_string(m / 2) + " for the same field");
    return rep;
  }
  const i64 a = Factorization::of(m).valuation(p);
  if (a == 0) {
    set_not_applicable(rep, "p must divide m");
    return rep;
  }
  i64 pa = 1;
  for (i64 i = 0; i < a; ++i) pa *= p;
  const i64 n = m / pa;
  if (pa <= 2) {
    set_not_applicable(rep, "the p-part of m must exceed 2");
    return rep;
  }
  if (is_self_conjugate(p, n)) {
    set_not_applicable(rep, "p is self-conjugate modulo " + std::to_string(n) +
                                ": the decomposition field is real");
    return rep;
  }

  // own route: w0 = phi(p^a)/w, then the same cyclic orders as the
  // decomposition-field form; both must agree
  const i64 u = euler_phi(pa);
  const i64 w = w_lemma(n, p);
  const i64 e = euler_phi(n) / mult_order(p, n);
  std::vector<i64> orders{u / w};
  for (i64 i = 0; i < e / 2 - 1; ++i) orders.push_back(u);
  rep.predicted_type = AbelianType::from_cyclic_orders(orders);
  rep.predicted_order = rep.predicted_type.order();

  const auto other = c1_predict(n, p, a);
  if (!other.applicable || !(other.predicted_type == rep.predicted_type))
    throw std::logic_error("the two routes to the predicted subgroup disagree");

  rep.target = FieldSpec::cyclotomic(m);
  return rep;
}

PredictionReport p14_predict(i64 p) {
  PredictionReport rep;
  rep.claim = "p14";
  rep.inputs = {{"p", std::to_string(p)}};
  if (!is_prime(p) || p == 2) {
    set_not_applicable(rep, "p must be an odd prime");
    return rep;
  }
  if (p > 1000) {
    set_not_applicable(rep, "p out of the supported range");
    return rep;
  }
  const i64 p2 = p * p;
  const i64 g = smallest_primitive_root(p, 2);
  const i64 gp = powmod(g, p, p2);
  const i64 gen = crt_lift(std::vector<Congruence>{{1, 4}, {gp, p2}});
  rep.target = FieldSpec(4 * p2, {gen});

  if (p % 4 == 1) {
    rep.kind = ClaimKind::divides;
    rep.predicted_type = AbelianType::from_cyclic_orders(std::vector<i64>{p});
    rep.predicted_order = p;
  } else {
    rep.kind = ClaimKind::not_divides;
    rep.predicted_type = AbelianType::from_invariant_factors({});
    rep.predicted_order = p;
  }
  return rep;
}

void verify_against_oracle(PredictionReport& rep, const FieldSpec& target,
                           const std::optional<FieldSpec>& relative,
                           std::optional<int> q_override) {
  if (!rep.applicable) {
    rep.verdict = Verdict::not_checked;
    return;
  }
  const HMinusResult top = h_minus_pinned(target, q_override);
  bool uncertain = !top.q_certain;
  mpq_class ratio(top.value);
  if (relative) {
    const HMinusResult bottom = h_minus_pinned(*relative, q_override);
    uncertain = uncertain || !bottom.q_certain;
    ratio /= mpq_class(bottom.value);
    ratio.canonicalize();
  }
  rep.oracle_value = ratio;
  rep.oracle_q_uncertain = uncertain;

  if (rep.kind == ClaimKind::not_divides) {
    // the tested prime is odd, so the factor-2 ambiguity never matters here
    mpq_class scaled = ratio / mpq_class(rep.predicted_order);
    scaled.canonicalize();
    rep.verdict = scaled.get_den() == 1 ? Verdict::refuted : Verdict::verified;
    return;
  }

  mpq_class strict = ratio / mpq_class(rep.predicted_order);
  strict.canonicalize();
  if (strict.get_den() == 1) {
    rep.verdict = Verdict::verified;
    return;
  }
  mpq_class relaxed = strict * 2;
  relaxed.canonicalize();
  if (uncertain && relaxed.get_den() == 1) {
    rep.verdict = Verdict::ambiguous_by_2;
    return;
  }
  rep.verdict = Verdict::refuted;
}

void verify_against_oracle(PredictionReport& rep, std::optional<int> q_override) {
  if (!rep.applicable) {
    rep.verdict = Verdict::not_checked;
    return;
  }
  if (!rep.target) throw std::invalid_argument("this claim carries no target field; supply one");
  verify_against_oracle(rep, *rep.target, rep.relative, q_override);
}

MetsankylaReport metsankyla_check(i64 p, i64 mu, i64 q, i64 nu, const FieldSpec& l1,
                                  const FieldSpec& l2, std::optional<int> q_override) {
  if (!is_prime(p) || !is_prime(q) || p == q) throw std::invalid_argument("need distinct primes");
  if (mu < 1 || nu < 1) throw std::invalid_argument("exponents must be >= 1");
  mpz_class pmu = 1, qnu = 1;
  for (i64 i = 0; i < mu; ++i) pmu *= p;
  for (i64 i = 0; i < nu; ++i) qnu *= q;
  if (pmu <= 2 || qnu <= 2 || pmu.fits_slong_p() == 0 || qnu.fits_slong_p() == 0)
    throw std::invalid_argument("prime powers must exceed 2 and stay in range");
  const FieldSpec amb1 = FieldSpec::cyclotomic(pmu.get_si());
  const FieldSpec amb2 = FieldSpec::cyclotomic(qnu.get_si());
  if (!l1.is_subfield_of(amb1)) throw std::domain_error("first field must lie in the first prime-power cyclotomic field");
  if (!l2.is_subfield_of(amb2)) throw std::domain_error("second field must lie in the second prime-power cyclotomic field");
  if (!l1.is_cm() || !l2.is_cm()) throw std::domain_error("both fields must be CM");

  MetsankylaReport out{l1,
                       l2,
                       FieldSpec::compositum(l1, l2),
                       FieldSpec::compositum(l1, l2.maximal_real_subfield()),
                       FieldSpec::compositum(l2, l1.maximal_real_subfield()),
                       {}, {}, {}, {}, {}, {}, {}};
  out.h_l = h_minus_pinned(out.l, q_override);
  out.h_l1 = h_minus_pinned(l1, q_override);
  out.h_l2 = h_minus_pinned(l2, q_override);
  out.h_a1 = h_minus_pinned(out.a1, q_override);
  out.h_a2 = h_minus_pinned(out.a2, q_override);

  out.t1 = mpq_class(out.h_a1.value, out.h_l1.value);
  out.t1.canonicalize();
  out.t1_integral = out.t1.get_den() == 1;
  out.t2 = mpq_class(out.h_a2.value, out.h_l2.value);
  out.t2.canonicalize();
  out.t2_integral = out.t2.get_den() == 1;

  for (const HMinusResult* r : {&out.h_l, &out.h_l1, &out.h_l2, &out.h_a1, &out.h_a2})
    if (!r->q_certain) ++out.uncertain_fields;

  mpq_class rhs = mpq_class(out.h_l1.value) * mpq_class(out.h_l2.value) * out.t1 * out.t2;
  out.identity_ratio = mpq_class(out.h_l.value) / rhs;
  out.identity_ratio.canonicalize();

  if (out.identity_ratio == 1) {
    out.verdict = Verdict::verified;
  } else if (out.uncertain_fields > 0) {
    // off by a power of two only?
    mpq_class r = out.identity_ratio;
    if (r < 1) r = 1 / r;
    r.canonicalize();
    mpz_class num = r.get_num();
    const bool pow2 = r.get_den() == 1 && mpz_popcount(num.get_mpz_t()) == 1;
    out.verdict = pow2 ? Verdict::ambiguous_by_2 : Verdict::refuted;
  } else {
    out.verdict = Verdict::refuted;
  }
  return out;
}

}  // namespace cyclominus
