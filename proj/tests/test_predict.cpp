#include <doctest.h>

#include <numeric>

#include "cyclominus/predict.hpp"
#include "cyclominus/rayclass.hpp"

using namespace cyclominus;

namespace {

AbelianType type_of(std::vector<i64> orders) {
  return AbelianType::from_cyclic_orders(std::span<const i64>(orders));
}

const BaseFieldInvariants gaussian_inv{2, 4, 1, 1};
const BaseFieldInvariants eisenstein_inv{2, 6, 1, 1};

}  // namespace

TEST_CASE("ramification-granted subgroup, frozen shapes") {
  // degree-4 base with w = 10 ramified at 31: phi(31) = 30
  const BaseFieldInvariants quartic{4, 10, 1, 1};
  CHECK(scholz_subgroup(quartic, 31) == type_of({3, 30}));

  // quadratic bases: a single cyclic factor phi/w
  CHECK(scholz_subgroup(gaussian_inv, 5).is_trivial());
  CHECK(scholz_subgroup(gaussian_inv, 13) == type_of({3}));
  CHECK(scholz_subgroup(eisenstein_inv, 7).is_trivial());
  CHECK(scholz_subgroup(eisenstein_inv, 13) == type_of({2}));

  // higher degree, prime square: phi(9) = 6
  const BaseFieldInvariants sextic{6, 2, 1, 1};
  CHECK(scholz_subgroup(sextic, 3, 2) == type_of({3, 6, 6}));
}

TEST_CASE("ramification-granted subgroup, order identity") {
  for (const i64 n : {2, 4, 6, 8}) {
    for (const i64 p : {3, 5, 7, 11, 13, 31}) {
      for (const i64 f : {1, 2}) {
        const i64 phi = euler_phi(p) * (f == 2 ? p : 1);
        for (i64 w = 2; w <= phi; w += 2) {
          if (phi % w != 0) continue;
          const BaseFieldInvariants base{n, w, 1, 1};
          const auto t = scholz_subgroup(base, p, f);
          mpz_class lhs = t.order() * w;
          mpz_class rhs;
          mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(phi),
                        static_cast<unsigned long>(n / 2));
          CAPTURE(n);
          CAPTURE(p);
          CAPTURE(f);
          CAPTURE(w);
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("ramification-granted subgroup, rejections") {
  CHECK_THROWS_AS(scholz_subgroup(gaussian_inv, 2, 1), std::invalid_argument);   // p^f = 2
  CHECK_THROWS_AS(scholz_subgroup(gaussian_inv, 7), std::domain_error);          // 4 does not divide 6
  CHECK_THROWS_AS(scholz_subgroup(BaseFieldInvariants{3, 4, 1, 1}, 5), std::invalid_argument);
  CHECK_THROWS_AS(scholz_subgroup(BaseFieldInvariants{2, 3, 1, 1}, 5), std::invalid_argument);
  CHECK_THROWS_AS(scholz_subgroup(gaussian_inv, 15), std::invalid_argument);     // not prime
}

TEST_CASE("ray class degree formula") {
  CHECK(cnf_degree(gaussian_inv, 13) == 3);
  CHECK(cnf_degree(gaussian_inv, 5) == 1);
  CHECK(cnf_degree(eisenstein_inv, 7) == 1);
  CHECK(cnf_degree(BaseFieldInvariants{4, 10, 1, 1}, 31) == 90);
  // class number and unit index scale the degree linearly
  CHECK(cnf_degree(BaseFieldInvariants{2, 4, 3, 2}, 13) == 18);
  CHECK_THROWS_AS(cnf_degree(gaussian_inv, 7), std::domain_error);
}

TEST_CASE("decomposition-field claim, the flagship parameters") {
  const auto rep = c1_predict(31, 5, 1);
  REQUIRE(rep.applicable);
  CHECK(rep.predicted_type == type_of({2, 4, 4, 4, 4}));
  CHECK(rep.predicted_order == 512);
  REQUIRE(rep.target);
  REQUIRE(rep.relative);
  CHECK(rep.target->same_field(FieldSpec(155, {36})));
  CHECK(rep.relative->same_field(FieldSpec(31, {5})));
}

TEST_CASE("decomposition-field claim, degenerate and inapplicable cases") {
  // phi(4) = 4 = w at p = 5: trivial prediction, target is the full field
  const auto rep = c1_predict(4, 5, 1);
  REQUIRE(rep.applicable);
  CHECK(rep.predicted_type.is_trivial());
  CHECK(rep.target->same_field(FieldSpec::cyclotomic(20)));
  CHECK(rep.relative->same_field(FieldSpec::cyclotomic(4)));

  CHECK_FALSE(c1_predict(10, 3, 1).applicable);   // 10 = 2 mod 4
  CHECK(c1_predict(10, 3, 1).note.find("5") != std::string::npos);
  CHECK_FALSE(c1_predict(31, 31, 1).applicable);  // p | n
  CHECK_FALSE(c1_predict(5, 2, 1).applicable);    // p^f = 2
  CHECK_FALSE(c1_predict(5, 2, 2).applicable);    // 2 self-conjugate mod 5
  CHECK_FALSE(c1_predict(31, 61, 1).applicable);  // 61 = -1 mod 31
  CHECK_FALSE(c1_predict(12, 4, 1).applicable);   // not prime
}

TEST_CASE("full-cyclotomic claim agrees with the decomposition-field claim") {
  const auto rep = schmidt_predict(155, 31);
  REQUIRE(rep.applicable);
  CHECK(rep.predicted_type == type_of({3, 30}));
  CHECK(rep.predicted_order == 90);
  CHECK(rep.target->same_field(FieldSpec::cyclotomic(155)));
  CHECK_FALSE(rep.relative.has_value());

  // grid: both routes produce the same subgroup wherever both apply
  i64 applicable = 0;
  for (i64 n = 1; n <= 60; ++n) {
    if (n % 4 == 2) continue;
    for (const i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
      if (std::gcd(n, p) != 1) continue;
      for (const i64 a : {1, 2}) {
        const i64 pa = (a == 2) ? p * p : p;
        const auto via_m = schmidt_predict(n * pa, p);
        const auto via_n = c1_predict(n, p, a);
        CAPTURE(n);
        CAPTURE(p);
        CAPTURE(a);
        REQUIRE(via_m.applicable == via_n.applicable);
        if (!via_m.applicable) continue;
        ++applicable;
        CHECK(via_m.predicted_type == via_n.predicted_type);
      }
    }
  }
  CHECK(applicable > 200);
}

TEST_CASE("full-cyclotomic claim, inapplicable cases") {
  CHECK_FALSE(schmidt_predict(155, 7).applicable);   // 7 does not divide 155
  CHECK_FALSE(schmidt_predict(31, 31).applicable);   // pure prime power: nothing left
  CHECK_FALSE(schmidt_predict(6, 3).applicable);     // 6 = 2 mod 4
  CHECK_FALSE(schmidt_predict(93, 3).applicable);    // 3 self-conjugate mod 31? no: 3^15 = -1
}

TEST_CASE("oracle verification of the flagship claims") {
  // the full-cyclotomic claim at 155/31: certain unit index, exact divisibility
  auto schmidt = schmidt_predict(155, 31);
  verify_against_oracle(schmidt);
  CHECK(schmidt.verdict == Verdict::verified);
  REQUIRE(schmidt.oracle_value);
  CHECK_FALSE(schmidt.oracle_q_uncertain);
  CHECK(*schmidt.oracle_value == mpq_class(mpz_class("84473643916800")));

  // the decomposition-field claim at (31, 5): relative oracle, tolerate the
  // factor-2 ambiguity but never a refutation
  auto c1 = c1_predict(31, 5, 1);
  verify_against_oracle(c1);
  CHECK(c1.verdict != Verdict::refuted);
  CHECK(c1.verdict != Verdict::not_checked);

  // 2^8 divides h^-(F) whichever unit index is used
  const auto f1 = h_minus(*c1.target, 1);
  const auto f2 = h_minus(*c1.target, 2);
  CHECK(f1.value % 256 == 0);
  CHECK(f2.value % 256 == 0);
}

TEST_CASE("oracle verdict mechanics under unit-index uncertainty") {
  const FieldSpec sub(155, {36});
  const mpz_class v1 = h_minus(sub, 1).value;

  PredictionReport rep;
  rep.claim = "scholz";
  rep.applicable = true;
  rep.kind = ClaimKind::subgroup;

  // exactly twice the q=1 value: ambiguous under the default, verified when pinned to 2
  rep.predicted_order = v1 * 2;
  verify_against_oracle(rep, sub, std::nullopt);
  CHECK(rep.verdict == Verdict::ambiguous_by_2);
  CHECK(rep.oracle_q_uncertain);
  verify_against_oracle(rep, sub, std::nullopt, 2);
  CHECK(rep.verdict == Verdict::verified);

  // a prime beyond 2*v1 divides neither candidate: refuted
  mpz_class big;
  mpz_nextprime(big.get_mpz_t(), mpz_class(v1 * 2).get_mpz_t());
  rep.predicted_order = big;
  verify_against_oracle(rep, sub, std::nullopt);
  CHECK(rep.verdict == Verdict::refuted);

  // certain target: no ambiguity channel at all
  rep.predicted_order = h_minus(FieldSpec::cyclotomic(23)).value * 2;
  verify_against_oracle(rep, FieldSpec::cyclotomic(23), std::nullopt);
  CHECK(rep.verdict == Verdict::refuted);
  CHECK_FALSE(rep.oracle_q_uncertain);

  // inapplicable reports stay unchecked
  auto na = c1_predict(10, 3, 1);
  verify_against_oracle(na);
  CHECK(na.verdict == Verdict::not_checked);
}

TEST_CASE("prime-square family: construction invariants") {
  for (const i64 p : {3, 5, 7, 13}) {
    const auto rep = p14_predict(p);
    CAPTURE(p);
    REQUIRE(rep.applicable);
    REQUIRE(rep.target);
    CHECK(rep.target->modulus() == 4 * p * p);
    CHECK(rep.target->degree() == 2 * p);
    CHECK(rep.target->is_cm());
    // contains the fourth roots of unity; the relative group has prime order, hence cyclic
    CHECK(FieldSpec::cyclotomic(4).is_subfield_of(*rep.target));
    CHECK(rep.predicted_order == p);
    CHECK(rep.kind == (p % 4 == 1 ? ClaimKind::divides : ClaimKind::not_divides));
  }
  CHECK_FALSE(p14_predict(2).applicable);
  CHECK_FALSE(p14_predict(9).applicable);
}

TEST_CASE("prime-square family: oracle outcomes") {
  for (const i64 p : {3, 5, 7, 13}) {
    auto rep = p14_predict(p);
    verify_against_oracle(rep);
    CAPTURE(p);
    CHECK(rep.verdict == Verdict::verified);
  }
}

TEST_CASE("product decomposition across coprime prime-power conductors") {
  // full cyclotomic pairs
  auto r57 = metsankyla_check(5, 1, 7, 1, FieldSpec::cyclotomic(5), FieldSpec::cyclotomic(7));
  CHECK(r57.verdict == Verdict::verified);
  CHECK(r57.t1_integral);
  CHECK(r57.t2_integral);
  CHECK(r57.identity_ratio == 1);
  CHECK(r57.l.same_field(FieldSpec::cyclotomic(35)));

  auto r43 = metsankyla_check(2, 2, 3, 1, FieldSpec::cyclotomic(4), FieldSpec::cyclotomic(3));
  CHECK(r43.verdict == Verdict::verified);
  CHECK(r43.uncertain_fields == 0);  // both halves have prime-power conductors

  auto r59 = metsankyla_check(5, 1, 3, 2, FieldSpec::cyclotomic(5), FieldSpec::cyclotomic(9));
  CHECK(r59.verdict == Verdict::verified);

  // proper CM subfield on one side: Q(zeta_3) presented inside Q(zeta_9)
  auto rsub = metsankyla_check(5, 1, 3, 2, FieldSpec::cyclotomic(5), FieldSpec(9, {4}));
  CHECK(rsub.verdict == Verdict::verified);

  CHECK_THROWS_AS(metsankyla_check(5, 1, 5, 1, FieldSpec::cyclotomic(5), FieldSpec::cyclotomic(5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(metsankyla_check(5, 1, 7, 1, FieldSpec::cyclotomic(7), FieldSpec::cyclotomic(5)),
                  std::domain_error);
  CHECK_THROWS_AS(metsankyla_check(5, 1, 7, 1, FieldSpec(5, {4}), FieldSpec::cyclotomic(7)),
                  std::domain_error);
}

TEST_CASE("verdict names") {
  CHECK(to_string(Verdict::verified) == "verified");
  CHECK(to_string(Verdict::refuted) == "refuted");
  CHECK(to_string(Verdict::ambiguous_by_2) == "oracle-ambiguous-by-2");
  CHECK(to_string(Verdict::not_checked) == "not-checked");
}
