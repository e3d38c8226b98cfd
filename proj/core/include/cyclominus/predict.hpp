#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cyclominus/abelian.hpp"
#include "cyclominus/field_spec.hpp"
#include "cyclominus/hminus.hpp"

namespace cyclominus {

// invariants of the CM base field entering the degree formula
struct BaseFieldInvariants {
  i64 n = 2;                 // degree over Q, even
  i64 w = 2;                 // number of roots of unity, even
  mpz_class h = 1;           // class number
  mpz_class unit_index = 1;  // index of the cyclotomic-type units
  void validate() const;
};

enum class Verdict { not_checked, verified, refuted, ambiguous_by_2 };
enum class ClaimKind { subgroup, divides, not_divides };

std::string to_string(Verdict v);

struct PredictionReport {
  std::string claim;  // scholz | c1 | schmidt | p14
  std::vector<std::pair<std::string, std::string>> inputs;  // echoed parameters, ordered
  bool applicable = true;
  std::string note;  // reason when not applicable, free-form remarks otherwise
  ClaimKind kind = ClaimKind::subgroup;
  AbelianType predicted_type;
  mpz_class predicted_order = 1;
  std::optional<FieldSpec> target;    // field whose minus class group carries the claim
  std::optional<FieldSpec> relative;  // base field when the claim is relative
  std::optional<mpq_class> oracle_value;
  bool oracle_q_uncertain = false;
  Verdict verdict = Verdict::not_checked;
};

// subgroup of the relative minus class group granted by ramification at p^f:
// Z/(phi(p^f)/w) x (Z/phi(p^f))^(n/2 - 1); rejects p^f <= 2 or w not dividing phi(p^f)
AbelianType scholz_subgroup(const BaseFieldInvariants& base, i64 p, i64 f = 1);

// degree of the p^f-ray class field over the cyclotomic extension:
// h * phi(p^f)^(n/2) * unit_index / w
mpz_class cnf_degree(const BaseFieldInvariants& base, i64 p, i64 f = 1);

PredictionReport scholz_predict(const BaseFieldInvariants& base, i64 p, i64 f = 1);

// decomposition-field form: k the fixed field of p in Q(zeta_n), F = k(zeta_{p^f});
// predicts Z/(u/w) x (Z/u)^(e/2-1) inside Cl^-(F/k) with u = phi(p^f)
PredictionReport c1_predict(i64 n, i64 p, i64 f = 1);

// full-cyclotomic form: m = n * p^a, predicts the same subgroup inside Cl^-(Q(zeta_m))
PredictionReport schmidt_predict(i64 m, i64 p);

// degree-2p CM field K inside Q(zeta_{4p^2}): p divides h^-(K) exactly when p = 1 mod 4
PredictionReport p14_predict(i64 p);

// fill oracle_value and verdict by exact minus class number computation;
// the overload with explicit fields serves claims whose report has no target attached
void verify_against_oracle(PredictionReport& rep, std::optional<int> q_override = std::nullopt);
void verify_against_oracle(PredictionReport& rep, const FieldSpec& target,
                           const std::optional<FieldSpec>& relative,
                           std::optional<int> q_override = std::nullopt);

struct MetsankylaReport {
  FieldSpec l1, l2;
  FieldSpec l, a1, a2;  // compositum, L1*(real part of L2), L2*(real part of L1)
  HMinusResult h_l, h_l1, h_l2, h_a1, h_a2;
  mpq_class t1, t2;     // h(a1)/h(l1), h(a2)/h(l2)
  bool t1_integral = false;
  bool t2_integral = false;
  int uncertain_fields = 0;
  mpq_class identity_ratio;  // h(l) / (h(l1) h(l2) t1 t2)
  Verdict verdict = Verdict::not_checked;
};

// product decomposition h^-(L1 L2) = h^-(L1) h^-(L2) T1 T2 for CM fields of
// coprime prime-power conductors p^mu, q^nu
MetsankylaReport metsankyla_check(i64 p, i64 mu, i64 q, i64 nu, const FieldSpec& l1,
                                  const FieldSpec& l2,
                                  std::optional<int> q_override = std::nullopt);

}  // namespace cyclominus
