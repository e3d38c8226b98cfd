#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclominus/abelian.hpp"
#include "cyclominus/arith.hpp"

namespace cyclominus {

// Abelian number field presented as the fixed field of H <= (Z/m)^x acting on Q(zeta_m).
// m >= 1 and m != 2 mod 4 (so distinct m give distinct cyclotomic fields); generators are
// stored reduced mod m, coprime to m, sorted, deduplicated, with trivial generators dropped.
class FieldSpec {
 public:
  FieldSpec(i64 m, std::vector<i64> gens);
  static FieldSpec rationals() { return FieldSpec(1, {}); }
  static FieldSpec cyclotomic(i64 m) { return FieldSpec(m, {}); }

  // Text form "m:g1,g2,..."; empty generator list allowed ("5:").
  static FieldSpec parse(std::string_view text);
  std::string to_string() const;

  i64 modulus() const { return m_; }
  const std::vector<i64>& gens() const { return gens_; }
  const std::vector<i64>& subgroup() const { return subgroup_; }  // sorted closure of gens
  bool subgroup_contains(i64 residue) const;

  i64 degree() const;            // phi(m) / |H|
  bool is_cm() const;            // totally complex with complex conjugation central: -1 not in H
  bool is_real() const;          // -1 in H
  i64 conductor() const;         // smallest f with this field inside Q(zeta_f)
  FieldSpec maximal_real_subfield() const;

  // subgroup structure of H inside (Z/m)^x
  AbelianType subgroup_structure() const;

  bool is_subfield_of(const FieldSpec& other) const;
  bool same_field(const FieldSpec& other) const;
  static FieldSpec compositum(const FieldSpec& a, const FieldSpec& b);

 private:
  i64 m_;
  std::vector<i64> gens_;
  std::vector<i64> subgroup_;
};

// Invariants of the decomposition field of p inside Q(zeta_n).
struct DecompositionData {
  i64 n = 0;
  i64 p = 0;
  i64 order = 0;  // multiplicative order of p mod n
  i64 e = 0;      // degree of the decomposition field, phi(n) / order
  i64 w = 0;      // number of roots of unity of the decomposition field, per w_lemma
  bool self_conjugate = false;
};

// Fixed field of <p> in Q(zeta_n); requires n != 2 mod 4 and gcd(p, n) = 1.
std::pair<FieldSpec, DecompositionData> decomposition_field(i64 n, i64 p);

// Number of roots of unity of the decomposition field of p in Q(zeta_n):
// 2 for p = 2; gcd(p-1, n) for odd p and even n; gcd(p-1, 2n) for odd p and odd n.
i64 w_lemma(i64 n, i64 p);

// Number of roots of unity of an arbitrary spec: largest T | m with H <= ker((Z/m)^x -> (Z/T)^x),
// doubled when odd.
i64 w_general(const FieldSpec& spec);

}  // namespace cyclominus
