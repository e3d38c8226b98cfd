#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cyclominus/arith.hpp"
#include "cyclominus/field_spec.hpp"

namespace cyclominus {

// Primitive Dirichlet character of conductor f and order d, stored as the table of
// exponents e(a) with chi(a) = zeta_d^e(a) for gcd(a, f) = 1.
class DirichletCharacter {
 public:
  DirichletCharacter(i64 conductor, i64 order, std::vector<i64> exponents);

  i64 conductor() const { return f_; }
  i64 order() const { return d_; }

  // exponent of chi(a) in Z/d, or nullopt when gcd(a, f) > 1
  std::optional<i64> exponent_at(i64 a) const;

  bool is_trivial() const { return f_ == 1; }
  bool is_odd() const;  // chi(-1) = -1

  // chi^j for gcd(j, d) = 1 (a Galois conjugate: same conductor and order)
  DirichletCharacter conjugate_power(i64 j) const;

  const std::vector<i64>& exponent_table() const { return table_; }
  bool operator==(const DirichletCharacter&) const = default;

 private:
  i64 f_;
  i64 d_;
  std::vector<i64> table_;  // size f_, entry -1 where gcd(a, f) > 1
};

// All primitive characters whose kernel contains H: the character group of the field.
// Deterministic order: by (conductor, order, exponent table), Galois orbits contiguous,
// each orbit led by its lexicographically least member.
std::vector<DirichletCharacter> characters_of(const FieldSpec& spec);

struct CharacterOrbit {
  std::vector<DirichletCharacter> members;  // one Galois orbit, size phi(order)
  const DirichletCharacter& representative() const { return members.front(); }
};

std::vector<CharacterOrbit> galois_orbits(std::span<const DirichletCharacter> chars);

}  // namespace cyclominus
