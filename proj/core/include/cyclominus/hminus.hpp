#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cyclominus/cyclo.hpp"
#include "cyclominus/dirichlet.hpp"
#include "cyclominus/field_spec.hpp"

namespace cyclominus {

// generalized Bernoulli number B_{1,chi} = (1/f) * sum chi(a)*a, as an element
// of Q(zeta_d) where d is the character order; rejects the trivial character
CycloElement bernoulli_b1(const DirichletCharacter& chi);

struct HasseQ {
  int q = 1;
  bool certain = false;
};

// unit-index factor policy: prime-power conductor -> 1 (certain),
// full cyclotomic field of composite conductor -> 2 (certain),
// anything else -> 1 (uncertain)
HasseQ hasse_q(const FieldSpec& spec);

struct OrbitFactor {
  i64 conductor = 0;
  i64 order = 0;
  i64 size = 0;              // orbit length, equals phi(order)
  mpq_class value;           // Norm(-B_{1,chi}/2) over the orbit
};

struct HMinusResult {
  mpz_class value;           // the minus class number
  int q = 1;
  bool q_certain = false;
  bool q_inferred = false;   // true when integrality forced q = 2
  i64 w = 0;                 // number of roots of unity
  std::vector<OrbitFactor> orbit_factors;
};

// exact minus class number h^- = q * w * prod over odd primitive characters
// of (-B_{1,chi}/2), grouped into Galois orbits.  q_override pins the unit
// index when the policy is uncertain; overriding a certain policy is an error.
HMinusResult h_minus(const FieldSpec& spec, std::optional<int> q_override = std::nullopt);

// h_minus with the pin applied only where the unit index is not already proven;
// fields with a certain policy keep it, so one policy can span several fields
HMinusResult h_minus_pinned(const FieldSpec& spec, std::optional<int> policy);

struct RelativeHMinus {
  mpq_class ratio;
  bool integral = false;
  HMinusResult top;
  HMinusResult bottom;
};

// h^-(L)/h^-(K) for CM fields K inside L; the pin follows h_minus_pinned
// semantics on each field separately
RelativeHMinus h_minus_relative(const FieldSpec& L, const FieldSpec& K,
                                std::optional<int> q_override = std::nullopt);

// independent route for prime conductors: |det M| = p^((p-3)/2) * h^-(Q(zeta_p))
// where M[r][s] is the least positive residue of r*s^{-1} mod p, 1 <= r,s <= (p-1)/2
mpz_class maillet_h_minus(i64 p);

}  // namespace cyclominus
