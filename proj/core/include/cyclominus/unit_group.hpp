#pragma once

#include <span>
#include <vector>

#include "cyclominus/abelian.hpp"
#include "cyclominus/arith.hpp"

namespace cyclominus {

struct CyclicFactor {
  i64 order;
  i64 generator;  // residue mod m generating this factor, = 1 on the others
};

// (Z/m)^x as a product of cyclic factors obtained from the CRT decomposition,
// generated by the smallest primitive roots of the odd prime-power parts
// (and -1, 3 for the 2-power part).
class UnitGroup {
 public:
  explicit UnitGroup(i64 m);  // m >= 1

  i64 modulus() const { return m_; }
  i64 phi() const { return phi_; }
  const std::vector<CyclicFactor>& factors() const { return factors_; }
  AbelianType type() const;

  // Coordinates of x in the factor decomposition; baby-step/giant-step per factor.
  std::vector<i64> dlog(i64 x) const;
  i64 from_dlog(std::span<const i64> exps) const;

 private:
  i64 m_;
  i64 phi_;
  std::vector<CyclicFactor> factors_;
  // per factor: the prime-power modulus it lives in and the local generator
  struct Local {
    i64 pk;
    i64 gen;
    i64 order;
  };
  std::vector<Local> locals_;
};

AbelianType unit_group_type(i64 m);

// Type of the subgroup of (Z/m)^x generated by gens (residues coprime to m).
AbelianType subgroup_type(i64 m, std::span<const i64> gens);

// Sorted list of all elements of that subgroup.
std::vector<i64> subgroup_elements(i64 m, std::span<const i64> gens);

}  // namespace cyclominus
