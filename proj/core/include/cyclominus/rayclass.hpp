#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclominus/abelian.hpp"
#include "cyclominus/arith.hpp"
#include "cyclominus/predict.hpp"
#include "cyclominus/unit_group.hpp"

namespace cyclominus {

// imaginary quadratic field of class number one, omega a root of x^2 + b x + c
struct QuadraticBase {
  const char* name;
  i64 disc;
  i64 w;  // number of roots of unity
  i64 b;
  i64 c;
};

const std::vector<QuadraticBase>& quadratic_bases();  // the nine of class number one
const QuadraticBase& quadratic_base(std::string_view name_or_disc);

BaseFieldInvariants base_invariants(const QuadraticBase& base);

// does p split in the base field (p odd, p not dividing the discriminant)
bool splits(const QuadraticBase& base, i64 p);

using Pair = std::pair<i64, i64>;

// O/p^f O = Z/p^f x Z/p^f for a split odd prime, components indexed by the two
// roots of the defining polynomial mod p^f
struct SplitResidueRing {
  QuadraticBase base{};
  i64 p = 0, f = 0, pf = 0, phi = 0;
  i64 root = 0, conj_root = 0;
  Pair unit_image{};  // the generator of the roots of unity, embedded componentwise

  Pair one() const { return {1, 1}; }
  Pair mul(Pair a, Pair b) const;
  Pair inv(Pair a) const;
  Pair pow(Pair a, i64 e) const;
  Pair embed(i64 a0, i64 a1) const;  // a0 + a1*omega
  i64 norm(Pair a) const;            // product of the components
};

// requires p odd, split, p^f in range; chosen_root pins the labeling of the
// two components (default: the smaller root of the defining polynomial)
SplitResidueRing split_ring(const QuadraticBase& base, i64 p, i64 f,
                            std::optional<i64> chosen_root = std::nullopt);

// (O/p^f)^x modulo the global units: the ray class group of conductor p^f
// for a class-number-one base
class RayClassGroup {
 public:
  explicit RayClassGroup(SplitResidueRing ring);

  const SplitResidueRing& ring() const { return ring_; }
  const AbelianType& type() const { return type_; }
  mpz_class order() const { return type_.order(); }

  Pair unit_dlog(Pair x) const;               // exponents on (g,1), (1,g)
  std::vector<mpz_class> coords(Pair x) const;  // invariant-factor coordinates
  bool is_principal(Pair x) const;

 private:
  SplitResidueRing ring_;
  UnitGroup units_;
  AbelianType type_;
  IntMatrix relations_;  // unit orders and the global-unit image
  IntMatrix v_;          // change of basis into invariant-factor coordinates
  std::vector<mpz_class> diag_;
};

enum class KernelMatch { equal, contains, fail };
std::string to_string(KernelMatch m);

struct NormKernelReport {
  std::string base_name;
  i64 p = 0, f = 0;
  AbelianType ray_class_type;
  AbelianType kernel_type;     // classes killed by the componentwise product
  AbelianType predicted;       // ramification-granted subgroup for n = 2
  KernelMatch match = KernelMatch::fail;
  mpz_class phi_sq;            // phi(p^f)^2
  i64 w = 0;
  mpz_class order;             // ray class group order
  bool order_formula_ok = false;  // order == phi^2 / w
  bool kernel_matches_degree = false;  // kernel order == degree formula
};

NormKernelReport norm_kernel(const QuadraticBase& base, i64 p, i64 f);
NormKernelReport norm_kernel(const SplitResidueRing& ring);

// unit images sit exactly at the bottom of the norm-one classes:
// 1 -> E/E_m -> {norm-one residues} -> kernel in the ray class group -> 1
struct EsfReport {
  i64 norm_one_count = 0;   // residue pairs of norm 1
  i64 unit_image_count = 0; // distinct powers of the embedded unit generator
  mpz_class kernel_order;   // image of the norm-one residues in the ray class group
  bool counts_exact = false;        // norm_one == units * kernel
  bool element_level_ok = false;    // principal norm-one residues = unit powers, one by one
  bool pass = false;
};

EsfReport esf_check(const SplitResidueRing& ring);

// the ideal-group translation underlying the ray class computation
struct TranslationReport {
  bool identity_trivial = false;   // (1,1) maps to the principal class
  bool units_principal = false;    // every unit power maps to the principal class
  bool closed_under_product = false;
  bool image_index_ok = false;     // |image| * w == |norm-one residues|
  bool pass = false;
};

TranslationReport translation_check(const SplitResidueRing& ring);

// surjectivity and kernel shape of the componentwise product map
// ((Z/m)^x)^n -> (Z/m)^x
struct Lemma3Report {
  i64 m = 0, n = 0;
  i64 witnesses = 0;          // one per unit, each checked to map onto it
  bool surjective = false;
  AbelianType kernel_type;
  AbelianType expected_type;  // ((Z/m)^x)^(n-1)
  bool types_match = false;
  bool completion_ok = false; // last-slot completion of random tuples lands in the kernel
  bool enumerated = false;    // full tuple enumeration ran (within cap)
  bool enumeration_ok = false;
  bool pass = false;
};

Lemma3Report lemma3_check(i64 m, i64 n, i64 cap = 1000000);

}  // namespace cyclominus
