#pragma once

#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cyclominus/arith.hpp"

namespace cyclominus {

// Isomorphism type of a finite abelian group in invariant-factor form
// d1 | d2 | ... | dk, each di >= 2.  Empty list = trivial group.
class AbelianType {
 public:
  AbelianType() = default;
  static AbelianType from_invariant_factors(std::vector<mpz_class> factors);
  static AbelianType from_cyclic_orders(std::span<const mpz_class> orders);
  static AbelianType from_cyclic_orders(std::span<const i64> orders);

  const std::vector<mpz_class>& invariant_factors() const { return factors_; }
  mpz_class order() const;
  mpz_class exponent() const;  // largest invariant factor (1 if trivial)
  bool is_trivial() const { return factors_.empty(); }

  // Whether a group of this type embeds into a group of the other type.
  bool embeds_in(const AbelianType& other) const;

  // Count of elements x with x^e = 1 (determines the type as e ranges over divisors).
  mpz_class count_order_dividing(const mpz_class& e) const;

  std::string to_string() const;  // e.g. "Z/3 x Z/30", "trivial"
  bool operator==(const AbelianType&) const = default;

 private:
  std::vector<mpz_class> factors_;
};

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpz_class& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const mpz_class& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  void append_row(std::span<const mpz_class> row);
  IntMatrix vstack(const IntMatrix& below) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<mpz_class> a_;
};

struct SnfResult {
  IntMatrix d;       // diagonalized matrix, d(0,0) | d(1,1) | ...
  IntMatrix u;       // left transform, u * input ~ d up to column ops; tracked on request
  IntMatrix v;       // right transform, d = u * input * v; tracked on request
  int rank = 0;      // number of nonzero diagonal entries
  bool has_u = false;
  bool has_v = false;
};

// Smith normal form via elimination with minimal-absolute-value pivoting.
SnfResult smith_normal_form(IntMatrix m, bool want_left_transform = false,
                            bool want_right_transform = false);

// Type of Z^cols / (row lattice).  Throws std::domain_error if the quotient is infinite.
AbelianType cokernel_type(const IntMatrix& relations);

// Type of the subgroup generated by the rows of `gens` inside Z^cols / (rows of `relations`).
// The ambient quotient must be finite.
AbelianType subgroup_in_presentation(const IntMatrix& relations, const IntMatrix& gens);

// Fraction-free (Bareiss) determinant; exact over Z.
mpz_class det_bareiss(IntMatrix m);

}  // namespace cyclominus
