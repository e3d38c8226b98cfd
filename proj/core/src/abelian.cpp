#include "cyclominus/abelian.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cyclominus {

AbelianType AbelianType::from_invariant_factors(std::vector<mpz_class> factors) {
  std::erase(factors, mpz_class(1));
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2) throw std::invalid_argument("AbelianType: invariant factors must be >= 1");
    if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0)
      throw std::invalid_argument("AbelianType: divisibility chain violated");
  }
  AbelianType t;
  t.factors_ = std::move(factors);
  return t;
}

AbelianType AbelianType::from_cyclic_orders(std::span<const mpz_class> orders) {
  // diagonal relation matrix, then SNF
  const int n = static_cast<int>(orders.size());
  IntMatrix rel(n, n);
  for (int i = 0; i < n; ++i) {
    if (orders[i] < 1) throw std::invalid_argument("AbelianType: cyclic orders must be >= 1");
    rel.at(i, i) = orders[i];
  }
  return cokernel_type(rel);
}

AbelianType AbelianType::from_cyclic_orders(std::span<const i64> orders) {
  std::vector<mpz_class> z(orders.begin(), orders.end());
  return from_cyclic_orders(std::span<const mpz_class>(z));
}

mpz_class AbelianType::order() const {
  mpz_class n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

mpz_class AbelianType::exponent() const {
  return factors_.empty() ? mpz_class(1) : factors_.back();
}

bool AbelianType::embeds_in(const AbelianType& other) const {
  // right-aligned divisibility of invariant factors
  if (factors_.size() > other.factors_.size()) return false;
  const std::size_t shift = other.factors_.size() - factors_.size();
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (other.factors_[shift + i] % factors_[i] != 0) return false;
  return true;
}

mpz_class AbelianType::count_order_dividing(const mpz_class& e) const {
  mpz_class n = 1;
  for (const auto& d : factors_) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), e.get_mpz_t());
    n *= g;
  }
  return n;
}

std::string AbelianType::to_string() const {
  if (factors_.empty()) return "trivial";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << " x ";
    os << "Z/" << factors_[i].get_str();
  }
  return os.str();
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void IntMatrix::append_row(std::span<const mpz_class> row) {
  if (cols_ == 0 && rows_ == 0) cols_ = static_cast<int>(row.size());
  if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("append_row: width mismatch");
  a_.insert(a_.end(), row.begin(), row.end());
  ++rows_;
}

IntMatrix IntMatrix::vstack(const IntMatrix& below) const {
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  if (cols_ != below.cols_) throw std::invalid_argument("vstack: width mismatch");
  IntMatrix out = *this;
  out.a_.insert(out.a_.end(), below.a_.begin(), below.a_.end());
  out.rows_ += below.rows_;
  return out;
}

namespace {

void row_axpy(IntMatrix& m, int dst, int src, const mpz_class& q) {
  // row[dst] -= q * row[src]
  for (int j = 0; j < m.cols(); ++j) m.at(dst, j) -= q * m.at(src, j);
}

void col_axpy(IntMatrix& m, int dst, int src, const mpz_class& q) {
  for (int i = 0; i < m.rows(); ++i) m.at(i, dst) -= q * m.at(i, src);
}

void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

mpz_class round_quotient(const mpz_class& a, const mpz_class& b) {
  // nearest-integer quotient, keeps remainders small during elimination
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_class babs = abs(b);
  if (2 * r > babs) q += 1;
  return q;
}

}  // namespace

SnfResult smith_normal_form(IntMatrix m, bool want_left_transform, bool want_right_transform) {
  SnfResult res;
  res.has_u = want_left_transform;
  res.has_v = want_right_transform;
  IntMatrix u = want_left_transform ? IntMatrix::identity(m.rows()) : IntMatrix();
  IntMatrix v = want_right_transform ? IntMatrix::identity(m.cols()) : IntMatrix();

  // Zero out column t below the pivot and row t to its right.  Nonzero remainders are
  // strictly smaller than the pivot, so promoting them guarantees termination.
  auto clear_cross = [&](int t) {
    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < m.rows(); ++i) {
        if (m.at(i, t) == 0) continue;
        mpz_class q = round_quotient(m.at(i, t), m.at(t, t));
        if (q != 0) {
          row_axpy(m, i, t, q);
          if (want_left_transform) row_axpy(u, i, t, q);
        }
        if (m.at(i, t) != 0) {
          swap_rows(m, t, i);
          if (want_left_transform) swap_rows(u, t, i);
          clean = false;
        }
      }
      if (!clean) continue;
      for (int j = t + 1; j < m.cols(); ++j) {
        if (m.at(t, j) == 0) continue;
        mpz_class q = round_quotient(m.at(t, j), m.at(t, t));
        if (q != 0) {
          col_axpy(m, j, t, q);
          if (want_right_transform) col_axpy(v, j, t, q);
        }
        if (m.at(t, j) != 0) {
          swap_cols(m, t, j);
          if (want_right_transform) swap_cols(v, t, j);
          clean = false;
        }
      }
      if (clean) return;
    }
  };

  const int n = std::min(m.rows(), m.cols());
  int t = 0;
  for (; t < n; ++t) {
    // minimal-absolute-value pivot from the trailing submatrix
    int pi = -1, pj = -1;
    for (int i = t; i < m.rows(); ++i)
      for (int j = t; j < m.cols(); ++j) {
        if (m.at(i, j) == 0) continue;
        if (pi < 0 || mpz_cmpabs(m.at(i, j).get_mpz_t(), m.at(pi, pj).get_mpz_t()) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing submatrix is zero
    swap_rows(m, t, pi);
    if (want_left_transform) swap_rows(u, t, pi);
    swap_cols(m, t, pj);
    if (want_right_transform) swap_cols(v, t, pj);
    clear_cross(t);

    // pivot must divide every entry of the trailing submatrix
    for (bool again = true; again;) {
      again = false;
      for (int i = t + 1; i < m.rows() && !again; ++i)
        for (int j = t + 1; j < m.cols() && !again; ++j)
          if (m.at(i, j) % m.at(t, t) != 0) {
            for (int k = 0; k < m.cols(); ++k) m.at(t, k) += m.at(i, k);
            if (want_left_transform)
              for (int k = 0; k < u.cols(); ++k) u.at(t, k) += u.at(i, k);
            clear_cross(t);
            again = true;
          }
    }

    if (m.at(t, t) < 0) {
      for (int j = 0; j < m.cols(); ++j) m.at(t, j) = -m.at(t, j);
      if (want_left_transform)
        for (int j = 0; j < u.cols(); ++j) u.at(t, j) = -u.at(t, j);
    }
  }
  res.rank = t;
  res.d = std::move(m);
  res.u = std::move(u);
  res.v = std::move(v);
  return res;
}

AbelianType cokernel_type(const IntMatrix& relations) {
  if (relations.cols() == 0) return AbelianType();
  if (relations.rows() == 0)
    throw std::domain_error("cokernel_type: quotient is infinite (no relations)");
  SnfResult s = smith_normal_form(relations);
  if (s.rank < relations.cols())
    throw std::domain_error("cokernel_type: quotient is infinite (rank deficit)");
  std::vector<mpz_class> inv;
  for (int i = 0; i < s.rank; ++i) inv.push_back(s.d.at(i, i));
  return AbelianType::from_invariant_factors(std::move(inv));
}

AbelianType subgroup_in_presentation(const IntMatrix& relations, const IntMatrix& gens) {
  const int s = gens.rows();
  if (s == 0) return AbelianType();
  if (gens.cols() != relations.cols())
    throw std::invalid_argument("subgroup_in_presentation: width mismatch");
  // Stack generators above relations; the left kernel of the stack, projected onto the
  // generator block, is exactly the relation lattice of the subgroup on those generators.
  IntMatrix stacked = gens.vstack(relations);
  SnfResult snf = smith_normal_form(stacked, /*want_left_transform=*/true);
  if (snf.rank < relations.cols()) {
    // ambient quotient itself must be finite for this to happen with finite input
    SnfResult check = smith_normal_form(relations);
    if (check.rank < relations.cols())
      throw std::domain_error("subgroup_in_presentation: ambient quotient is infinite");
    throw std::logic_error("subgroup_in_presentation: rank deficit with finite ambient");
  }
  IntMatrix ker(0, 0);
  std::vector<mpz_class> row(static_cast<std::size_t>(s));
  for (int i = snf.rank; i < stacked.rows(); ++i) {
    for (int j = 0; j < s; ++j) row[static_cast<std::size_t>(j)] = snf.u.at(i, j);
    ker.append_row(row);
  }
  if (ker.rows() == 0)
    throw std::domain_error("subgroup_in_presentation: generator kernel is trivial, subgroup infinite");
  return cokernel_type(ker);
}

mpz_class det_bareiss(IntMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_bareiss: matrix not square");
  const int n = m.rows();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) { piv = i; break; }
      if (piv < 0) return 0;
      swap_rows(m, k, piv);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : mpz_class(-m.at(n - 1, n - 1));
}

}  // namespace cyclominus
