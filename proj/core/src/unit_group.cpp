#include "cyclominus/unit_group.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace cyclominus {

namespace {

// g^e = target in the order-n cyclic subgroup of (Z/mod)^x; -1 if no solution.
i64 bsgs(i64 target, i64 g, i64 n, i64 mod) {
  const i64 s = static_cast<i64>(std::ceil(std::sqrt(static_cast<double>(n)))) + 1;
  std::unordered_map<i64, i64> baby;
  baby.reserve(static_cast<std::size_t>(s));
  i64 cur = 1 % mod;
  for (i64 j = 0; j < s && j < n; ++j) {
    baby.emplace(cur, j);
    cur = mulmod(cur, g, mod);
  }
  const i64 giant = powmod(invmod(g, mod), s, mod);
  cur = ((target % mod) + mod) % mod;
  for (i64 i = 0; i * s < n + s; ++i) {
    auto it = baby.find(cur);
    if (it != baby.end()) {
      i64 e = i * s + it->second;
      if (e < n) return e;
    }
    cur = mulmod(cur, giant, mod);
  }
  return -1;
}

}  // namespace

UnitGroup::UnitGroup(i64 m) : m_(m) {
  if (m < 1) throw std::invalid_argument("UnitGroup: m must be >= 1");
  phi_ = euler_phi(m);
  const auto fact = Factorization::of(m);
  for (const auto& [p, k] : fact.entries()) {
    i64 pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    const i64 cof = m / pk;
    // lift a local residue to x = r mod pk, x = 1 mod m/pk
    auto lift = [&](i64 r) {
      if (cof == 1) return ((r % pk) + pk) % pk;
      const Congruence sys[] = {{r, pk}, {1, cof}};
      return crt_lift(sys);
    };
    if (p == 2) {
      if (k == 1) continue;  // trivial local group
      if (k == 2) {
        factors_.push_back({2, lift(3)});
        locals_.push_back({pk, 3, 2});
      } else {
        factors_.push_back({2, lift(pk - 1)});
        locals_.push_back({pk, pk - 1, 2});
        factors_.push_back({pk / 4, lift(3)});
        locals_.push_back({pk, 3, pk / 4});
      }
    } else {
      const i64 g = smallest_primitive_root(p, k);
      const i64 ord = pk / p * (p - 1);
      factors_.push_back({ord, lift(g)});
      locals_.push_back({pk, g, ord});
    }
  }
}

AbelianType UnitGroup::type() const {
  std::vector<i64> orders;
  orders.reserve(factors_.size());
  for (const auto& f : factors_) orders.push_back(f.order);
  return AbelianType::from_cyclic_orders(std::span<const i64>(orders));
}

std::vector<i64> UnitGroup::dlog(i64 x) const {
  x = ((x % m_) + m_) % m_;
  if (std::gcd(x, m_) != 1 && m_ > 1)
    throw std::domain_error("UnitGroup::dlog: " + std::to_string(x) + " not a unit mod " + std::to_string(m_));
  std::vector<i64> exps(factors_.size(), 0);
  for (std::size_t i = 0; i < locals_.size(); ++i) {
    const auto& loc = locals_[i];
    const i64 xl = x % loc.pk;
    if (loc.pk % 8 == 0 && loc.gen == loc.pk - 1) {
      // two-adic pair: this slot is the sign, the next is the power of 3
      const auto& loc3 = locals_[i + 1];
      i64 e = bsgs(xl, loc3.gen, loc3.order, loc3.pk);
      if (e >= 0) {
        exps[i] = 0;
        exps[i + 1] = e;
      } else {
        e = bsgs(loc.pk - xl, loc3.gen, loc3.order, loc3.pk);
        if (e < 0) throw std::logic_error("UnitGroup::dlog: 2-adic decomposition failed");
        exps[i] = 1;
        exps[i + 1] = e;
      }
      ++i;
    } else {
      const i64 e = bsgs(xl, loc.gen, loc.order, loc.pk);
      if (e < 0) throw std::logic_error("UnitGroup::dlog: no discrete log in cyclic factor");
      exps[i] = e;
    }
  }
  return exps;
}

i64 UnitGroup::from_dlog(std::span<const i64> exps) const {
  if (exps.size() != factors_.size()) throw std::invalid_argument("from_dlog: arity mismatch");
  i64 x = 1 % m_;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    x = mulmod(x, powmod(factors_[i].generator, ((exps[i] % factors_[i].order) + factors_[i].order) % factors_[i].order, m_), m_);
  return x;
}

AbelianType unit_group_type(i64 m) { return UnitGroup(m).type(); }

AbelianType subgroup_type(i64 m, std::span<const i64> gens) {
  UnitGroup u(m);
  const int r = static_cast<int>(u.factors().size());
  IntMatrix relations(r, r);
  for (int i = 0; i < r; ++i) relations.at(i, i) = u.factors()[static_cast<std::size_t>(i)].order;
  IntMatrix s(0, 0);
  std::vector<mpz_class> row(static_cast<std::size_t>(r));
  for (i64 g : gens) {
    const auto exps = u.dlog(g);
    for (int j = 0; j < r; ++j) row[static_cast<std::size_t>(j)] = exps[static_cast<std::size_t>(j)];
    s.append_row(row);
  }
  if (s.rows() == 0 || r == 0) return AbelianType();
  return subgroup_in_presentation(relations, s);
}

std::vector<i64> subgroup_elements(i64 m, std::span<const i64> gens) {
  std::unordered_set<i64> seen;
  std::vector<i64> stack{1 % m};
  seen.insert(1 % m);
  while (!stack.empty()) {
    const i64 x = stack.back();
    stack.pop_back();
    for (i64 g : gens) {
      const i64 gg = ((g % m) + m) % m;
      if (std::gcd(gg, m) != 1 && m > 1)
        throw std::domain_error("subgroup_elements: generator not a unit");
      const i64 y = mulmod(x, gg, m);
      if (seen.insert(y).second) stack.push_back(y);
    }
  }
  std::vector<i64> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cyclominus
