#include "cyclominus/dirichlet.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cyclominus/unit_group.hpp"

namespace cyclominus {

DirichletCharacter::DirichletCharacter(i64 conductor, i64 order, std::vector<i64> exponents)
    : f_(conductor), d_(order), table_(std::move(exponents)) {
  if (f_ < 1 || d_ < 1) throw std::invalid_argument("DirichletCharacter: bad conductor/order");
  if (static_cast<i64>(table_.size()) != f_)
    throw std::invalid_argument("DirichletCharacter: table size != conductor");
  i64 g = d_;
  for (i64 a = 0; a < f_; ++a) {
    const bool unit = (f_ == 1) ? (a == 0) : (std::gcd(a, f_) == 1);
    if (!unit) {
      if (table_[static_cast<std::size_t>(a)] != -1)
        throw std::invalid_argument("DirichletCharacter: non-unit entry must be -1");
      continue;
    }
    const i64 e = table_[static_cast<std::size_t>(a)];
    if (e < 0 || e >= d_) throw std::invalid_argument("DirichletCharacter: exponent out of range");
    g = std::gcd(g, e);
    // multiplicativity
    for (i64 b = a; b < f_; ++b) {
      if (f_ > 1 && std::gcd(b, f_) != 1) continue;
      const i64 ab = (f_ == 1) ? 0 : mulmod(a, b, f_);
      if ((table_[static_cast<std::size_t>(a)] + table_[static_cast<std::size_t>(b)]) % d_ !=
          table_[static_cast<std::size_t>(ab)])
        throw std::invalid_argument("DirichletCharacter: table not multiplicative");
    }
  }
  if (g != 1 && d_ > 1) throw std::invalid_argument("DirichletCharacter: order not exact");
}

std::optional<i64> DirichletCharacter::exponent_at(i64 a) const {
  a = ((a % f_) + f_) % f_;
  const i64 e = table_[static_cast<std::size_t>(a)];
  if (e < 0) return std::nullopt;
  return e;
}

bool DirichletCharacter::is_odd() const {
  if (f_ <= 2) return false;
  return table_[static_cast<std::size_t>(f_ - 1)] == d_ / 2 && d_ % 2 == 0;
}

DirichletCharacter DirichletCharacter::conjugate_power(i64 j) const {
  j = ((j % d_) + d_) % d_;
  if (std::gcd(j, d_) != 1)
    throw std::invalid_argument("conjugate_power: exponent not coprime to order");
  std::vector<i64> t(table_.size(), -1);
  for (std::size_t a = 0; a < table_.size(); ++a)
    if (table_[a] >= 0) t[a] = mulmod(table_[a], j, d_);
  return DirichletCharacter(f_, d_, std::move(t));
}

namespace {

// character of (Z/m)^x given by coordinates against the unit-group factors
struct RawCharacter {
  const UnitGroup* group;
  std::vector<i64> coords;  // coords[i] < factor order
  i64 big_order;            // lcm of factor orders

  // exponent of chi(x) in Z/big_order
  i64 raw_exponent(const std::vector<i64>& dlog) const {
    i64 e = 0;
    const auto& fac = group->factors();
    for (std::size_t i = 0; i < coords.size(); ++i) {
      const i64 scale = big_order / fac[i].order;
      e = (e + mulmod(mulmod(coords[i], dlog[i], big_order), scale, big_order)) % big_order;
    }
    return e;
  }
};

}  // namespace

std::vector<DirichletCharacter> characters_of(const FieldSpec& spec) {
  const i64 m = spec.modulus();
  const UnitGroup group(m);
  const auto& fac = group.factors();
  i64 big = 1;
  for (const auto& f : fac) big = std::lcm(big, f.order);

  // dlog of every unit once; characters_of touches them all repeatedly
  std::map<i64, std::vector<i64>> dlogs;
  for (i64 x = 0; x < std::max<i64>(m, 1); ++x) {
    if (m == 1) { dlogs[0] = {}; break; }
    if (std::gcd(x, m) == 1) dlogs[x] = group.dlog(x);
  }

  std::vector<std::vector<i64>> h_dlogs;
  for (i64 g : spec.gens()) h_dlogs.push_back(dlogs.at(g));

  std::vector<DirichletCharacter> out;
  std::vector<i64> coords(fac.size(), 0);
  // iterate over all coordinate tuples
  auto advance = [&]() {
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (++coords[i] < fac[i].order) return true;
      coords[i] = 0;
    }
    return false;
  };

  const i64 expected = spec.degree();
  bool more = true;
  do {
    RawCharacter raw{&group, coords, big};
    bool trivial_on_h = true;
    for (const auto& hd : h_dlogs)
      if (raw.raw_exponent(hd) != 0) { trivial_on_h = false; break; }
    if (trivial_on_h) {
      // exact order of this character
      i64 g = big;
      for (std::size_t i = 0; i < coords.size(); ++i)
        g = std::gcd(g, mulmod(coords[i], big / fac[i].order, big));
      const i64 d = big / std::gcd(big, g);
      // conductor: smallest divisor whose reduction kernel is killed
      i64 cond = m;
      for (i64 f : Factorization::of(m).divisors()) {
        bool killed = true;
        for (i64 x = 1 + f; x <= m - 1 && killed; x += f)
          if (std::gcd(x, m) == 1 && raw.raw_exponent(dlogs.at(x)) != 0) killed = false;
        if (killed) { cond = f; break; }
      }
      // primitive table over the conductor
      std::vector<i64> table(static_cast<std::size_t>(cond), -1);
      for (i64 a = 0; a < cond; ++a) {
        const bool unit = (cond == 1) ? (a == 0) : (std::gcd(a, cond) == 1);
        if (!unit) continue;
        i64 lift = a;
        while (m > 1 && std::gcd(lift % m, m) != 1) lift += cond;
        const i64 e = (m == 1) ? 0 : raw.raw_exponent(dlogs.at(lift % m));
        table[static_cast<std::size_t>(a)] = (d == 1) ? 0 : e / (big / d);
      }
      out.emplace_back(cond, d, std::move(table));
    }
    more = advance();
  } while (more);

  if (static_cast<i64>(out.size()) != expected)
    throw std::logic_error("characters_of: count != degree");

  // orbit-aware deterministic order
  auto orbits = galois_orbits(out);
  std::sort(orbits.begin(), orbits.end(), [](const CharacterOrbit& a, const CharacterOrbit& b) {
    const auto& x = a.representative();
    const auto& y = b.representative();
    if (x.conductor() != y.conductor()) return x.conductor() < y.conductor();
    if (x.order() != y.order()) return x.order() < y.order();
    return x.exponent_table() < y.exponent_table();
  });
  out.clear();
  for (auto& orb : orbits)
    for (auto& ch : orb.members) out.push_back(std::move(ch));
  return out;
}

std::vector<CharacterOrbit> galois_orbits(std::span<const DirichletCharacter> chars) {
  std::vector<bool> used(chars.size(), false);
  std::vector<CharacterOrbit> orbits;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    if (used[i]) continue;
    CharacterOrbit orb;
    const i64 d = chars[i].order();
    // collect all conjugate powers present in the list
    std::vector<DirichletCharacter> conj;
    for (i64 j = 1; j < std::max<i64>(d, 2); ++j) {
      if (std::gcd(j, d) != 1) continue;
      conj.push_back(chars[i].conjugate_power(j));
    }
    for (auto& c : conj) {
      auto it = std::find(chars.begin(), chars.end(), c);
      if (it == chars.end())
        throw std::logic_error("galois_orbits: conjugate missing from character list");
      used[static_cast<std::size_t>(it - chars.begin())] = true;
    }
    std::sort(conj.begin(), conj.end(), [](const auto& a, const auto& b) {
      return a.exponent_table() < b.exponent_table();
    });
    conj.erase(std::unique(conj.begin(), conj.end()), conj.end());
    orb.members = std::move(conj);
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

}  // namespace cyclominus
