#include "cdg/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "cdg/errors.hpp"
#include "cdg/group_file.hpp"
#include "cdg/numtheory.hpp"
#include "cdg/structure.hpp"

namespace cdg {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

Permutation rotation(u32 n) {
  std::vector<u32> im(n);
  for (u32 i = 0; i < n; ++i) im[i] = (i + 1) % n;
  return Permutation(im);
}

Permutation reflection(u32 n) {
  std::vector<u32> im(n);
  for (u32 i = 0; i < n; ++i) im[i] = (n - i) % n;
  return Permutation(im);
}

Permutation three_cycle(u32 degree) {
  std::vector<u32> im(degree);
  for (u32 i = 0; i < degree; ++i) im[i] = i;
  im[0] = 1;
  im[1] = 2;
  im[2] = 0;
  return Permutation(im);
}

/// Group from an abstract multiplication on m symbols via the right-regular
/// permutation action of the given generators.
FiniteGroup from_abstract(u32 m, const std::function<u32(u32, u32)>& mul,
                          const std::vector<u32>& gen_syms, u32 cap) {
  std::vector<Permutation> gens;
  for (u32 s : gen_syms) {
    std::vector<u32> im(m);
    for (u32 x = 0; x < m; ++x) im[x] = mul(x, s);
    gens.emplace_back(std::move(im));
  }
  return FiniteGroup::from_generators(m, std::move(gens), cap);
}

FiniteGroup build_cyclic(u32 n, u32 cap) {
  if (n == 0) throw InvalidRecipe("cyclic order must be positive");
  if (n == 1) return FiniteGroup::from_generators(1, {}, cap);
  return FiniteGroup::from_generators(n, {rotation(n)}, cap);
}

FiniteGroup build_abelian(const std::vector<u32>& factors, u32 cap) {
  u32 degree = 0;
  u64 order = 1;
  for (u32 f : factors) {
    if (f < 2) throw InvalidRecipe("abelian factors must be at least 2");
    degree += f;
    order *= f;
  }
  if (order > cap) throw OrderCapExceeded("abelian group exceeds the cap");
  if (factors.empty()) return build_cyclic(1, cap);
  std::vector<Permutation> gens;
  u32 off = 0;
  for (u32 f : factors) {
    std::vector<u32> im(degree);
    for (u32 i = 0; i < degree; ++i) im[i] = i;
    for (u32 i = 0; i < f; ++i) im[off + i] = off + (i + 1) % f;
    gens.emplace_back(std::move(im));
    off += f;
  }
  return FiniteGroup::from_generators(degree, std::move(gens), cap);
}

FiniteGroup build_dihedral(u32 order, u32 cap) {
  if (order < 6 || order % 2 != 0)
    throw InvalidRecipe("dihedral recipe requires an even order of at least 6");
  const u32 n = order / 2;
  return FiniteGroup::from_generators(n, {rotation(n), reflection(n)}, cap);
}

FiniteGroup build_dicyclic(u32 order, u32 cap) {
  if (order < 8 || order % 4 != 0)
    throw InvalidRecipe("dicyclic recipe requires an order divisible by 4, at least 8");
  const u32 n = order / 4;
  const u32 two_n = 2 * n;
  // Symbols j*2n + i stand for a^i b^j with a^(2n) = 1, b^2 = a^n,
  // b a b^-1 = a^-1.
  auto mul = [=](u32 x, u32 y) -> u32 {
    u32 i = x % two_n, j = x / two_n;
    u32 k = y % two_n, l = y / two_n;
    u32 ii = (j == 0) ? (i + k) % two_n : (i + two_n - k) % two_n;
    u32 jj = j + l;
    if (jj == 2) {
      ii = (ii + n) % two_n;
      jj = 0;
    }
    return jj * two_n + ii;
  };
  return from_abstract(order, mul, {1, two_n}, cap);
}

FiniteGroup build_symmetric(u32 n, u32 cap) {
  if (n < 3) throw InvalidRecipe("symmetric recipe requires n >= 3");
  std::vector<u32> transposition(n);
  for (u32 i = 0; i < n; ++i) transposition[i] = i;
  std::swap(transposition[0], transposition[1]);
  return FiniteGroup::from_generators(n, {rotation(n), Permutation(transposition)}, cap);
}

FiniteGroup build_alternating(u32 n, u32 cap) {
  if (n < 4) throw InvalidRecipe("alternating recipe requires n >= 4");
  std::vector<u32> cycle(n);
  if (n % 2 == 1) {
    for (u32 i = 0; i < n; ++i) cycle[i] = (i + 1) % n;  // n-cycle, even permutation
  } else {
    cycle[0] = 0;
    for (u32 i = 1; i < n; ++i) cycle[i] = 1 + (i % (n - 1));  // (n-1)-cycle on 1..n-1
  }
  return FiniteGroup::from_generators(n, {three_cycle(n), Permutation(cycle)}, cap);
}

FiniteGroup build_frobenius(u32 p, u32 q, u32 r, u32 cap) {
  if (!is_prime(p)) throw InvalidRecipe("frobenius parameter p must be prime");
  if (q < 2 || (p - 1) % q != 0)
    throw InvalidRecipe("frobenius parameter q must divide p - 1");
  if (r <= 1 || r >= p || multiplicative_order(r, p) != q)
    throw InvalidRecipe(std::to_string(r) + " has multiplicative order " +
                        std::to_string(r <= 1 || r >= p ? 0 : multiplicative_order(r, p)) +
                        " mod " + std::to_string(p) + ", not " + std::to_string(q));
  std::vector<u32> mult_map(p);
  for (u32 i = 0; i < p; ++i) mult_map[i] = static_cast<u32>(static_cast<u64>(r) * i % p);
  return FiniteGroup::from_generators(p, {rotation(p), Permutation(mult_map)}, cap);
}

FiniteGroup build_extraspecial(u32 p, u32 variant, u32 cap) {
  if (!is_prime(p) || p == 2) throw InvalidRecipe("extraspecial recipe requires an odd prime");
  const u32 m = p * p * p;
  if (m > cap) throw OrderCapExceeded("extraspecial group exceeds the cap");
  if (variant == 0) {
    // Exponent p: symbols (a, b, c) with (a,b,c)(a',b',c') =
    // (a+a', b+b', c+c'+a*b').
    auto mul = [=](u32 x, u32 y) -> u32 {
      u32 a = x / (p * p), b = x / p % p, c = x % p;
      u32 a2 = y / (p * p), b2 = y / p % p, c2 = y % p;
      u32 a3 = (a + a2) % p, b3 = (b + b2) % p;
      u32 c3 = static_cast<u32>((static_cast<u64>(c) + c2 + static_cast<u64>(a) * b2) % p);
      return a3 * p * p + b3 * p + c3;
    };
    return from_abstract(m, mul, {p * p, p}, cap);
  }
  // Exponent p^2: a of order p^2, b of order p, b a b^-1 = a^(1+p).
  const u32 p2 = p * p;
  std::vector<u32> twist(p);  // (1+p)^j mod p^2
  twist[0] = 1;
  for (u32 j = 1; j < p; ++j) twist[j] = static_cast<u32>(static_cast<u64>(twist[j - 1]) * (1 + p) % p2);
  auto mul = [=](u32 x, u32 y) -> u32 {
    u32 i = x % p2, j = x / p2;
    u32 k = y % p2, l = y / p2;
    u32 ii = static_cast<u32>((i + static_cast<u64>(k) * twist[j]) % p2);
    u32 jj = (j + l) % p;
    return jj * p2 + ii;
  };
  return from_abstract(m, mul, {1, p2}, cap);
}

}  // namespace

FiniteGroup build(const CatalogEntry& entry, std::uint32_t cap) {
  const auto& r = entry.recipe;
  switch (r.kind) {
    case Recipe::Kind::cyclic:
      return build_cyclic(r.params.at(0), cap);
    case Recipe::Kind::abelian:
      return build_abelian(r.params, cap);
    case Recipe::Kind::dihedral:
      return build_dihedral(r.params.at(0), cap);
    case Recipe::Kind::dicyclic:
      return build_dicyclic(r.params.at(0), cap);
    case Recipe::Kind::symmetric:
      return build_symmetric(r.params.at(0), cap);
    case Recipe::Kind::alternating:
      return build_alternating(r.params.at(0), cap);
    case Recipe::Kind::frobenius:
      return build_frobenius(r.params.at(0), r.params.at(1), r.params.at(2), cap);
    case Recipe::Kind::extraspecial:
      return build_extraspecial(r.params.at(0), r.params.at(1), cap);
    case Recipe::Kind::product: {
      CatalogEntry a{entry.name + ".left", r.children.at(0), 0};
      CatalogEntry b{entry.name + ".right", r.children.at(1), 0};
      return direct_product(build(a, cap), build(b, cap), cap);
    }
    case Recipe::Kind::file:
      return load_group_file(r.path);
  }
  throw InvalidRecipe("unknown recipe kind");
}

namespace {

CatalogEntry cyclic_entry(u32 n) {
  return {"C" + std::to_string(n), Recipe{Recipe::Kind::cyclic, {n}, {}, {}}, n};
}

CatalogEntry abelian_entry(const std::vector<u32>& invariant_factors) {
  std::string name;
  u64 order = 1;
  for (u32 f : invariant_factors) {
    if (!name.empty()) name += "x";
    name += "C" + std::to_string(f);
    order *= f;
  }
  return {name, Recipe{Recipe::Kind::abelian, invariant_factors, {}, {}}, order};
}

CatalogEntry dihedral_entry(u32 order) {
  return {"D" + std::to_string(order), Recipe{Recipe::Kind::dihedral, {order}, {}, {}}, order};
}

CatalogEntry dicyclic_entry(u32 order) {
  std::string name = order == 8 ? "Q8" : "Dic" + std::to_string(order);
  return {name, Recipe{Recipe::Kind::dicyclic, {order}, {}, {}}, order};
}

CatalogEntry symmetric_entry(u32 n) {
  u64 order = 1;
  for (u32 i = 2; i <= n; ++i) order *= i;
  return {"S" + std::to_string(n), Recipe{Recipe::Kind::symmetric, {n}, {}, {}}, order};
}

CatalogEntry alternating_entry(u32 n) {
  u64 order = 1;
  for (u32 i = 2; i <= n; ++i) order *= i;
  return {"A" + std::to_string(n), Recipe{Recipe::Kind::alternating, {n}, {}, {}}, order / 2};
}

CatalogEntry frobenius_entry(u32 p, u32 q, u32 r) {
  return {"F(" + std::to_string(p) + "," + std::to_string(q) + ")",
          Recipe{Recipe::Kind::frobenius, {p, q, r}, {}, {}}, static_cast<u64>(p) * q};
}

CatalogEntry extraspecial_entry(u32 p, u32 variant) {
  const u32 order = p * p * p;
  std::string name = std::string("ES") + (variant == 0 ? "+" : "-") + "(" + std::to_string(order) + ")";
  return {name, Recipe{Recipe::Kind::extraspecial, {p, variant}, {}, {}}, order};
}

CatalogEntry product_entry(const CatalogEntry& a, const CatalogEntry& b) {
  return {a.name + "x" + b.name, Recipe{Recipe::Kind::product, {}, {a.recipe, b.recipe}, {}},
          a.order * b.order};
}

/// Invariant factors (descending) from a multiset of prime powers.
std::vector<u32> invariant_factors(std::map<u32, std::vector<u32>> powers_per_prime) {
  std::size_t rank = 0;
  for (auto& [p, pw] : powers_per_prime) {
    std::sort(pw.begin(), pw.end(), std::greater<>());
    rank = std::max(rank, pw.size());
  }
  std::vector<u32> factors(rank, 1);
  for (auto& [p, pw] : powers_per_prime)
    for (std::size_t i = 0; i < pw.size(); ++i) factors[i] *= pw[i];
  return factors;
}

void abelian_types(u32 order, std::vector<CatalogEntry>& out) {
  // One group per choice of partition of each prime exponent.
  auto fac = factorize(order);
  std::vector<std::vector<std::vector<u32>>> partitions_per_prime;
  for (auto& [p, e] : fac) {
    std::vector<std::vector<u32>> parts;
    std::vector<u32> cur;
    std::function<void(u32, u32)> rec = [&](u32 remaining, u32 max_part) {
      if (remaining == 0) {
        parts.push_back(cur);
        return;
      }
      for (u32 k = std::min(remaining, max_part); k >= 1; --k) {
        cur.push_back(k);
        rec(remaining - k, k);
        cur.pop_back();
      }
    };
    rec(e, e);
    partitions_per_prime.push_back(std::move(parts));
  }

  std::vector<std::size_t> pick(fac.size(), 0);
  while (true) {
    std::map<u32, std::vector<u32>> powers;
    for (std::size_t i = 0; i < fac.size(); ++i) {
      const u32 p = static_cast<u32>(fac[i].first);
      for (u32 exp : partitions_per_prime[i][pick[i]]) {
        u32 pw = 1;
        for (u32 t = 0; t < exp; ++t) pw *= p;
        powers[p].push_back(pw);
      }
    }
    auto inv = invariant_factors(std::move(powers));
    if (inv.size() >= 2) out.push_back(abelian_entry(inv));  // cyclic handled by its own family

    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < partitions_per_prime[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
}

u32 least_element_of_order(u32 p, u32 q) {
  for (u32 r = 2; r < p; ++r)
    if (multiplicative_order(r, p) == q) return r;
  return 0;
}

}  // namespace

std::vector<CatalogEntry> all_groups_up_to_15() {
  std::vector<CatalogEntry> out;
  for (u32 n = 1; n <= 15; ++n) out.push_back(cyclic_entry(n));
  out.push_back(abelian_entry({2, 2}));        // order 4
  out.push_back(abelian_entry({4, 2}));        // order 8
  out.push_back(abelian_entry({2, 2, 2}));     // order 8
  out.push_back(abelian_entry({3, 3}));        // order 9
  out.push_back(abelian_entry({6, 2}));        // order 12
  out.push_back(symmetric_entry(3));           // order 6
  out.push_back(dihedral_entry(8));
  out.push_back(dicyclic_entry(8));            // Q8
  out.push_back(dihedral_entry(10));
  out.push_back(dihedral_entry(12));
  out.push_back(dicyclic_entry(12));
  out.push_back(alternating_entry(4));         // order 12
  out.push_back(dihedral_entry(14));
  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.name < b.name;
  });
  return out;
}

std::vector<CatalogEntry> extended_corpus(std::uint32_t max_order) {
  std::vector<CatalogEntry> raw;
  for (u32 n = 1; n <= max_order; ++n) raw.push_back(cyclic_entry(n));
  for (u32 n = 4; n <= max_order; ++n) abelian_types(n, raw);
  for (u32 n = 3; n <= 5; ++n)
    if (symmetric_entry(n).order <= max_order) raw.push_back(symmetric_entry(n));
  for (u32 n = 4; n <= 6; ++n)
    if (alternating_entry(n).order <= max_order) raw.push_back(alternating_entry(n));
  for (u32 o = 6; o <= max_order; o += 2) raw.push_back(dihedral_entry(o));
  for (u32 o = 8; o <= max_order; o += 4) raw.push_back(dicyclic_entry(o));
  for (u32 p = 3; p <= max_order; ++p) {
    if (!is_prime(p)) continue;
    for (u32 q = 2; q < p; ++q) {
      if ((p - 1) % q != 0) continue;
      if (static_cast<u64>(p) * q > max_order) continue;
      u32 r = least_element_of_order(p, q);
      if (r) raw.push_back(frobenius_entry(p, q, r));
    }
  }
  for (u32 p : {3u, 5u, 7u})
    if (static_cast<u64>(p) * p * p <= max_order) {
      raw.push_back(extraspecial_entry(p, 0));
      raw.push_back(extraspecial_entry(p, 1));
    }

  // Coprime direct products of the base entries.
  const std::size_t base_count = raw.size();
  for (std::size_t i = 0; i < base_count; ++i)
    for (std::size_t j = 0; j < base_count; ++j) {
      if (i == j) continue;
      const auto &a = raw[i], &b = raw[j];
      if (a.order < 2 || b.order < 2 || a.order > b.order) continue;
      if (a.order * b.order > max_order) continue;
      if (std::gcd(a.order, b.order) != 1) continue;
      raw.push_back(product_entry(a, b));
    }

  // Keep one representative per isomorphism class and order, first wins.
  std::stable_sort(raw.begin(), raw.end(),
                   [](const CatalogEntry& a, const CatalogEntry& b) { return a.order < b.order; });
  std::vector<CatalogEntry> out;
  std::vector<FiniteGroup> kept_groups;
  for (auto& entry : raw) {
    FiniteGroup g = build(entry);
    if (g.order() != entry.order)
      throw InternalInconsistency("catalog entry " + entry.name + " built the wrong order");
    bool duplicate = false;
    for (std::size_t i = out.size(); i-- > 0 && out[i].order == entry.order;) {
      bool same = false;
      try {
        same = is_isomorphic(kept_groups[i], g);
      } catch (const BacktrackBoundExceeded&) {
        // Beyond the backtracking bound undecided pairs stay separate
        // entries; their fingerprints already match or they would have
        // been rejected cheaply.
        same = false;
      }
      if (same) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) {
      out.push_back(entry);
      kept_groups.push_back(std::move(g));
    }
  }
  return out;
}

std::optional<CatalogEntry> entry_from_name(const std::string& name) {
  auto starts_with = [&](const std::string& prefix) {
    return name.size() > prefix.size() && name.compare(0, prefix.size(), prefix) == 0;
  };
  auto parse_int = [](const std::string& s) -> std::optional<u32> {
    if (s.empty()) return std::nullopt;
    u64 v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') return std::nullopt;
      v = v * 10 + (c - '0');
      if (v > 1000000) return std::nullopt;
    }
    return static_cast<u32>(v);
  };

  if (starts_with("F(") && name.back() == ')') {
    auto comma = name.find(',');
    if (comma == std::string::npos) return std::nullopt;
    auto p = parse_int(name.substr(2, comma - 2));
    auto q = parse_int(name.substr(comma + 1, name.size() - comma - 2));
    if (!p || !q || !is_prime(*p) || *q < 2 || (*p - 1) % *q != 0) return std::nullopt;
    u32 r = least_element_of_order(*p, *q);
    if (!r) return std::nullopt;
    return frobenius_entry(*p, *q, r);
  }
  if ((starts_with("ES+(") || starts_with("ES-(")) && name.back() == ')') {
    auto n = parse_int(name.substr(4, name.size() - 5));
    if (!n) return std::nullopt;
    for (u32 p : {3u, 5u, 7u})
      if (p * p * p == *n) return extraspecial_entry(p, name[2] == '+' ? 0 : 1);
    return std::nullopt;
  }

  // Products: split on 'x' outside parentheses.
  {
    int depth = 0;
    for (std::size_t i = 0; i < name.size(); ++i) {
      char c = name[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == 'x' && depth == 0) {
        auto left = entry_from_name(name.substr(0, i));
        auto right = entry_from_name(name.substr(i + 1));
        if (!left || !right) return std::nullopt;
        return product_entry(*left, *right);
      }
    }
  }

  if (starts_with("Dic")) {
    auto o = parse_int(name.substr(3));
    if (!o || *o < 8 || *o % 4 != 0) return std::nullopt;
    CatalogEntry e = dicyclic_entry(*o);
    e.name = name;  // keep the requested spelling
    return e;
  }
  if (name == "Q8") return dicyclic_entry(8);
  if (starts_with("Q")) {
    auto o = parse_int(name.substr(1));
    if (!o || *o < 8 || (*o & (*o - 1)) != 0) return std::nullopt;  // 2-power orders
    CatalogEntry e = dicyclic_entry(*o);
    e.name = name;
    return e;
  }
  if (starts_with("C")) {
    auto n = parse_int(name.substr(1));
    if (!n || *n == 0) return std::nullopt;
    return cyclic_entry(*n);
  }
  if (starts_with("D")) {
    auto o = parse_int(name.substr(1));
    if (!o || *o < 6 || *o % 2 != 0) return std::nullopt;
    return dihedral_entry(*o);
  }
  if (starts_with("S")) {
    auto n = parse_int(name.substr(1));
    if (!n || *n < 3 || *n > 8) return std::nullopt;
    return symmetric_entry(*n);
  }
  if (starts_with("A")) {
    auto n = parse_int(name.substr(1));
    if (!n || *n < 4 || *n > 8) return std::nullopt;
    return alternating_entry(*n);
  }
  return std::nullopt;
}

}  // namespace cdg
