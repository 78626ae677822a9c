#include "cdg/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cdg/numtheory.hpp"

namespace cdg {

void FiniteGroup::finish_construction() {
  inv_.assign(order_, 0);
  elem_order_.assign(order_, 1);

  if (table_.empty() && !elems_.empty()) {
    for (std::uint32_t i = 0; i < order_; ++i) {
      auto it = lookup_.find(elems_[i].inverse().images());
      if (it == lookup_.end()) throw NotAGroup("element set is not closed under inversion");
      inv_[i] = it->second;
    }
  } else {
    // Scan each row of the table for the identity.
    for (std::uint32_t i = 0; i < order_; ++i) {
      bool found = false;
      for (std::uint32_t j = 0; j < order_; ++j) {
        if (mult(i, j) == 0) {
          inv_[i] = j;
          found = true;
          break;
        }
      }
      if (!found) throw NotAGroup("element " + std::to_string(i) + " has no inverse");
    }
  }

  std::uint64_t exp = 1;
  for (std::uint32_t i = 0; i < order_; ++i) {
    std::uint32_t x = i, k = 1;
    while (x != 0) {
      x = mult(x, i);
      if (++k > order_) throw NotAGroup("powers of element " + std::to_string(i) + " never reach the identity");
    }
    elem_order_[i] = k;
    exp = std::lcm<std::uint64_t>(exp, k);
  }
  if (order_ > 0 && order_ % exp != 0)
    throw NotAGroup("exponent does not divide the group order");
  exponent_ = static_cast<std::uint32_t>(exp);
}

FiniteGroup FiniteGroup::from_generators(std::uint32_t degree, std::vector<Permutation> gens,
                                         std::uint32_t cap) {
  if (degree == 0) throw InvalidPermutation("degree must be positive");
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw InvalidPermutation("generator degree does not match the stated degree");

  FiniteGroup out;
  out.elems_.push_back(Permutation::identity(degree));
  out.lookup_.emplace(out.elems_[0].images(), 0);

  // Breadth-first closure, multiplying on the right by generators in input
  // order. This fixes the canonical element indexing.
  for (std::uint32_t head = 0; head < out.elems_.size(); ++head) {
    for (const auto& g : gens) {
      Permutation prod = out.elems_[head].then(g);
      auto [it, inserted] = out.lookup_.emplace(prod.images(), static_cast<std::uint32_t>(out.elems_.size()));
      if (inserted) {
        out.elems_.push_back(std::move(prod));
        if (out.elems_.size() > cap)
          throw OrderCapExceeded("generated group exceeds the order cap of " + std::to_string(cap));
      }
    }
  }

  out.order_ = static_cast<std::uint32_t>(out.elems_.size());
  for (const auto& g : gens) out.gens_.push_back(out.lookup_.at(g.images()));

  if (out.order_ <= kTableLimit) {
    out.table_.resize(static_cast<std::size_t>(out.order_) * out.order_);
    for (std::uint32_t i = 0; i < out.order_; ++i)
      for (std::uint32_t j = 0; j < out.order_; ++j)
        out.table_[static_cast<std::size_t>(i) * out.order_ + j] =
            static_cast<std::uint16_t>(out.lookup_.at(out.elems_[i].then(out.elems_[j]).images()));
    out.lookup_.clear();
  }

  out.finish_construction();
  return out;
}

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<std::uint32_t>>& table) {
  const std::uint32_t n = static_cast<std::uint32_t>(table.size());
  if (n == 0) throw NotAGroup("empty table");
  if (n > 65535) throw OrderCapExceeded("table order exceeds 65535");
  for (const auto& row : table) {
    if (row.size() != n) throw NotAGroup("table is not square");
    for (auto v : row)
      if (v >= n) throw NotAGroup("table entry out of range");
  }

  // Rows and columns must be permutations (cancellation).
  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<bool> seen(n, false);
    for (std::uint32_t j = 0; j < n; ++j) {
      if (seen[table[i][j]]) throw NotAGroup("row " + std::to_string(i) + " is not a permutation");
      seen[table[i][j]] = true;
    }
  }
  for (std::uint32_t j = 0; j < n; ++j) {
    std::vector<bool> seen(n, false);
    for (std::uint32_t i = 0; i < n; ++i) {
      if (seen[table[i][j]]) throw NotAGroup("column " + std::to_string(j) + " is not a permutation");
      seen[table[i][j]] = true;
    }
  }

  // Two-sided identity.
  std::optional<std::uint32_t> id;
  for (std::uint32_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::uint32_t x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) {
      id = e;
      break;
    }
  }
  if (!id) throw NotAGroup("no two-sided identity");

  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      for (std::uint32_t k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw NotAGroup("associativity fails at (" + std::to_string(i) + ", " +
                          std::to_string(j) + ", " + std::to_string(k) + ")");

  // Relabel so the identity sits at index 0.
  std::vector<std::uint32_t> relabel(n);
  for (std::uint32_t i = 0; i < n; ++i) relabel[i] = i;
  if (*id != 0) std::swap(relabel[0], relabel[*id]);
  std::vector<std::uint32_t> place(n);
  for (std::uint32_t i = 0; i < n; ++i) place[relabel[i]] = i;

  FiniteGroup out;
  out.order_ = n;
  out.table_.resize(static_cast<std::size_t>(n) * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      out.table_[static_cast<std::size_t>(i) * n + j] =
          static_cast<std::uint16_t>(place[table[relabel[i]][relabel[j]]]);

  out.pick_generators();
  out.finish_construction();
  return out;
}

FiniteGroup FiniteGroup::from_trusted_table(std::vector<std::uint16_t> table, std::uint32_t n) {
  FiniteGroup out;
  out.order_ = n;
  out.table_ = std::move(table);
  out.pick_generators();
  out.finish_construction();
  return out;
}

void FiniteGroup::pick_generators() {
  // Greedy: accumulate elements until they generate everything.
  Subgroup sub = trivial_subgroup();
  for (std::uint32_t x = 1; x < order_ && sub.order() < order_; ++x) {
    if (sub.contains(x)) continue;
    gens_.push_back(x);
    auto seed = sub.members;
    seed.push_back(x);
    sub = subgroup_closure(*this, seed);
  }
}

bool FiniteGroup::is_abelian() const {
  for (std::uint32_t i = 1; i < order_; ++i)
    for (std::uint32_t j = i + 1; j < order_; ++j)
      if (mult(i, j) != mult(j, i)) return false;
  return true;
}

ConjugacyData conjugacy_classes(const FiniteGroup& g) {
  const std::uint32_t n = g.order();
  ConjugacyData cc;
  cc.class_of.assign(n, UINT32_MAX);

  // Conjugation orbits; conjugating by generators suffices to span a class.
  std::vector<std::uint32_t> gens = g.generator_indices();
  if (gens.empty() && n > 1) {
    for (std::uint32_t i = 1; i < n; ++i) gens.push_back(i);
  }

  for (std::uint32_t start = 0; start < n; ++start) {
    if (cc.class_of[start] != UINT32_MAX) continue;
    const std::uint32_t cls = cc.count();
    std::vector<std::uint32_t> orbit{start};
    cc.class_of[start] = cls;
    for (std::uint32_t head = 0; head < orbit.size(); ++head) {
      for (std::uint32_t s : gens) {
        std::uint32_t y = g.mult(g.mult(g.inv(s), orbit[head]), s);
        if (cc.class_of[y] == UINT32_MAX) {
          cc.class_of[y] = cls;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    cc.reps.push_back(orbit.front());
    cc.sizes.push_back(static_cast<std::uint32_t>(orbit.size()));
    cc.classes.push_back(std::move(orbit));
  }

  const std::uint32_t r = cc.count();
  cc.inverse_class.resize(r);
  for (std::uint32_t c = 0; c < r; ++c) cc.inverse_class[c] = cc.class_of[g.inv(cc.reps[c])];

  cc.power_map.assign(r, std::vector<std::uint32_t>(g.exponent() + 1));
  for (std::uint32_t c = 0; c < r; ++c) {
    std::uint32_t x = 0;
    for (std::uint32_t k = 0; k <= g.exponent(); ++k) {
      cc.power_map[c][k] = cc.class_of[x];
      x = g.mult(x, cc.reps[c]);
    }
  }
  return cc;
}

Subgroup whole_group(const FiniteGroup& g) {
  Subgroup s;
  s.members.resize(g.order());
  std::iota(s.members.begin(), s.members.end(), 0);
  return s;
}

Subgroup trivial_subgroup() { return Subgroup{{0}}; }

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<std::uint32_t>& seed) {
  std::vector<bool> in(g.order(), false);
  std::vector<std::uint32_t> list{0};
  in[0] = true;
  std::vector<std::uint32_t> side = seed;
  for (std::uint32_t s : seed) {
    if (!in[s]) {
      in[s] = true;
      list.push_back(s);
    }
  }
  // Positive words over the seed: closed under multiplication, and finite
  // plus multiplicatively closed gives a subgroup.
  for (std::uint32_t head = 0; head < list.size(); ++head) {
    for (std::uint32_t s : side) {
      std::uint32_t y = g.mult(list[head], s);
      if (!in[y]) {
        in[y] = true;
        list.push_back(y);
      }
    }
  }
  std::sort(list.begin(), list.end());
  return Subgroup{std::move(list)};
}

Subgroup centralizer(const FiniteGroup& g, std::uint32_t x) {
  Subgroup s;
  for (std::uint32_t y = 0; y < g.order(); ++y)
    if (g.mult(x, y) == g.mult(y, x)) s.members.push_back(y);
  return s;
}

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::set<std::uint32_t> seed;
  for (std::uint32_t x : a.members)
    for (std::uint32_t y : b.members) {
      // [x, y] = x^-1 y^-1 x y
      std::uint32_t c = g.mult(g.mult(g.mult(g.inv(x), g.inv(y)), x), y);
      seed.insert(c);
    }
  return subgroup_closure(g, std::vector<std::uint32_t>(seed.begin(), seed.end()));
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  return commutator_subgroup(g, whole_group(g), whole_group(g));
}

namespace {

// Class-product reachability: product of classes i and j meets exactly the
// classes of x*y for x in K_i, y = rep_j (conjugation covers the rest).
std::vector<std::vector<std::vector<std::uint32_t>>> class_product_targets(
    const FiniteGroup& g, const ConjugacyData& cc) {
  const std::uint32_t r = cc.count();
  std::vector<std::vector<std::vector<std::uint32_t>>> hits(
      r, std::vector<std::vector<std::uint32_t>>(r));
  for (std::uint32_t i = 0; i < r; ++i)
    for (std::uint32_t j = 0; j < r; ++j) {
      std::set<std::uint32_t> t;
      for (std::uint32_t x : cc.classes[i]) t.insert(cc.class_of[g.mult(x, cc.reps[j])]);
      hits[i][j].assign(t.begin(), t.end());
    }
  return hits;
}

}  // namespace

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, const ConjugacyData& cc) {
  const std::uint32_t r = cc.count();
  const auto hits = class_product_targets(g, cc);

  using ClassSet = std::vector<bool>;
  auto close = [&](ClassSet s) {
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::uint32_t i = 0; i < r; ++i) {
        if (!s[i]) continue;
        for (std::uint32_t j = 0; j < r; ++j) {
          if (!s[j]) continue;
          for (std::uint32_t k : hits[i][j]) {
            if (!s[k]) {
              s[k] = true;
              grew = true;
            }
          }
        }
      }
    }
    return s;
  };

  std::set<ClassSet> found;
  ClassSet base(r, false);
  base[0] = true;
  found.insert(close(base));

  // Grow each found class-closed subgroup by one extra class at a time.
  std::vector<ClassSet> queue(found.begin(), found.end());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::uint32_t c = 1; c < r; ++c) {
      if (queue[head][c]) continue;
      ClassSet next = queue[head];
      next[c] = true;
      next = close(next);
      if (found.insert(next).second) queue.push_back(next);
    }
  }

  std::vector<Subgroup> out;
  for (const auto& s : found) {
    Subgroup sub;
    for (std::uint32_t c = 0; c < r; ++c)
      if (s[c]) sub.members.insert(sub.members.end(), cc.classes[c].begin(), cc.classes[c].end());
    std::sort(sub.members.begin(), sub.members.end());
    if (g.order() % sub.order() != 0)
      throw InternalInconsistency("class-closed subset whose size does not divide the order");
    out.push_back(std::move(sub));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
  });
  return out;
}

std::vector<Subgroup> maximal_proper_normal_subgroups(const FiniteGroup& g,
                                                      const std::vector<Subgroup>& normals) {
  std::vector<Subgroup> out;
  for (const auto& n : normals) {
    if (n.order() == g.order()) continue;
    bool maximal = true;
    for (const auto& m : normals) {
      if (m.order() == g.order() || m.order() <= n.order()) continue;
      if (std::includes(m.members.begin(), m.members.end(), n.members.begin(), n.members.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(n);
  }
  return out;
}

StructuralPredicates structural_predicates(const FiniteGroup& g, const ConjugacyData& cc) {
  StructuralPredicates out;
  out.is_abelian = cc.count() == g.order();

  auto fac = factorize(g.order());
  if (fac.size() == 1) out.p_group_prime = static_cast<std::uint32_t>(fac[0].first);

  // Derived series down to 1.
  {
    Subgroup cur = whole_group(g);
    while (cur.order() > 1) {
      Subgroup der = commutator_subgroup(g, cur, cur);
      if (der.order() == cur.order()) break;  // series stabilized
      cur = std::move(der);
    }
    out.is_solvable = cur.order() == 1;
  }

  // Lower central series down to 1.
  {
    Subgroup cur = whole_group(g);
    while (cur.order() > 1) {
      Subgroup next = commutator_subgroup(g, cur, whole_group(g));
      if (next.order() == cur.order()) break;
      cur = std::move(next);
    }
    out.is_nilpotent = cur.order() == 1;
  }

  if (out.is_abelian) {
    // All subgroups are normal, so simplicity means prime order.
    out.is_simple = is_prime(g.order());
  } else {
    out.is_simple = normal_subgroups(g, cc).size() == 2;
  }
  return out;
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::uint32_t cap) {
  const std::uint64_t n = static_cast<std::uint64_t>(g.order()) * h.order();
  if (n > cap) throw OrderCapExceeded("direct product order exceeds the cap");
  const std::uint32_t m = h.order();

  if (n <= FiniteGroup::kTableLimit) {
    std::vector<std::uint16_t> table(n * n);
    for (std::uint32_t a = 0; a < g.order(); ++a)
      for (std::uint32_t b = 0; b < m; ++b)
        for (std::uint32_t c = 0; c < g.order(); ++c)
          for (std::uint32_t d = 0; d < m; ++d)
            table[(static_cast<std::size_t>(a) * m + b) * n + (c * m + d)] =
                static_cast<std::uint16_t>(g.mult(a, c) * m + h.mult(b, d));
    return FiniteGroup::from_trusted_table(std::move(table), static_cast<std::uint32_t>(n));
  }

  // Too large for a dense table: keep pair indexing and multiply through
  // permutations on the disjoint union of the factor domains.
  if (!g.has_permutations() || !h.has_permutations())
    throw OrderCapExceeded("direct product beyond the table limit requires permutation-backed factors");

  const std::uint32_t dg = g.degree(), dh = h.degree();
  FiniteGroup out;
  out.order_ = static_cast<std::uint32_t>(n);
  out.elems_.reserve(n);
  for (std::uint32_t a = 0; a < g.order(); ++a)
    for (std::uint32_t b = 0; b < m; ++b) {
      std::vector<std::uint32_t> im(dg + dh);
      for (std::uint32_t p = 0; p < dg; ++p) im[p] = g.permutation(a)(p);
      for (std::uint32_t p = 0; p < dh; ++p) im[dg + p] = dg + h.permutation(b)(p);
      out.elems_.emplace_back(std::move(im));
      out.lookup_.emplace(out.elems_.back().images(), a * m + b);
    }
  for (std::uint32_t s : g.generator_indices()) out.gens_.push_back(s * m);
  for (std::uint32_t s : h.generator_indices()) out.gens_.push_back(s);
  out.finish_construction();
  return out;
}

QuotientResult quotient(const FiniteGroup& g, const Subgroup& n) {
  for (std::uint32_t x : n.members)
    for (std::uint32_t y : n.members)
      if (!n.contains(g.mult(x, y))) throw NotNormal("member set is not a subgroup");
  // Normality: conjugation by generators permutes the member set.
  for (std::uint32_t s : g.generator_indices())
    for (std::uint32_t x : n.members)
      if (!n.contains(g.mult(g.mult(g.inv(s), x), s)))
        throw NotNormal("subgroup is not normal");
  if (g.order() % n.order() != 0) throw NotNormal("subgroup order does not divide the group order");

  const std::uint32_t q = g.order() / n.order();
  std::vector<std::uint32_t> coset_of(g.order(), UINT32_MAX);
  std::vector<std::uint32_t> rep;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    if (coset_of[x] != UINT32_MAX) continue;
    const std::uint32_t c = static_cast<std::uint32_t>(rep.size());
    rep.push_back(x);  // minimal element of the coset, by scan order
    for (std::uint32_t m : n.members) coset_of[g.mult(m, x)] = c;  // Nx
  }
  if (rep.size() != q) throw NotNormal("coset count mismatch");

  std::vector<std::uint16_t> table(static_cast<std::size_t>(q) * q);
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      table[static_cast<std::size_t>(a) * q + b] =
          static_cast<std::uint16_t>(coset_of[g.mult(rep[a], rep[b])]);

  QuotientResult out{FiniteGroup::from_trusted_table(std::move(table), q), std::move(coset_of)};
  return out;
}

EmbeddedGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& s) {
  const std::uint32_t m = s.order();
  std::unordered_map<std::uint32_t, std::uint32_t> local;
  local.reserve(m);
  for (std::uint32_t i = 0; i < m; ++i) local.emplace(s.members[i], i);

  std::vector<std::uint16_t> table(static_cast<std::size_t>(m) * m);
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = 0; j < m; ++j) {
      auto it = local.find(g.mult(s.members[i], s.members[j]));
      if (it == local.end()) throw NotAGroup("member set is not closed under multiplication");
      table[static_cast<std::size_t>(i) * m + j] = static_cast<std::uint16_t>(it->second);
    }

  EmbeddedGroup out{FiniteGroup::from_trusted_table(std::move(table), m), s.members};
  return out;
}

}  // namespace cdg
