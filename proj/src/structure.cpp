#include "cdg/structure.hpp"

#include <algorithm>
#include <numeric>

#include "cdg/errors.hpp"
#include "cdg/numtheory.hpp"

namespace cdg {

namespace {

// Kernel-side Frobenius criterion for a candidate normal subgroup.
bool kernel_condition(const FiniteGroup& g, const Subgroup& n) {
  for (std::uint32_t x : n.members) {
    if (x == 0) continue;
    for (std::uint32_t y = 0; y < g.order(); ++y)
      if (g.mult(x, y) == g.mult(y, x) && !n.contains(y)) return false;
  }
  return true;
}

// Complement of order m avoiding the kernel: Frobenius complements are
// 2-generated, so singles and pairs suffice; a bounded incremental search
// backs that up.
std::optional<Subgroup> find_complement(const FiniteGroup& g, const Subgroup& kernel,
                                        std::uint32_t m) {
  if (m == 1) return trivial_subgroup();
  std::vector<std::uint32_t> candidates;
  for (std::uint32_t x = 1; x < g.order(); ++x)
    if (m % g.element_order(x) == 0 && !kernel.contains(x)) candidates.push_back(x);

  auto admissible = [&](const Subgroup& h) {
    if (h.order() != m) return false;
    for (std::uint32_t x : h.members)
      if (x != 0 && kernel.contains(x)) return false;
    return true;
  };

  for (std::uint32_t a : candidates) {
    Subgroup h = subgroup_closure(g, {a});
    if (admissible(h)) return h;
  }
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      Subgroup h = subgroup_closure(g, {candidates[i], candidates[j]});
      if (admissible(h)) return h;
    }
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      for (std::size_t k = j + 1; k < candidates.size(); ++k) {
        Subgroup h = subgroup_closure(g, {candidates[i], candidates[j], candidates[k]});
        if (admissible(h)) return h;
      }
  return std::nullopt;
}

std::optional<FrobeniusWitness> frobenius_with_kernel(const FiniteGroup& g, const Subgroup& n) {
  const std::uint32_t m = g.order() / n.order();
  if (n.order() <= 1 || m <= 1) return std::nullopt;
  if (std::gcd(n.order(), m) != 1) return std::nullopt;
  if (!kernel_condition(g, n)) return std::nullopt;
  auto complement = find_complement(g, n, m);
  if (!complement)
    throw InternalInconsistency("kernel condition held but no complement was found");
  return FrobeniusWitness{n, *complement};
}

}  // namespace

std::optional<FrobeniusWitness> frobenius_witness(const FiniteGroup& g, const ConjugacyData& cc) {
  // Abelian groups centralize everything, so the kernel condition can never
  // hold; prime-power orders admit no coprime factorization.
  if (g.order() <= 1 || cc.count() == g.order()) return std::nullopt;
  if (factorize(g.order()).size() < 2) return std::nullopt;

  for (const auto& n : normal_subgroups(g, cc)) {  // ascending order: smallest kernel wins
    if (n.order() == 1 || n.order() == g.order()) continue;
    if (auto w = frobenius_with_kernel(g, n)) return w;
  }
  return std::nullopt;
}

std::optional<TwoFrobeniusWitness> two_frobenius_witness(const FiniteGroup& g,
                                                         const ConjugacyData& cc) {
  if (g.order() <= 1 || cc.count() == g.order()) return std::nullopt;

  auto normals = normal_subgroups(g, cc);
  for (const auto& k : normals) {
    if (k.order() == 1 || k.order() == g.order()) continue;
    for (const auto& l : normals) {
      if (l.order() <= k.order() || l.order() == g.order()) continue;
      if (!std::includes(l.members.begin(), l.members.end(), k.members.begin(), k.members.end()))
        continue;

      // L must be Frobenius with kernel K.
      EmbeddedGroup le = subgroup_as_group(g, l);
      Subgroup k_local;
      for (std::uint32_t i = 0; i < le.to_parent.size(); ++i)
        if (k.contains(le.to_parent[i])) k_local.members.push_back(i);
      if (!frobenius_with_kernel(le.group, k_local)) continue;

      // G/K must be Frobenius with kernel L/K.
      QuotientResult qr = quotient(g, k);
      std::vector<std::uint32_t> image;
      for (std::uint32_t x : l.members) image.push_back(qr.projection[x]);
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      if (!frobenius_with_kernel(qr.group, Subgroup{std::move(image)})) continue;

      return TwoFrobeniusWitness{k, l};
    }
  }
  return std::nullopt;
}

PrimePowerPredicate prime_power_codegree_predicate(const FiniteGroup& g, const ConjugacyData& cc,
                                                   const std::vector<CodegreeRecord>& records) {
  PrimePowerPredicate out;
  out.all_prime_powers = true;
  for (const auto& rec : records)
    if (rec.row != 0 && !rec.is_prime_power()) out.all_prime_powers = false;

  const auto primes = factorize(g.order());
  bool p_group = primes.size() == 1;
  bool frobenius_two_primes = false;
  if (primes.size() == 2 && frobenius_witness(g, cc)) frobenius_two_primes = true;
  out.rhs = p_group || frobenius_two_primes;
  out.agree = out.all_prime_powers == out.rhs;
  return out;
}

namespace {

struct Fingerprint {
  std::uint32_t order;
  std::vector<std::uint32_t> class_sizes;     // sorted
  std::vector<std::uint32_t> element_orders;  // sorted
  bool abelian;

  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const FiniteGroup& g) {
  Fingerprint f;
  f.order = g.order();
  auto cc = conjugacy_classes(g);
  f.class_sizes = cc.sizes;
  std::sort(f.class_sizes.begin(), f.class_sizes.end());
  f.element_orders.reserve(g.order());
  for (std::uint32_t x = 0; x < g.order(); ++x) f.element_orders.push_back(g.element_order(x));
  std::sort(f.element_orders.begin(), f.element_orders.end());
  f.abelian = cc.count() == g.order();
  return f;
}

// Word-by-word extension: map generators of g into h and walk g's elements
// as products, checking multiplicative consistency throughout.
bool extends_to_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                            const std::vector<std::uint32_t>& gens,
                            const std::vector<std::uint32_t>& images) {
  std::vector<std::uint32_t> phi(g.order(), UINT32_MAX);
  std::vector<bool> hit(h.order(), false);
  phi[0] = 0;
  hit[0] = true;
  std::vector<std::uint32_t> queue{0};
  for (std::uint32_t head = 0; head < queue.size(); ++head) {
    std::uint32_t x = queue[head];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      std::uint32_t xg = g.mult(x, gens[s]);
      std::uint32_t yh = h.mult(phi[x], images[s]);
      if (phi[xg] == UINT32_MAX) {
        if (hit[yh]) return false;  // not injective
        phi[xg] = yh;
        hit[yh] = true;
        queue.push_back(xg);
      } else if (phi[xg] != yh) {
        return false;  // not well defined
      }
    }
  }
  // The walk checked phi(x*s) = phi(x)*psi(s) for every element x and every
  // generator s, which forces multiplicativity on all pairs.
  return queue.size() == g.order();
}

bool backtrack(const FiniteGroup& g, const FiniteGroup& h, const std::vector<std::uint32_t>& gens,
               const std::vector<std::vector<std::uint32_t>>& candidates,
               std::vector<std::uint32_t>& images, std::size_t depth) {
  if (depth == gens.size()) return extends_to_isomorphism(g, h, gens, images);
  for (std::uint32_t c : candidates[depth]) {
    images[depth] = c;
    // Partial consistency: the subgroup generated so far must have matching
    // order under the partial map.
    std::vector<std::uint32_t> sub_g(gens.begin(), gens.begin() + depth + 1);
    std::vector<std::uint32_t> sub_h(images.begin(), images.begin() + depth + 1);
    if (subgroup_closure(g, sub_g).order() != subgroup_closure(h, sub_h).order()) continue;
    if (backtrack(g, h, gens, candidates, images, depth + 1)) return true;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return false;

  Fingerprint fg = fingerprint(g), fh = fingerprint(h);
  if (!(fg == fh)) return false;
  // Finite abelian groups are classified by their element-order multisets.
  if (fg.abelian) return true;

  // Only the backtracking search is bounded; everything above is exact at
  // any order.
  if (g.order() > kIsoBound)
    throw BacktrackBoundExceeded("isomorphism backtracking is bounded at order " +
                                 std::to_string(kIsoBound));

  auto ccg = conjugacy_classes(g);
  auto cch = conjugacy_classes(h);
  const auto& gens = g.generator_indices();

  // Candidate images filtered by element order and class size.
  std::vector<std::vector<std::uint32_t>> candidates;
  for (std::uint32_t s : gens) {
    std::vector<std::uint32_t> c;
    for (std::uint32_t y = 0; y < h.order(); ++y)
      if (h.element_order(y) == g.element_order(s) &&
          cch.sizes[cch.class_of[y]] == ccg.sizes[ccg.class_of[s]])
        c.push_back(y);
    if (c.empty()) return false;
    candidates.push_back(std::move(c));
  }

  std::vector<std::uint32_t> images(gens.size());
  return backtrack(g, h, gens, candidates, images, 0);
}

}  // namespace cdg
