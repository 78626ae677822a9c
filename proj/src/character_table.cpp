#include "cdg/character_table.hpp"

#include <algorithm>
#include <numeric>

#include "cdg/errors.hpp"
#include "cdg/numtheory.hpp"

namespace cdg {

namespace {

// ---------------------------------------------------------------------------
// GF(p) linear algebra. p fits in 32 bits; arithmetic goes through uint64.

using u32 = std::uint32_t;
using u64 = std::uint64_t;

struct PMat {
  u32 rows = 0, cols = 0;
  std::vector<u32> a;

  PMat() = default;
  PMat(u32 r, u32 c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  u32& at(u32 r, u32 c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  u32 at(u32 r, u32 c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

u64 inv_mod(u64 x, u64 p) { return pow_mod(x, p - 2, p); }

// In-place reduced row echelon form; returns pivot columns.
std::vector<u32> rref(PMat& m, u64 p) {
  std::vector<u32> pivots;
  u32 row = 0;
  for (u32 col = 0; col < m.cols && row < m.rows; ++col) {
    u32 sel = UINT32_MAX;
    for (u32 r = row; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        sel = r;
        break;
      }
    if (sel == UINT32_MAX) continue;
    if (sel != row)
      for (u32 c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
    u64 piv_inv = inv_mod(m.at(row, col), p);
    for (u32 c = col; c < m.cols; ++c) m.at(row, c) = static_cast<u32>(m.at(row, c) * piv_inv % p);
    for (u32 r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      u64 f = m.at(r, col);
      for (u32 c = col; c < m.cols; ++c)
        m.at(r, c) = static_cast<u32>((m.at(r, c) + (p - f) * m.at(row, c)) % p);
    }
    pivots.push_back(col);
    ++row;
  }
  m.rows = row;
  m.a.resize(static_cast<std::size_t>(row) * m.cols);
  return pivots;
}

// Canonical nullspace basis (one vector per free column, RREF-shaped).
PMat nullspace(PMat m, u64 p) {
  const u32 n = m.cols;
  std::vector<u32> pivots = rref(m, p);
  std::vector<bool> is_pivot(n, false);
  for (u32 c : pivots) is_pivot[c] = true;

  PMat ker(n - static_cast<u32>(pivots.size()), n);
  u32 out_row = 0;
  for (u32 f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    ker.at(out_row, f) = 1;
    for (u32 r = 0; r < pivots.size(); ++r) {
      u32 v = m.at(r, f);
      if (v) ker.at(out_row, pivots[r]) = static_cast<u32>(p - v);
    }
    ++out_row;
  }
  return ker;
}

// Characteristic polynomial via Hessenberg form; deterministic over GF(p).
std::vector<u32> characteristic_polynomial(PMat h, u64 p) {
  const u32 d = h.rows;
  // Similarity reduction to Hessenberg form.
  for (u32 j = 0; j + 2 < d; ++j) {
    u32 sel = UINT32_MAX;
    for (u32 i = j + 1; i < d; ++i)
      if (h.at(i, j) != 0) {
        sel = i;
        break;
      }
    if (sel == UINT32_MAX) continue;
    if (sel != j + 1) {
      for (u32 c = 0; c < d; ++c) std::swap(h.at(sel, c), h.at(j + 1, c));
      for (u32 r = 0; r < d; ++r) std::swap(h.at(r, sel), h.at(r, j + 1));
    }
    u64 piv_inv = inv_mod(h.at(j + 1, j), p);
    for (u32 i = j + 2; i < d; ++i) {
      u64 f = h.at(i, j) * piv_inv % p;
      if (!f) continue;
      for (u32 c = 0; c < d; ++c)
        h.at(i, c) = static_cast<u32>((h.at(i, c) + (p - f) * h.at(j + 1, c)) % p);
      for (u32 r = 0; r < d; ++r)
        h.at(r, j + 1) = static_cast<u32>((h.at(r, j + 1) + f * h.at(r, i)) % p);
    }
  }

  // p_m(x) = (x - h[m-1][m-1]) p_{m-1}(x)
  //          - sum_k h[k-1][m-1] (prod_{j=k}^{m-1} h[j][j-1]) p_{k-1}(x)
  std::vector<std::vector<u32>> polys(d + 1);
  polys[0] = {1};
  for (u32 m = 1; m <= d; ++m) {
    std::vector<u32> pm(m + 1, 0);
    const u64 diag = h.at(m - 1, m - 1);
    for (u32 i = 0; i < m; ++i) {
      pm[i + 1] = static_cast<u32>((pm[i + 1] + polys[m - 1][i]) % p);
      pm[i] = static_cast<u32>((pm[i] + (p - diag) * polys[m - 1][i]) % p);
    }
    u64 subprod = 1;
    for (u32 k = m - 1; k >= 1; --k) {
      subprod = subprod * h.at(k, k - 1) % p;
      if (subprod == 0) break;
      u64 f = h.at(k - 1, m - 1) * subprod % p;
      if (!f) continue;
      for (u32 i = 0; i < k; ++i)
        pm[i] = static_cast<u32>((pm[i] + (p - f) * polys[k - 1][i] % p) % p);
    }
    polys[m] = std::move(pm);
  }
  return polys[d];
}

u64 poly_eval(const std::vector<u32>& poly, u64 x, u64 p) {
  u64 acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = (acc * x + poly[i]) % p;
  return acc;
}

// One class matrix, reduced mod p: m[j][k] = a(i, j, k).
PMat class_matrix(const FiniteGroup& g, const ConjugacyData& cc, u32 i, u64 p) {
  const u32 r = cc.count();
  PMat m(r, r);
  for (u32 k = 0; k < r; ++k)
    for (u32 x : cc.classes[i]) {
      u32 j = cc.class_of[g.mult(g.inv(x), cc.reps[k])];
      m.at(j, k) = static_cast<u32>((m.at(j, k) + 1) % p);
    }
  return m;
}

u64 least_primitive_root(u64 p) {
  if (p == 2) return 1;
  auto fac = factorize(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (auto& [q, e] : fac)
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw InternalInconsistency("no primitive root found");
}

struct ModularCharacter {
  std::vector<u32> omega;  // central character per class, omega[0] = 1
  u32 degree = 0;
};

}  // namespace

ClassConstants class_constants(const FiniteGroup& g, const ConjugacyData& cc) {
  const u32 r = cc.count();
  if (static_cast<u64>(r) * r * r > (1u << 27))
    throw Error("class constants cube too large to materialize");
  ClassConstants out;
  out.r = r;
  out.data.assign(static_cast<std::size_t>(r) * r * r, 0);
  for (u32 i = 0; i < r; ++i)
    for (u32 k = 0; k < r; ++k)
      for (u32 x : cc.classes[i]) {
        u32 j = cc.class_of[g.mult(g.inv(x), cc.reps[k])];
        ++out.data[(static_cast<std::size_t>(i) * r + j) * r + k];
      }
  return out;
}

std::uint64_t dixon_prime(std::uint64_t order, std::uint32_t exponent) {
  constexpr int kPrimeBudget = 10000;
  int seen = 0;
  for (u64 p = 2; seen < kPrimeBudget; ++p) {
    if (!is_prime(p)) continue;
    ++seen;
    if (p % exponent == 1 % exponent && p * p > 4 * order) return p;
  }
  throw NoSuitablePrime("no prime p = 1 (mod " + std::to_string(exponent) + ") with p > 2*sqrt(" +
                        std::to_string(order) + ") within the first 10000 primes");
}

namespace {

// Common eigenvector extraction: split the standard basis under the class
// matrices, in ascending class order, until every invariant subspace is a
// line. All eigenvalues lie in GF(p) by the choice of p.
std::vector<ModularCharacter> modular_characters(const FiniteGroup& g, const ConjugacyData& cc,
                                                 u64 p) {
  const u32 r = cc.count();
  std::vector<PMat> spaces;
  std::vector<std::vector<u32>> space_pivots;
  {
    PMat full(r, r);
    for (u32 i = 0; i < r; ++i) full.at(i, i) = 1;
    std::vector<u32> piv(r);
    std::iota(piv.begin(), piv.end(), 0);
    spaces.push_back(std::move(full));
    space_pivots.push_back(std::move(piv));
  }

  auto all_lines = [&]() {
    for (const auto& s : spaces)
      if (s.rows > 1) return false;
    return true;
  };

  for (u32 i = 1; i < r && !all_lines(); ++i) {
    const PMat m = class_matrix(g, cc, i, p);
    std::vector<PMat> next_spaces;
    std::vector<std::vector<u32>> next_pivots;

    for (std::size_t si = 0; si < spaces.size(); ++si) {
      PMat& b = spaces[si];
      const auto& piv = space_pivots[si];
      const u32 d = b.rows;
      if (d == 1) {
        next_spaces.push_back(std::move(b));
        next_pivots.push_back(piv);
        continue;
      }

      // Restriction of m to the subspace, in basis coordinates: the image
      // of each basis vector re-expressed through the pivot columns.
      PMat act(d, d);
      PMat images(d, r);
      for (u32 t = 0; t < d; ++t) {
        for (u32 row = 0; row < r; ++row) {
          u64 acc = 0;
          for (u32 k = 0; k < r; ++k) acc += static_cast<u64>(m.at(row, k)) * b.at(t, k) % p;
          images.at(t, row) = static_cast<u32>(acc % p);
        }
        for (u32 s = 0; s < d; ++s) act.at(t, s) = images.at(t, piv[s]);
      }
      // Invariance check: the image must equal its basis expansion.
      for (u32 t = 0; t < d; ++t)
        for (u32 col = 0; col < r; ++col) {
          u64 acc = 0;
          for (u32 s = 0; s < d; ++s) acc += static_cast<u64>(act.at(t, s)) * b.at(s, col) % p;
          if (acc % p != images.at(t, col))
            throw InternalInconsistency("class matrix does not preserve a common eigenspace");
        }

      auto charpoly = characteristic_polynomial(act, p);
      std::vector<u64> roots;
      for (u64 lam = 0; lam < p; ++lam)
        if (poly_eval(charpoly, lam, p) == 0) roots.push_back(lam);

      if (roots.size() <= 1) {
        next_spaces.push_back(std::move(b));
        next_pivots.push_back(piv);
        continue;
      }

      u32 total = 0;
      for (u64 lam : roots) {
        PMat shifted = act;
        for (u32 t = 0; t < d; ++t)
          shifted.at(t, t) = static_cast<u32>((shifted.at(t, t) + p - lam) % p);
        // Row-vector convention: coordinates c with c*act = lam*c, i.e. the
        // transpose kernel.
        PMat tr(d, d);
        for (u32 x = 0; x < d; ++x)
          for (u32 y = 0; y < d; ++y) tr.at(x, y) = shifted.at(y, x);
        PMat ker = nullspace(std::move(tr), p);
        if (ker.rows == 0) throw InternalInconsistency("eigenvalue with empty eigenspace");
        total += ker.rows;

        PMat sub(ker.rows, r);
        for (u32 t = 0; t < ker.rows; ++t)
          for (u32 col = 0; col < r; ++col) {
            u64 acc = 0;
            for (u32 s = 0; s < d; ++s) acc += static_cast<u64>(ker.at(t, s)) * b.at(s, col) % p;
            sub.at(t, col) = static_cast<u32>(acc % p);
          }
        auto sub_piv = rref(sub, p);
        if (sub.rows != ker.rows)
          throw InternalInconsistency("eigenspace basis lost rank while mapping back");
        next_spaces.push_back(std::move(sub));
        next_pivots.push_back(std::move(sub_piv));
      }
      if (total != d) throw InternalInconsistency("class matrix is not semisimple over GF(p)");
    }
    spaces = std::move(next_spaces);
    space_pivots = std::move(next_pivots);
  }

  if (!all_lines())
    throw InternalInconsistency("class matrices failed to separate the character space");

  const u64 order = g.order();
  std::vector<ModularCharacter> out;
  for (auto& s : spaces) {
    std::vector<u32> w(r);
    if (s.at(0, 0) == 0)
      throw InternalInconsistency("central character vanishes on the identity class");
    u64 scale = inv_mod(s.at(0, 0), p);
    for (u32 k = 0; k < r; ++k) w[k] = static_cast<u32>(s.at(0, k) * scale % p);

    // |G| / deg^2 = sum_k w_k w_{k^-} / |K_k|.
    u64 t_sum = 0;
    for (u32 k = 0; k < r; ++k) {
      u64 term = static_cast<u64>(w[k]) * w[cc.inverse_class[k]] % p;
      term = term * inv_mod(cc.sizes[k] % p, p) % p;
      t_sum = (t_sum + term) % p;
    }
    if (t_sum == 0) throw InternalInconsistency("degree relation degenerated");
    u64 deg_sq = order % p * inv_mod(t_sum, p) % p;

    // The true degree is below p/2, so it is the smaller square root.
    u32 degree = 0;
    for (u64 t = 1; 2 * t < p; ++t)
      if (t * t % p == deg_sq) {
        degree = static_cast<u32>(t);
        break;
      }
    if (degree == 0 || static_cast<u64>(degree) * degree > order)
      throw InternalInconsistency("irreducible degree recovery failed");

    ModularCharacter mc;
    mc.omega = std::move(w);
    mc.degree = degree;
    out.push_back(std::move(mc));
  }
  return out;
}

std::vector<Cyclotomic> lift_character(const ModularCharacter& mc, const FiniteGroup& g,
                                       const ConjugacyData& cc, u64 p, u64 zeta_inv) {
  const u32 r = cc.count();
  const u32 e = g.exponent();
  const u64 inv_e = inv_mod(e % p, p);

  // Modular character values: x_k = deg * w_k / |K_k|.
  std::vector<u64> xbar(r);
  for (u32 k = 0; k < r; ++k)
    xbar[k] = static_cast<u64>(mc.degree) % p * mc.omega[k] % p * inv_mod(cc.sizes[k] % p, p) % p;

  std::vector<u64> zi_pow(e);
  zi_pow[0] = 1;
  for (u32 j = 1; j < e; ++j) zi_pow[j] = zi_pow[j - 1] * zeta_inv % p;

  std::vector<Cyclotomic> values(r);
  for (u32 k = 0; k < r; ++k) {
    // Eigenvalue multiplicities of the representing matrix at class k:
    // c_m = (1/e) sum_t x(g^t) zeta^{-tm}, each an integer below p.
    std::vector<Rational> buf(e);
    u64 total = 0;
    for (u32 m2 = 0; m2 < e; ++m2) {
      u64 acc = 0;
      u64 idx = 0;
      for (u32 t = 0; t < e; ++t) {
        acc += xbar[cc.power_map[k][t]] * zi_pow[idx] % p;
        idx += m2;
        if (idx >= e) idx -= e;
      }
      u64 c = acc % p * inv_e % p;
      if (c > mc.degree)
        throw InternalInconsistency("eigenvalue multiplicity exceeds the degree");
      if (c) {
        buf[m2] = Rational(static_cast<long long>(c));
        total += c;
      }
    }
    if (total != mc.degree)
      throw InternalInconsistency("eigenvalue multiplicities do not sum to the degree");
    values[k] = Cyclotomic::from_power_basis(e, std::move(buf));
  }
  return values;
}

void sort_rows(CharacterTable& table) {
  const u32 r = table.count();
  std::vector<u32> idx(r);
  std::iota(idx.begin(), idx.end(), 0);

  auto is_principal = [&](u32 row) {
    if (table.degrees[row] != 1) return false;
    for (const auto& v : table.values[row])
      if (!(v.is_rational() && v.rational_value() == Rational(1))) return false;
    return true;
  };

  std::sort(idx.begin(), idx.end(), [&](u32 a, u32 b) {
    bool pa = is_principal(a), pb = is_principal(b);
    if (pa != pb) return pa;
    if (table.degrees[a] != table.degrees[b]) return table.degrees[a] < table.degrees[b];
    for (u32 k = 0; k < r; ++k) {
      int c = table.values[a][k].compare(table.values[b][k]);
      if (c != 0) return c < 0;
    }
    return false;
  });

  CharacterTable sorted = table;
  for (u32 i = 0; i < r; ++i) {
    sorted.degrees[i] = table.degrees[idx[i]];
    sorted.values[i] = std::move(table.values[idx[i]]);
  }
  table = std::move(sorted);
}

}  // namespace

namespace {

// Character values are algebraic integers, so their canonical coordinates
// are plain integers; the orthogonality sums can then be verified with
// exact integer arithmetic, accumulating raw polynomial products and
// reducing modulo the cyclotomic polynomial once per pair.
struct IntegerTableView {
  bool valid = false;
  u32 phi = 0;
  std::vector<long long> cyclo;                                    // monic, degree phi
  std::vector<std::vector<std::vector<std::pair<u32, long long>>>> terms;  // [row][class]
};

IntegerTableView integer_view(const CharacterTable& table) {
  IntegerTableView v;
  v.phi = cyclotomic_basis_size(table.conductor);
  {
    // Recover the reduction polynomial from zeta^phi.
    Cyclotomic top = Cyclotomic::root_of_unity(table.conductor, v.phi);
    v.cyclo.assign(v.phi + 1, 0);
    v.cyclo[v.phi] = 1;
    for (const auto& [exp, c] : top.terms()) {
      if (!c.is_integer()) return v;
      v.cyclo[exp] = -c.num();  // x^phi = sum c_i x^i, stored negated
    }
  }
  const u32 r = table.count();
  v.terms.resize(r);
  for (u32 a = 0; a < r; ++a) {
    v.terms[a].resize(r);
    for (u32 k = 0; k < r; ++k) {
      for (const auto& [exp, c] : table.values[a][k].terms()) {
        if (!c.is_integer()) return v;
        v.terms[a][k].emplace_back(exp, c.num());
      }
    }
  }
  v.valid = true;
  return v;
}

// Reduce then test: buffer holds coefficients of degree < 2*phi - 1.
bool reduced_equals_constant(std::vector<__int128>& buf, const IntegerTableView& v,
                             long long constant) {
  for (std::size_t m = buf.size(); m-- > v.phi;) {
    if (buf[m] == 0) continue;
    __int128 c = buf[m];
    buf[m] = 0;
    for (u32 i = 0; i < v.phi; ++i)
      if (v.cyclo[i] != 0) buf[m - v.phi + i] -= c * v.cyclo[i];
  }
  if (buf[0] != constant) return false;
  for (u32 i = 1; i < v.phi; ++i)
    if (buf[i] != 0) return false;
  return true;
}

std::string orthogonality_violation_generic(const CharacterTable& table, std::uint64_t order,
                                            const std::vector<std::uint32_t>& inverse_class) {
  const u32 r = table.count();
  for (u32 a = 0; a < r; ++a)
    for (u32 b = a; b < r; ++b) {
      Cyclotomic acc = Cyclotomic::zero(table.conductor);
      for (u32 k = 0; k < r; ++k)
        acc += (table.values[a][k] * table.values[b][inverse_class[k]])
                   .scaled(Rational(table.class_sizes[k]));
      Cyclotomic want = Cyclotomic::from_rational(
          a == b ? Rational(static_cast<long long>(order)) : Rational(0), table.conductor);
      if (!(acc == want))
        return "row orthogonality fails for rows " + std::to_string(a) + ", " + std::to_string(b);
    }
  for (u32 k = 0; k < r; ++k)
    for (u32 l = k; l < r; ++l) {
      Cyclotomic acc = Cyclotomic::zero(table.conductor);
      for (u32 a = 0; a < r; ++a) acc += table.values[a][k] * table.values[a][inverse_class[l]];
      Cyclotomic want = Cyclotomic::from_rational(
          k == l ? Rational(static_cast<long long>(table.centralizer_orders[k])) : Rational(0),
          table.conductor);
      if (!(acc == want))
        return "column orthogonality fails for classes " + std::to_string(k) + ", " +
               std::to_string(l);
    }
  return {};
}

}  // namespace

std::string orthogonality_violation(const CharacterTable& table, std::uint64_t order,
                                    const std::vector<std::uint32_t>& inverse_class) {
  const u32 r = table.count();
  u64 degree_sum = 0;
  for (u32 i = 0; i < r; ++i) degree_sum += static_cast<u64>(table.degrees[i]) * table.degrees[i];
  if (degree_sum != order) return "sum of squared degrees differs from the group order";

  IntegerTableView v = integer_view(table);
  if (!v.valid) return orthogonality_violation_generic(table, order, inverse_class);

  std::vector<__int128> buf(2 * v.phi > 0 ? 2 * v.phi - 1 : 1);
  for (u32 a = 0; a < r; ++a)
    for (u32 b = a; b < r; ++b) {
      std::fill(buf.begin(), buf.end(), 0);
      for (u32 k = 0; k < r; ++k) {
        const long long size = table.class_sizes[k];
        for (const auto& [e1, c1] : v.terms[a][k])
          for (const auto& [e2, c2] : v.terms[b][inverse_class[k]])
            buf[e1 + e2] += static_cast<__int128>(c1) * c2 * size;
      }
      if (!reduced_equals_constant(buf, v, a == b ? static_cast<long long>(order) : 0))
        return "row orthogonality fails for rows " + std::to_string(a) + ", " + std::to_string(b);
    }

  for (u32 k = 0; k < r; ++k)
    for (u32 l = k; l < r; ++l) {
      std::fill(buf.begin(), buf.end(), 0);
      for (u32 a = 0; a < r; ++a)
        for (const auto& [e1, c1] : v.terms[a][k])
          for (const auto& [e2, c2] : v.terms[a][inverse_class[l]])
            buf[e1 + e2] += static_cast<__int128>(c1) * c2;
      if (!reduced_equals_constant(buf, v, k == l ? static_cast<long long>(table.centralizer_orders[k]) : 0))
        return "column orthogonality fails for classes " + std::to_string(k) + ", " +
               std::to_string(l);
    }
  return {};
}

CharacterTable character_table(const FiniteGroup& g, const ConjugacyData& cc) {
  const u32 r = cc.count();
  const u32 e = g.exponent();
  const u64 p = dixon_prime(g.order(), e);

  auto chars = modular_characters(g, cc, p);
  if (chars.size() != r) throw InternalInconsistency("character count differs from class count");

  const u64 root = least_primitive_root(p);
  const u64 zeta = pow_mod(root, (p - 1) / e, p);
  const u64 zeta_inv = pow_mod(zeta, e - 1, p);

  CharacterTable table;
  table.conductor = e;
  table.class_sizes = cc.sizes;
  table.centralizer_orders.resize(r);
  for (u32 k = 0; k < r; ++k) table.centralizer_orders[k] = g.order() / cc.sizes[k];

  for (const auto& mc : chars) {
    table.degrees.push_back(mc.degree);
    table.values.push_back(lift_character(mc, g, cc, p, zeta_inv));
    const Cyclotomic& at_identity = table.values.back()[0];
    if (!(at_identity.is_integer() && at_identity.rational_value() == Rational(mc.degree)))
      throw InternalInconsistency("lifted value at the identity differs from the degree");
  }

  sort_rows(table);

  if (auto msg = orthogonality_violation(table, g.order(), cc.inverse_class); !msg.empty())
    throw InternalInconsistency(msg);
  return table;
}

CharacterTable cyclic_character_table(std::uint32_t n) {
  if (n == 0) throw Error("order must be positive");
  const auto roots = Cyclotomic::all_roots_of_unity(n);

  CharacterTable table;
  table.conductor = n;
  table.class_sizes.assign(n, 1);
  table.centralizer_orders.assign(n, n);
  table.degrees.assign(n, 1);
  table.values.resize(n);
  for (u32 i = 0; i < n; ++i) {
    table.values[i].reserve(n);
    for (u32 k = 0; k < n; ++k)
      table.values[i].push_back(roots[static_cast<u64>(i) * k % n]);
  }
  sort_rows(table);
  return table;
}

Subgroup character_kernel(const CharacterTable& table, std::uint32_t row, const FiniteGroup& g,
                          const ConjugacyData& cc) {
  const Cyclotomic deg = Cyclotomic::from_rational(Rational(table.degrees[row]), table.conductor);
  Subgroup out;
  for (u32 x = 0; x < g.order(); ++x)
    if (table.values[row][cc.class_of[x]] == deg) out.members.push_back(x);
  return out;
}

SubgroupCharacters subgroup_characters(const FiniteGroup& g, const Subgroup& s) {
  SubgroupCharacters out{subgroup_as_group(g, s), {}, {}};
  out.cc = conjugacy_classes(out.embedded.group);
  out.table = character_table(out.embedded.group, out.cc);
  return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> restriction_constituents(
    const CharacterTable& table, std::uint32_t row, const FiniteGroup& g, const ConjugacyData& cc,
    const SubgroupCharacters& sub) {
  const FiniteGroup& n = sub.embedded.group;
  const u32 m = n.order();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  u64 degree_check = 0;

  for (u32 psi = 0; psi < sub.table.count(); ++psi) {
    Cyclotomic acc;
    for (u32 local = 0; local < m; ++local) {
      const u32 parent = sub.embedded.to_parent[local];
      const Cyclotomic& chi_val = table.values[row][cc.class_of[parent]];
      const Cyclotomic& psi_conj = sub.table.values[psi][sub.cc.class_of[n.inv(local)]];
      acc += chi_val * psi_conj;
    }
    // <chi|_N, psi> must be a nonnegative integer.
    Cyclotomic scaled = acc.scaled(Rational(1, m));
    if (!scaled.is_integer() || scaled.rational_value().is_negative())
      throw NonIntegerMultiplicity("restriction inner product is not a nonnegative integer");
    long long mult = scaled.is_zero() ? 0 : scaled.rational_value().num();
    if (mult > 0) {
      out.emplace_back(psi, static_cast<std::uint32_t>(mult));
      degree_check += static_cast<u64>(mult) * sub.table.degrees[psi];
    }
  }
  if (degree_check != table.degrees[row])
    throw NonIntegerMultiplicity("restriction constituents do not add up to the degree");
  return out;
}

}  // namespace cdg
