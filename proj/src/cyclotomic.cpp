#include "cdg/cyclotomic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

#include "cdg/errors.hpp"
#include "cdg/numtheory.hpp"

namespace cdg {

namespace {

struct ConductorContext {
  std::uint32_t e = 1;
  std::uint32_t phi = 1;
  std::vector<long long> poly;  // cyclotomic polynomial, poly[i] coeff of x^i, monic degree phi
};

// Exact division of integer polynomials, used to peel cyclotomic factors
// out of x^n - 1. Works in 128-bit to absorb intermediate growth.
std::vector<__int128> divide_exact(const std::vector<__int128>& num,
                                   const std::vector<long long>& den) {
  const std::size_t dn = num.size() - 1, dd = den.size() - 1;
  if (den.back() != 1) throw InternalInconsistency("divisor must be monic");
  std::vector<__int128> rem = num, quot(dn - dd + 1, 0);
  for (std::size_t k = dn - dd + 1; k-- > 0;) {
    __int128 c = rem[k + dd];
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dd; ++i) rem[k + i] -= c * den[i];
  }
  for (__int128 c : rem)
    if (c != 0) throw InternalInconsistency("inexact cyclotomic polynomial division");
  return quot;
}

const ConductorContext& context(std::uint32_t e) {
  static std::map<std::uint32_t, ConductorContext> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(e);
  if (it != cache.end()) return it->second;
  if (e == 0) throw Error("conductor must be positive");

  // Phi_e = (x^e - 1) / prod of Phi_d over proper divisors d.
  std::function<const std::vector<long long>&(std::uint32_t)> phi_poly =
      [&](std::uint32_t n) -> const std::vector<long long>& {
    auto found = cache.find(n);
    if (found != cache.end()) return found->second.poly;
    std::vector<__int128> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (std::uint32_t d = 1; d < n; ++d)
      if (n % d == 0) p = divide_exact(p, phi_poly(d));
    ConductorContext ctx;
    ctx.e = n;
    ctx.phi = static_cast<std::uint32_t>(totient(n));
    ctx.poly.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] > INT64_MAX || p[i] < INT64_MIN)
        throw ArithmeticOverflow("cyclotomic polynomial coefficient overflow");
      ctx.poly[i] = static_cast<long long>(p[i]);
    }
    if (ctx.poly.size() != ctx.phi + 1)
      throw InternalInconsistency("cyclotomic polynomial degree mismatch");
    return cache.emplace(n, std::move(ctx)).first->second.poly;
  };
  phi_poly(e);
  return cache.at(e);
}

}  // namespace

std::uint32_t cyclotomic_basis_size(std::uint32_t e) { return context(e).phi; }

Cyclotomic Cyclotomic::from_dense(std::uint32_t e, std::vector<Rational> buf) {
  const auto& ctx = context(e);
  const std::uint32_t phi = ctx.phi;
  // Monic reduction: x^m = -sum_{i<phi} poly[i] x^{m-phi+i}.
  for (std::size_t m = buf.size(); m-- > phi;) {
    if (buf[m].is_zero()) continue;
    Rational c = buf[m];
    buf[m] = Rational(0);
    for (std::uint32_t i = 0; i < phi; ++i) {
      if (ctx.poly[i] == 0) continue;
      buf[m - phi + i] -= c * Rational(ctx.poly[i]);
    }
  }
  Cyclotomic out(e);
  for (std::uint32_t i = 0; i < phi && i < buf.size(); ++i)
    if (!buf[i].is_zero()) out.terms_.emplace_back(i, buf[i]);
  return out;
}

Cyclotomic Cyclotomic::from_power_basis(std::uint32_t conductor, std::vector<Rational> buf) {
  if (buf.size() > conductor) throw Error("power basis buffer longer than the conductor");
  return from_dense(conductor, std::move(buf));
}

Cyclotomic Cyclotomic::from_rational(const Rational& q, std::uint32_t conductor) {
  Cyclotomic out(conductor);
  context(conductor);  // validate
  if (!q.is_zero()) out.terms_.emplace_back(0, q);
  return out;
}

Cyclotomic Cyclotomic::root_of_unity(std::uint32_t conductor, std::uint64_t power) {
  std::vector<Rational> buf(conductor);
  buf[power % conductor] = Rational(1);
  return from_dense(conductor, std::move(buf));
}

std::vector<Cyclotomic> Cyclotomic::all_roots_of_unity(std::uint32_t e) {
  const auto& ctx = context(e);
  const std::uint32_t phi = ctx.phi;
  std::vector<Cyclotomic> out;
  out.reserve(e);
  out.push_back(from_rational(Rational(1), e));
  // Iterate zeta^k = zeta^{k-1} * zeta: shift exponents up by one and fold
  // the single overflowing term, so each step costs O(phi).
  for (std::uint32_t k = 1; k < e; ++k) {
    std::vector<Rational> buf(phi + 1);
    for (const auto& [exp, c] : out.back().terms_) buf[exp + 1] = c;
    if (!buf[phi].is_zero()) {
      Rational c = buf[phi];
      buf[phi] = Rational(0);
      for (std::uint32_t i = 0; i < phi; ++i)
        if (ctx.poly[i] != 0) buf[i] -= c * Rational(ctx.poly[i]);
    }
    Cyclotomic next(e);
    for (std::uint32_t i = 0; i < phi; ++i)
      if (!buf[i].is_zero()) next.terms_.emplace_back(i, buf[i]);
    out.push_back(std::move(next));
  }
  return out;
}

Rational Cyclotomic::rational_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() != 1 || terms_[0].first != 0)
    throw Error("value is not rational");
  return terms_[0].second;
}

Cyclotomic Cyclotomic::embedded(std::uint32_t new_conductor) const {
  if (new_conductor == e_) return *this;
  if (new_conductor % e_ != 0) throw Error("embedding requires a conductor multiple");
  const std::uint32_t scale = new_conductor / e_;
  std::vector<Rational> buf(new_conductor);
  for (const auto& [exp, c] : terms_) buf[static_cast<std::size_t>(exp) * scale] += c;
  return from_dense(new_conductor, std::move(buf));
}

Cyclotomic Cyclotomic::galois(std::uint32_t k) const {
  k %= e_;
  if (std::gcd<std::uint64_t>(k, e_) != 1) throw Error("galois exponent must be coprime to the conductor");
  std::vector<Rational> buf(e_);
  for (const auto& [exp, c] : terms_) buf[static_cast<std::uint64_t>(exp) * k % e_] += c;
  return from_dense(e_, std::move(buf));
}

namespace {

std::uint32_t common_conductor(std::uint32_t a, std::uint32_t b) {
  return static_cast<std::uint32_t>(std::lcm<std::uint64_t>(a, b));
}

}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  const std::uint32_t e = common_conductor(a.e_, b.e_);
  const Cyclotomic &x = (a.e_ == e) ? a : a.embedded(e);
  const Cyclotomic y = (b.e_ == e) ? b : b.embedded(e);
  std::vector<Rational> buf(e);
  for (const auto& [exp, c] : x.terms_) buf[exp] += c;
  for (const auto& [exp, c] : y.terms_) buf[exp] += c;
  return Cyclotomic::from_dense(e, std::move(buf));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  const std::uint32_t e = common_conductor(a.e_, b.e_);
  const Cyclotomic x = (a.e_ == e) ? a : a.embedded(e);
  const Cyclotomic y = (b.e_ == e) ? b : b.embedded(e);
  std::vector<Rational> buf(e);
  for (const auto& [e1, c1] : x.terms_)
    for (const auto& [e2, c2] : y.terms_) buf[(e1 + e2) % e] += c1 * c2;
  return Cyclotomic::from_dense(e, std::move(buf));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out(e_);
  out.terms_ = terms_;
  for (auto& [exp, c] : out.terms_) c = -c;
  return out;
}

Cyclotomic Cyclotomic::scaled(const Rational& q) const {
  if (q.is_zero()) return Cyclotomic(e_);
  Cyclotomic out(e_);
  out.terms_ = terms_;
  for (auto& [exp, c] : out.terms_) c *= q;
  return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.e_ == b.e_) return a.terms_ == b.terms_;
  const std::uint32_t e = common_conductor(a.e_, b.e_);
  return a.embedded(e).terms_ == b.embedded(e).terms_;
}

int Cyclotomic::compare(const Cyclotomic& o) const {
  if (e_ != o.e_) {
    const std::uint32_t e = common_conductor(e_, o.e_);
    return embedded(e).compare(o.embedded(e));
  }
  // Lexicographic over dense coefficients.
  std::size_t i = 0, j = 0;
  std::uint32_t exp = 0;
  const std::uint32_t phi = cyclotomic_basis_size(e_);
  for (; exp < phi; ++exp) {
    Rational a = (i < terms_.size() && terms_[i].first == exp) ? terms_[i++].second : Rational(0);
    Rational b = (j < o.terms_.size() && o.terms_[j].first == exp) ? o.terms_[j++].second : Rational(0);
    if (a < b) return -1;
    if (b < a) return 1;
  }
  return 0;
}

std::vector<Rational> Cyclotomic::dense_coefficients() const {
  std::vector<Rational> out(cyclotomic_basis_size(e_));
  for (const auto& [exp, c] : terms_) out[exp] = c;
  return out;
}

std::uint32_t Cyclotomic::minimal_conductor() const {
  if (is_rational()) return 1;
  for (std::uint64_t d : divisors_sorted(e_)) {
    if (d == e_) return e_;
    // Invariance under Gal(Q(zeta_e)/Q(zeta_d)): all k with k = 1 mod d.
    bool invariant = true;
    for (std::uint32_t k = 1; k < e_ && invariant; ++k) {
      if (k % d != 1 % d) continue;
      if (std::gcd<std::uint64_t>(k, e_) != 1) continue;
      if (!(galois(k) == *this)) invariant = false;
    }
    if (invariant) return static_cast<std::uint32_t>(d);
  }
  return e_;
}

Cyclotomic Cyclotomic::to_conductor(std::uint32_t d) const {
  if (d == e_) return *this;
  if (e_ % d != 0) throw Error("target conductor must divide the current one");
  // Solve dense(value) = sum_j c_j * dense(embed(zeta_d^j)) over the
  // rationals by Gaussian elimination.
  const std::uint32_t phi_e = cyclotomic_basis_size(e_);
  const std::uint32_t phi_d = cyclotomic_basis_size(d);
  std::vector<std::vector<Rational>> cols;
  for (std::uint32_t j = 0; j < phi_d; ++j)
    cols.push_back(root_of_unity(d, j).embedded(e_).dense_coefficients());
  std::vector<Rational> rhs = dense_coefficients();

  // Augmented elimination, phi_e rows by phi_d columns.
  std::vector<std::uint32_t> pivot_col(phi_e, UINT32_MAX);
  std::vector<Rational> sol(phi_d, Rational(0));
  std::vector<std::vector<Rational>> m(phi_e, std::vector<Rational>(phi_d + 1));
  for (std::uint32_t r = 0; r < phi_e; ++r) {
    for (std::uint32_t c = 0; c < phi_d; ++c) m[r][c] = cols[c][r];
    m[r][phi_d] = rhs[r];
  }
  std::uint32_t rank = 0;
  for (std::uint32_t c = 0; c < phi_d; ++c) {
    std::uint32_t sel = UINT32_MAX;
    for (std::uint32_t r = rank; r < phi_e; ++r)
      if (!m[r][c].is_zero()) {
        sel = r;
        break;
      }
    if (sel == UINT32_MAX) continue;
    std::swap(m[rank], m[sel]);
    Rational inv = Rational(1) / m[rank][c];
    for (auto& v : m[rank]) v *= inv;
    for (std::uint32_t r = 0; r < phi_e; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      Rational f = m[r][c];
      for (std::uint32_t k = c; k <= phi_d; ++k) m[r][k] -= f * m[rank][k];
    }
    pivot_col[rank] = c;
    ++rank;
  }
  for (std::uint32_t r = rank; r < phi_e; ++r)
    if (!m[r][phi_d].is_zero()) throw Error("value does not lie in the requested subfield");
  for (std::uint32_t r = 0; r < rank; ++r) sol[pivot_col[r]] = m[r][phi_d];

  Cyclotomic out(d);
  for (std::uint32_t j = 0; j < phi_d; ++j)
    if (!sol[j].is_zero()) out.terms_.emplace_back(j, sol[j]);
  return out;
}

std::string Cyclotomic::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exp, c] : terms_) {
    std::string cs = c.to_string();
    if (!first && !c.is_negative()) out += "+";
    if (exp == 0) {
      out += cs;
    } else {
      if (c == Rational(1)) {
        // bare power
      } else if (c == Rational(-1)) {
        out += "-";
      } else {
        out += cs + "*";
      }
      out += "z" + std::to_string(e_);
      if (exp > 1) out += "^" + std::to_string(exp);
    }
    first = false;
  }
  return out;
}

}  // namespace cdg
