#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cdg/rational.hpp"

namespace cdg {

/// An exact element of the cyclotomic field Q(zeta_e), held in canonical
/// form: rational coefficients over the power basis zeta^0..zeta^{phi(e)-1},
/// fully reduced modulo the e-th cyclotomic polynomial. Canonical forms are
/// unique, so equality is coefficient equality and no floating point appears
/// anywhere.
class Cyclotomic {
 public:
  Cyclotomic() : e_(1) {}  // zero with conductor 1

  static Cyclotomic zero(std::uint32_t conductor) { return Cyclotomic(conductor); }
  static Cyclotomic from_rational(const Rational& q, std::uint32_t conductor = 1);
  /// zeta_conductor ^ power (power taken mod conductor).
  static Cyclotomic root_of_unity(std::uint32_t conductor, std::uint64_t power);
  /// All `conductor` canonical roots of unity, index k holds zeta^k.
  static std::vector<Cyclotomic> all_roots_of_unity(std::uint32_t conductor);
  /// Canonicalize sum_i buf[i] * zeta^i (buf length at most the conductor).
  static Cyclotomic from_power_basis(std::uint32_t conductor, std::vector<Rational> buf);

  std::uint32_t conductor() const { return e_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  bool is_integer() const { return is_rational() && (terms_.empty() || terms_[0].second.is_integer()); }
  Rational rational_value() const;  // pre: is_rational()

  /// Rewrites the value over a conductor that the current one divides.
  Cyclotomic embedded(std::uint32_t new_conductor) const;

  /// Galois action zeta -> zeta^k; pre: gcd(k, conductor) = 1.
  Cyclotomic galois(std::uint32_t k) const;
  Cyclotomic conjugate() const { return e_ == 1 ? *this : galois(e_ - 1); }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic operator-() const;
  Cyclotomic scaled(const Rational& q) const;

  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  /// Mathematical equality; values of different conductors are embedded
  /// into the least common one first.
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Deterministic total order on values of equal conductor: lexicographic
  /// over the dense coefficient vector.
  int compare(const Cyclotomic& o) const;

  /// Dense coefficients over the power basis, length phi(conductor).
  std::vector<Rational> dense_coefficients() const;

  const std::vector<std::pair<std::uint32_t, Rational>>& terms() const { return terms_; }

  /// Least divisor d of the conductor with the value inside Q(zeta_d).
  std::uint32_t minimal_conductor() const;
  /// Rewrites over conductor d; pre: value lies in Q(zeta_d).
  Cyclotomic to_conductor(std::uint32_t d) const;

  std::string to_string() const;

 private:
  explicit Cyclotomic(std::uint32_t e) : e_(e) {}

  /// Reduce a dense coefficient buffer (length = conductor) to canonical
  /// sparse form.
  static Cyclotomic from_dense(std::uint32_t e, std::vector<Rational> buf);

  std::uint32_t e_;
  std::vector<std::pair<std::uint32_t, Rational>> terms_;  // sorted by exponent < phi(e)
};

/// phi(e), cached alongside the cyclotomic polynomial context.
std::uint32_t cyclotomic_basis_size(std::uint32_t e);

}  // namespace cdg
