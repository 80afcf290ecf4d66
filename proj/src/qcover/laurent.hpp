#pragma once

#include <map>
#include <optional>
#include <string>

#include "common.hpp"

namespace qcover {

/// Sparse Laurent polynomial in one variable q with exact rational coefficients.
/// Invariant: the exponent->coefficient map never stores a zero coefficient, so
/// structural equality is mathematical equality.
class Laurent {
 public:
  Laurent() = default;

  static Laurent from_int(long n) { return monomial(0, Rat(n)); }
  static Laurent monomial(int exp, Rat coeff = Rat(1));
  /// The variable q itself.
  static Laurent q() { return monomial(1); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  /// Lowest exponent; only meaningful on nonzero values.
  int val() const;
  /// Highest exponent; only meaningful on nonzero values.
  int deg() const;
  Rat coeff(int e) const;
  const std::map<int, Rat>& terms() const { return c_; }
  std::size_t term_count() const { return c_.size(); }

  Laurent operator-() const;
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  Laurent operator*(const Rat& r) const;
  bool operator==(const Laurent& o) const { return c_ == o.c_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }
  /// Ordering for use as a map key; no algebraic meaning.
  bool operator<(const Laurent& o) const { return c_ < o.c_; }

  Laurent pow(unsigned n) const;
  /// Multiply by q^k.
  Laurent shifted(int k) const;
  /// Substitute q -> q^{-1}.
  Laurent subst_qinv() const;
  /// Substitute q -> -q^{-1} (the bar involution at the pi = -1 component).
  Laurent subst_negqinv() const;
  /// Substitute q -> -q.
  Laurent subst_negq() const;
  /// Substitute q -> q^s, s >= 1.
  Laurent subst_qpow(int s) const;

  /// Exact division; nullopt when the division leaves a remainder.
  static std::optional<Laurent> div_exact(const Laurent& a, const Laurent& b);

  /// Monic gcd of the underlying polynomials (valuations are ignored, so this
  /// is the gcd in Q[q] of a and b with their q-power content stripped).
  static Laurent poly_gcd(const Laurent& a, const Laurent& b);

  /// Evaluate at a rational point (used by test oracles, not by the core).
  Rat eval(const Rat& x) const;

  std::string str() const;

 private:
  void add_term(int e, const Rat& r);
  std::map<int, Rat> c_;
};

inline Laurent operator*(const Rat& r, const Laurent& p) { return p * r; }

}  // namespace qcover
