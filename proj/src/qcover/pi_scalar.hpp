#pragma once

#include "ratfunc.hpp"

namespace qcover {

/// Scalar over the base ring extended by a central involution pi with
/// pi^2 = 1.  Since R[pi]/(pi^2-1) splits as R x R, a scalar is stored as its
/// pair of specializations at pi = +1 and pi = -1; every ring operation is
/// componentwise and exact.  The `a + b*pi` coordinates are recovered as
/// ((plus+minus)/2, (plus-minus)/2).
struct PiScalar {
  RatFunc plus, minus;

  PiScalar() = default;
  PiScalar(RatFunc both) : plus(both), minus(std::move(both)) {}
  PiScalar(RatFunc p, RatFunc m) : plus(std::move(p)), minus(std::move(m)) {}

  static PiScalar from_int(long n) { return PiScalar(RatFunc::from_int(n)); }
  static PiScalar one() { return from_int(1); }
  static PiScalar zero() { return PiScalar(); }
  /// q^e.
  static PiScalar q_pow(int e) { return PiScalar(RatFunc(Laurent::monomial(e))); }
  /// pi^k.
  static PiScalar pi_pow(long k);
  static PiScalar pi() { return pi_pow(1); }
  /// coeff * pi^pipow * q^qexp.
  static PiScalar monomial(long pipow, int qexp, Rat coeff = Rat(1));

  bool is_zero() const { return plus.is_zero() && minus.is_zero(); }
  /// Invertible in the split ring means both components are nonzero.
  bool is_invertible() const { return !plus.is_zero() && !minus.is_zero(); }
  /// Both components are Laurent polynomials (no genuine denominator).
  bool is_laurent() const { return plus.is_laurent() && minus.is_laurent(); }

  const RatFunc& component(int sign) const { return sign >= 0 ? plus : minus; }

  PiScalar operator-() const { return {-plus, -minus}; }
  PiScalar operator+(const PiScalar& o) const { return {plus + o.plus, minus + o.minus}; }
  PiScalar operator-(const PiScalar& o) const { return {plus - o.plus, minus - o.minus}; }
  PiScalar operator*(const PiScalar& o) const { return {plus * o.plus, minus * o.minus}; }
  PiScalar operator/(const PiScalar& o) const { return {plus / o.plus, minus / o.minus}; }
  PiScalar& operator+=(const PiScalar& o) { return *this = *this + o; }
  PiScalar& operator-=(const PiScalar& o) { return *this = *this - o; }
  PiScalar& operator*=(const PiScalar& o) { return *this = *this * o; }
  bool operator==(const PiScalar& o) const { return plus == o.plus && minus == o.minus; }
  bool operator!=(const PiScalar& o) const { return !(*this == o); }

  PiScalar inverse() const;
  PiScalar pow(int n) const;

  /// Bar involution: q -> pi q^{-1}, pi -> pi.  Componentwise this is
  /// q -> q^{-1} at pi=+1 and q -> -q^{-1} at pi=-1.
  PiScalar bar() const { return {plus.subst_qinv(), minus.subst_negqinv()}; }

  std::string str() const;
};

/// Quantum integer [a] at q_i = q^s, pi_i = pi^p:
/// [a] = (pi_i^a q_i^a - q_i^{-a}) / (pi_i q_i - q_i^{-1}).
/// Always a Laurent-polynomial-valued scalar; computed by exact division.
PiScalar quantum_integer(long a, long s, int p);

/// [a]! = [a][a-1]...[1].
PiScalar quantum_factorial(long a, long s, int p);

/// Quantum binomial [a choose t]; computed as a factorial ratio with exact
/// Laurent division per component.  Throws InexactDivision if a remainder
/// appears (that would signal an arithmetic bug, never a valid input).
PiScalar quantum_binomial(long a, long t, long s, int p);

}  // namespace qcover
