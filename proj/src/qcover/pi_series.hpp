#pragma once

#include "pi_scalar.hpp"

namespace qcover {

/// Truncated Laurent series over Z[pi]/(pi^2-1): all coefficients of q^e for
/// e <= order are exact; nothing is known above the truncation order.  Stored
/// in pi-coordinates (c0 + c1*pi per power of q) because dimension series are
/// naturally read off that way.
struct PiSeries {
  int order = 0;
  std::map<int, Rat> c0, c1;  // exponent -> coefficient, no zeros stored

  PiSeries() = default;
  explicit PiSeries(int ord) : order(ord) {}

  /// Power-series expansion of an exact scalar through q^order.
  /// Throws NotExpandable if a component denominator vanishes at q = 0 (cannot
  /// happen for canonical rational functions, but guarded anyway).
  static PiSeries expand(const PiScalar& x, int order);

  void set(int e, Rat a, Rat b);
  void add(int e, const Rat& a, const Rat& b);
  std::pair<Rat, Rat> at(int e) const;
  bool is_zero() const { return c0.empty() && c1.empty(); }
  int min_exponent() const;

  PiSeries operator+(const PiSeries& o) const;
  PiSeries operator-(const PiSeries& o) const;
  PiSeries operator*(const PiSeries& o) const;
  /// Multiply by coeff * pi^pipow * q^qexp.
  PiSeries scaled(long pipow, int qexp, const Rat& coeff = Rat(1)) const;
  /// Truncate to a smaller order.
  PiSeries truncated(int ord) const;

  /// Equality of the overlapping known range (orders must agree for ==).
  bool operator==(const PiSeries& o) const {
    return order == o.order && c0 == o.c0 && c1 == o.c1;
  }
  bool operator!=(const PiSeries& o) const { return !(*this == o); }

  std::string str() const;
};

}  // namespace qcover
