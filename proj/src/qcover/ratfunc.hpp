#pragma once

#include "laurent.hpp"

namespace qcover {

/// Rational function in q kept in a canonical form so that equality is
/// structural: the denominator is a monic polynomial with nonzero constant
/// term (all q-power content is pushed into the numerator, which may be a
/// genuine Laurent polynomial), and gcd(num, den) = 1 in Q[q].
class RatFunc {
 public:
  RatFunc() : den_(Laurent::from_int(1)) {}
  RatFunc(const Laurent& num) : num_(num), den_(Laurent::from_int(1)) {}
  RatFunc(Laurent num, Laurent den);

  static RatFunc from_int(long n) { return RatFunc(Laurent::from_int(n)); }

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_one(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
  bool operator<(const RatFunc& o) const;

  RatFunc inverse() const;
  RatFunc pow(int n) const;

  /// Substitute q -> q^{-1}.
  RatFunc subst_qinv() const;
  /// Substitute q -> -q^{-1}.
  RatFunc subst_negqinv() const;

  std::string str() const;

 private:
  void canonicalize();
  Laurent num_, den_;
};

}  // namespace qcover
