#include "ratfunc.hpp"

namespace qcover {

RatFunc::RatFunc(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = Laurent::from_int(1);
    return;
  }
  // Push the denominator's q-power content into the numerator.
  int dv = den_.val();
  if (dv != 0) {
    den_ = den_.shifted(-dv);
    num_ = num_.shifted(-dv);
  }
  // Cancel the polynomial gcd (numerator valuation is preserved separately).
  Laurent g = Laurent::poly_gcd(num_, den_);
  if (!g.is_one() && !g.is_zero()) {
    int nv = num_.val();
    auto qn = Laurent::div_exact(num_.shifted(-nv), g);
    auto qd = Laurent::div_exact(den_, g);
    if (!qn || !qd) throw Error("GcdBug", "gcd failed to divide");
    num_ = qn->shifted(nv);
    den_ = *qd;
  }
  // Monic denominator.
  Rat lead = den_.coeff(den_.deg());
  if (lead != 1) {
    Laurent scale = Laurent::monomial(0, 1 / lead);
    num_ = num_ * scale;
    den_ = den_ * scale;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw DivisionByZero("rational function division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

bool RatFunc::operator<(const RatFunc& o) const {
  if (num_ != o.num_) return num_ < o.num_;
  return den_ < o.den_;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RatFunc r = from_int(1);
  RatFunc b = *this;
  unsigned m = static_cast<unsigned>(n);
  while (m) {
    if (m & 1) r *= b;
    b *= b;
    m >>= 1;
  }
  return r;
}

RatFunc RatFunc::subst_qinv() const { return RatFunc(num_.subst_qinv(), den_.subst_qinv()); }

RatFunc RatFunc::subst_negqinv() const {
  return RatFunc(num_.subst_negqinv(), den_.subst_negqinv());
}

std::string RatFunc::str() const {
  if (is_laurent()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace qcover
