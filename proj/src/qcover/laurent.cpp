#include "laurent.hpp"

#include <sstream>
#include <vector>

namespace qcover {

Laurent Laurent::monomial(int exp, Rat coeff) {
  Laurent p;
  if (coeff != 0) p.c_[exp] = std::move(coeff);
  return p;
}

bool Laurent::is_one() const {
  return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
}

int Laurent::val() const {
  if (is_zero()) throw Error("EmptyLaurent", "val() of zero");
  return c_.begin()->first;
}

int Laurent::deg() const {
  if (is_zero()) throw Error("EmptyLaurent", "deg() of zero");
  return c_.rbegin()->first;
}

Rat Laurent::coeff(int e) const {
  auto it = c_.find(e);
  return it == c_.end() ? Rat(0) : it->second;
}

void Laurent::add_term(int e, const Rat& r) {
  if (r == 0) return;
  auto it = c_.find(e);
  if (it == c_.end()) {
    c_.emplace(e, r);
  } else {
    it->second += r;
    if (it->second == 0) c_.erase(it);
  }
}

Laurent Laurent::operator-() const {
  Laurent p;
  for (auto& [e, r] : c_) p.c_[e] = -r;
  return p;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent p = *this;
  p += o;
  return p;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent p = *this;
  p -= o;
  return p;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (auto& [e, r] : o.c_) add_term(e, r);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (auto& [e, r] : o.c_) add_term(e, -r);
  return *this;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent p;
  for (auto& [e1, r1] : c_)
    for (auto& [e2, r2] : o.c_) p.add_term(e1 + e2, r1 * r2);
  return p;
}

Laurent Laurent::operator*(const Rat& r) const {
  Laurent p;
  if (r == 0) return p;
  for (auto& [e, c] : c_) p.c_[e] = c * r;
  return p;
}

Laurent Laurent::pow(unsigned n) const {
  Laurent r = from_int(1);
  Laurent b = *this;
  while (n) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

Laurent Laurent::shifted(int k) const {
  Laurent p;
  for (auto& [e, r] : c_) p.c_[e + k] = r;
  return p;
}

Laurent Laurent::subst_qinv() const {
  Laurent p;
  for (auto& [e, r] : c_) p.c_[-e] = r;
  return p;
}

Laurent Laurent::subst_negqinv() const {
  Laurent p;
  for (auto& [e, r] : c_) p.c_[-e] = (e % 2 == 0) ? r : -r;
  return p;
}

Laurent Laurent::subst_negq() const {
  Laurent p;
  for (auto& [e, r] : c_) p.c_[e] = (e % 2 == 0) ? r : -r;
  return p;
}

Laurent Laurent::subst_qpow(int s) const {
  Laurent p;
  for (auto& [e, r] : c_) p.c_[e * s] = r;
  return p;
}

namespace {

// Dense coefficient vector of the valuation-stripped polynomial part.
std::vector<Rat> dense(const Laurent& a) {
  std::vector<Rat> v(static_cast<std::size_t>(a.deg() - a.val()) + 1, Rat(0));
  for (auto& [e, r] : a.terms()) v[static_cast<std::size_t>(e - a.val())] = r;
  return v;
}

Laurent from_dense(const std::vector<Rat>& v, int val) {
  Laurent p;
  for (std::size_t k = 0; k < v.size(); ++k)
    p += Laurent::monomial(val + static_cast<int>(k), v[k]);
  return p;
}

// Long division in Q[q]; returns {quotient, remainder}.
std::pair<std::vector<Rat>, std::vector<Rat>> poly_divmod(std::vector<Rat> a,
                                                          const std::vector<Rat>& b) {
  std::vector<Rat> quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
  const Rat& lead = b.back();
  for (std::size_t k = a.size(); k >= b.size() && k > 0;) {
    --k;
    if (a[k] == 0) {
      if (k + 1 == b.size()) break;
      continue;
    }
    if (k + 1 < b.size()) break;
    Rat f = a[k] / lead;
    quo[k + 1 - b.size()] = f;
    for (std::size_t t = 0; t < b.size(); ++t) a[k + 1 - b.size() + t] -= f * b[t];
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return {quo, a};
}

}  // namespace

std::optional<Laurent> Laurent::div_exact(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw DivisionByZero("Laurent division by zero");
  if (a.is_zero()) return Laurent();
  auto [quo, rem] = poly_divmod(dense(a), dense(b));
  if (!rem.empty()) return std::nullopt;
  return from_dense(quo, a.val() - b.val());
}

Laurent Laurent::poly_gcd(const Laurent& a, const Laurent& b) {
  if (a.is_zero() && b.is_zero()) return Laurent();
  auto monic = [](std::vector<Rat> v) {
    if (!v.empty() && v.back() != 1) {
      Rat l = v.back();
      for (auto& c : v) c /= l;
    }
    return v;
  };
  if (a.is_zero()) return from_dense(monic(dense(b)), 0);
  if (b.is_zero()) return from_dense(monic(dense(a)), 0);
  std::vector<Rat> x = dense(a), y = dense(b);
  while (!y.empty()) {
    auto [quo, rem] = poly_divmod(x, y);
    (void)quo;
    x = std::move(y);
    y = monic(std::move(rem));
  }
  return from_dense(monic(x), 0);
}

Rat Laurent::eval(const Rat& x) const {
  Rat acc(0);
  for (auto& [e, r] : c_) {
    Rat p(1);
    int n = e >= 0 ? e : -e;
    for (int t = 0; t < n; ++t) p *= x;
    if (e < 0) p = 1 / p;
    acc += r * p;
  }
  return acc;
}

std::string Laurent::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    Rat r = it->second;
    if (!first) os << (r > 0 ? " + " : " - ");
    if (first && r < 0) os << "-";
    Rat ar = abs(r);
    int e = it->first;
    if (ar != 1 || e == 0) os << ar.get_str();
    if (e != 0) {
      if (ar != 1) os << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

}  // namespace qcover
