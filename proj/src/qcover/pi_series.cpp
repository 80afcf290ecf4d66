#include "pi_series.hpp"

#include <sstream>
#include <vector>

namespace qcover {

namespace {

// Coefficients of num/den through q^order as a map, for a canonical component.
std::map<int, Rat> expand_component(const RatFunc& f, int order) {
  std::map<int, Rat> out;
  if (f.is_zero()) return out;
  const Laurent& num = f.num();
  const Laurent& den = f.den();
  if (den.coeff(0) == 0)
    throw NotExpandable("denominator vanishes at q = 0 after normalization");
  int nv = num.val();
  int need = order - nv;  // how many inverse-series terms we need
  if (need < 0) return out;
  // Inverse of den as a power series: inv[k] via the standard recurrence.
  std::vector<Rat> inv(static_cast<std::size_t>(need) + 1, Rat(0));
  Rat d0 = den.coeff(0);
  inv[0] = 1 / d0;
  for (int k = 1; k <= need; ++k) {
    Rat acc(0);
    for (auto& [e, c] : den.terms()) {
      if (e == 0 || e > k) continue;
      acc += c * inv[static_cast<std::size_t>(k - e)];
    }
    inv[static_cast<std::size_t>(k)] = -acc / d0;
  }
  for (auto& [e, c] : num.terms()) {
    for (int k = 0; e + k <= order && k <= need; ++k) {
      if (inv[static_cast<std::size_t>(k)] == 0) continue;
      Rat& slot = out[e + k];
      slot += c * inv[static_cast<std::size_t>(k)];
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

PiSeries PiSeries::expand(const PiScalar& x, int order) {
  PiSeries s(order);
  auto fp = expand_component(x.plus, order);
  auto fm = expand_component(x.minus, order);
  for (auto& [e, c] : fp) {
    s.c0[e] += c / 2;
    s.c1[e] += c / 2;
  }
  for (auto& [e, c] : fm) {
    s.c0[e] += c / 2;
    s.c1[e] -= c / 2;
  }
  for (auto* m : {&s.c0, &s.c1})
    for (auto it = m->begin(); it != m->end();)
      it = (it->second == 0) ? m->erase(it) : std::next(it);
  return s;
}

void PiSeries::set(int e, Rat a, Rat b) {
  if (a != 0) c0[e] = std::move(a); else c0.erase(e);
  if (b != 0) c1[e] = std::move(b); else c1.erase(e);
}

void PiSeries::add(int e, const Rat& a, const Rat& b) {
  if (a != 0) {
    Rat& s = c0[e];
    s += a;
    if (s == 0) c0.erase(e);
  }
  if (b != 0) {
    Rat& s = c1[e];
    s += b;
    if (s == 0) c1.erase(e);
  }
}

std::pair<Rat, Rat> PiSeries::at(int e) const {
  auto f = [e](const std::map<int, Rat>& m) {
    auto it = m.find(e);
    return it == m.end() ? Rat(0) : it->second;
  };
  return {f(c0), f(c1)};
}

int PiSeries::min_exponent() const {
  int lo = order;
  if (!c0.empty()) lo = std::min(lo, c0.begin()->first);
  if (!c1.empty()) lo = std::min(lo, c1.begin()->first);
  return lo;
}

PiSeries PiSeries::operator+(const PiSeries& o) const {
  PiSeries s(std::min(order, o.order));
  for (auto& [e, c] : c0) if (e <= s.order) s.c0[e] = c;
  for (auto& [e, c] : c1) if (e <= s.order) s.c1[e] = c;
  for (auto& [e, c] : o.c0) if (e <= s.order) s.add(e, c, Rat(0));
  for (auto& [e, c] : o.c1) if (e <= s.order) s.add(e, Rat(0), c);
  return s;
}

PiSeries PiSeries::operator-(const PiSeries& o) const {
  PiSeries s(std::min(order, o.order));
  for (auto& [e, c] : c0) if (e <= s.order) s.c0[e] = c;
  for (auto& [e, c] : c1) if (e <= s.order) s.c1[e] = c;
  for (auto& [e, c] : o.c0) if (e <= s.order) s.add(e, -c, Rat(0));
  for (auto& [e, c] : o.c1) if (e <= s.order) s.add(e, Rat(0), -c);
  return s;
}

PiSeries PiSeries::operator*(const PiSeries& o) const {
  // Valid range of the product: a coefficient at e needs all splittings
  // e = e1+e2 with e1, e2 inside the known ranges of the factors.
  int ord;
  if (is_zero() || o.is_zero()) {
    ord = std::min(order, o.order);
  } else {
    ord = std::min(order + o.min_exponent(), o.order + min_exponent());
  }
  PiSeries s(ord);
  auto mul_into = [&](const std::map<int, Rat>& a, const std::map<int, Rat>& b, bool to_c1) {
    for (auto& [e1, r1] : a)
      for (auto& [e2, r2] : b) {
        if (e1 + e2 > ord) continue;
        if (to_c1)
          s.add(e1 + e2, Rat(0), r1 * r2);
        else
          s.add(e1 + e2, r1 * r2, Rat(0));
      }
  };
  // (a0 + a1 pi)(b0 + b1 pi) = (a0 b0 + a1 b1) + (a0 b1 + a1 b0) pi.
  mul_into(c0, o.c0, false);
  mul_into(c1, o.c1, false);
  mul_into(c0, o.c1, true);
  mul_into(c1, o.c0, true);
  return s;
}

PiSeries PiSeries::scaled(long pipow, int qexp, const Rat& coeff) const {
  PiSeries s(order + qexp);
  bool swap = ((pipow % 2) + 2) % 2 == 1;
  for (auto& [e, c] : c0) (swap ? s.c1 : s.c0)[e + qexp] = c * coeff;
  for (auto& [e, c] : c1) (swap ? s.c0 : s.c1)[e + qexp] = c * coeff;
  if (coeff == 0) {
    s.c0.clear();
    s.c1.clear();
  }
  return s;
}

PiSeries PiSeries::truncated(int ord) const {
  PiSeries s(std::min(ord, order));
  for (auto& [e, c] : c0) if (e <= s.order) s.c0[e] = c;
  for (auto& [e, c] : c1) if (e <= s.order) s.c1[e] = c;
  return s;
}

std::string PiSeries::str() const {
  std::ostringstream os;
  std::map<int, std::pair<Rat, Rat>> rows;
  for (auto& [e, c] : c0) rows[e].first = c;
  for (auto& [e, c] : c1) rows[e].second = c;
  bool first = true;
  for (auto& [e, cc] : rows) {
    if (!first) os << " + ";
    os << "(" << cc.first.get_str();
    if (cc.second != 0) os << (cc.second > 0 ? "+" : "") << cc.second.get_str() << "*pi";
    os << ")";
    if (e != 0) os << "q^" << e;
    first = false;
  }
  if (first) os << "0";
  os << " + O(q^" << order + 1 << ")";
  return os.str();
}

}  // namespace qcover
