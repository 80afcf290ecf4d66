#include "pi_scalar.hpp"

namespace qcover {

PiScalar PiScalar::pi_pow(long k) {
  bool odd = ((k % 2) + 2) % 2 == 1;
  return PiScalar(RatFunc::from_int(1), RatFunc::from_int(odd ? -1 : 1));
}

PiScalar PiScalar::monomial(long pipow, int qexp, Rat coeff) {
  PiScalar m = pi_pow(pipow);
  RatFunc qc = RatFunc(Laurent::monomial(qexp, std::move(coeff)));
  return {m.plus * qc, m.minus * qc};
}

PiScalar PiScalar::inverse() const {
  if (!is_invertible()) throw DivisionByZero("pi-scalar is not invertible");
  return {plus.inverse(), minus.inverse()};
}

PiScalar PiScalar::pow(int n) const { return {plus.pow(n), minus.pow(n)}; }

std::string PiScalar::str() const {
  if (plus == minus) return plus.str();
  return "{+: " + plus.str() + " | -: " + minus.str() + "}";
}

namespace {

// One component of [a]: (e^a q^{sa} - q^{-sa}) / (e q^s - q^{-s}) where
// e = (+-1)^p is the value of pi_i in that component.
Laurent q_integer_component(long a, long s, int e) {
  if (a == 0) return Laurent();
  long ea = (a % 2 == 0) ? 1 : e;
  Laurent num = Laurent::monomial(static_cast<int>(s * a), Rat(ea)) -
                Laurent::monomial(static_cast<int>(-s * a));
  Laurent den = Laurent::monomial(static_cast<int>(s), Rat(e)) -
                Laurent::monomial(static_cast<int>(-s));
  auto quo = Laurent::div_exact(num, den);
  if (!quo) throw Error("QIntBug", "quantum integer division left a remainder");
  return *quo;
}

}  // namespace

PiScalar quantum_integer(long a, long s, int p) {
  int em = (p % 2 == 0) ? 1 : -1;
  return PiScalar(RatFunc(q_integer_component(a, s, 1)),
                  RatFunc(q_integer_component(a, s, em)));
}

PiScalar quantum_factorial(long a, long s, int p) {
  if (a < 0) throw BadInput("factorial of negative quantum integer");
  PiScalar r = PiScalar::from_int(1);
  for (long k = 2; k <= a; ++k) r *= quantum_integer(k, s, p);
  return r;
}

PiScalar quantum_binomial(long a, long t, long s, int p) {
  if (t < 0 || t > a) return PiScalar::zero();
  PiScalar num = quantum_factorial(a, s, p);
  PiScalar den = quantum_factorial(t, s, p) * quantum_factorial(a - t, s, p);
  auto divide = [](const RatFunc& n, const RatFunc& d) {
    if (!n.is_laurent() || !d.is_laurent())
      throw InexactDivision("quantum binomial operands are not Laurent");
    auto quo = Laurent::div_exact(n.num(), d.num());
    if (!quo) throw InexactDivision("quantum binomial division left a remainder");
    return RatFunc(*quo);
  };
  return {divide(num.plus, den.plus), divide(num.minus, den.minus)};
}

}  // namespace qcover
