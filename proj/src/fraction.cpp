#include "tanglecalc/fraction.hpp"

#include "tanglecalc/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <utility>

namespace tanglecalc {

namespace {

BigInt gcdPositive(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Floor division; cpp_int's operator/ truncates toward zero instead.
BigInt floorDiv(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt modPositive(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

Fraction Fraction::reduce(BigInt p, BigInt q) {
  if (p == 0 && q == 0) throw ZeroZeroError();
  if (q == 0) return infinity();
  if (p == 0) return Fraction();
  BigInt g = gcdPositive(p, q);
  p /= g;
  q /= g;
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return Fraction(std::move(p), std::move(q), Raw{});
}

std::string Fraction::str() const {
  if (isInfinite()) return "inf";
  if (isInteger()) return p_.str();
  return p_.str() + "/" + q_.str();
}

Fraction rotateFraction(const Fraction& a) { return Fraction::reduce(-a.den(), a.num()); }

Fraction mirrorFraction(const Fraction& a) { return Fraction::reduce(-a.num(), a.den()); }

Fraction addInteger(const Fraction& a, const BigInt& n) {
  if (a.isInfinite()) return a;
  return Fraction::reduce(a.num() + n * a.den(), a.den());
}

Fraction addFractions(const Fraction& a, const Fraction& b) {
  if (a.isInfinite() || b.isInfinite()) return Fraction::infinity();
  return Fraction::reduce(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

Fraction subFractions(const Fraction& a, const Fraction& b) {
  if (a.isInfinite() || b.isInfinite()) return Fraction::infinity();
  return Fraction::reduce(a.num() * b.den() - b.num() * a.den(), a.den() * b.den());
}

BigInt floorFraction(const Fraction& a) {
  if (a.isInfinite()) throw InfiniteInputError("floor");
  return floorDiv(a.num(), a.den());
}

Fraction fractionalPart(const Fraction& a) {
  if (a.isInfinite()) throw InfiniteInputError("fractional part");
  return subFractions(a, Fraction::integer(floorFraction(a)));
}

bool markedEquivalent(const Fraction& a, const Fraction& b) {
  if (a.isInfinite() || b.isInfinite()) return a.isInfinite() && b.isInfinite();
  // a - b is an integer iff p1*q2 - p2*q1 is divisible by q1*q2.
  BigInt diff = a.num() * b.den() - b.num() * a.den();
  return diff % (a.den() * b.den()) == 0;
}

std::vector<BigInt> continuedFraction(const Fraction& a) {
  if (a.isInfinite()) throw InfiniteInputError("continued fraction");
  std::vector<BigInt> terms;
  BigInt p = a.num();
  BigInt q = a.den();
  // Euclidean expansion with floor division keeps every partial quotient
  // after the first strictly positive.
  while (true) {
    BigInt a0 = floorDiv(p, q);
    terms.push_back(a0);
    BigInt r = p - a0 * q;
    if (r == 0) break;
    p = std::move(q);
    q = std::move(r);
  }
  return terms;
}

BigInt compressingDiskIntersections(const Fraction& a) {
  if (a.isInfinite()) throw InfiniteInputError("compressing disk intersections");
  return 2 * a.den();
}

std::string TwoBridgeForm::str() const {
  switch (kind) {
    case Kind::Unknot:
      return "unknot";
    case Kind::Unlink:
      return "unlink(2)";
    case Kind::Generic:
      break;
  }
  std::string out = "b(" + p.str() + "," + q.str() + ")";
  if (torus) out += " torus";
  return out;
}

TwoBridgeForm twoBridgeClassify(const Fraction& a) {
  TwoBridgeForm form;
  if (a.isInfinite()) {
    form.kind = TwoBridgeForm::Kind::Unknot;
    return form;
  }
  if (a.num() == 0) {
    form.kind = TwoBridgeForm::Kind::Unlink;
    return form;
  }
  BigInt p = a.num() < 0 ? BigInt(-a.num()) : a.num();
  if (p == 1) {
    form.kind = TwoBridgeForm::Kind::Unknot;
    return form;
  }
  form.kind = TwoBridgeForm::Kind::Generic;
  form.p = p;
  form.q = modPositive(a.den(), p);
  form.torus = (form.q == 1) || (form.q == p - 1);
  return form;
}

}  // namespace tanglecalc
