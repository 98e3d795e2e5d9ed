#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace tanglecalc {

using BigInt = boost::multiprecision::cpp_int;

/// Marked tangle fraction p/q in lowest terms. Canonical representation keeps
/// q >= 0, pushes the sign into p, and uses 1/0 as the single infinite value.
class Fraction {
public:
  Fraction() : p_(0), q_(1) {}  // the zero tangle

  /// Reduce an arbitrary pair to canonical form. Throws ZeroZeroError on 0/0;
  /// every other q = 0 input maps to the canonical infinity 1/0.
  static Fraction reduce(BigInt p, BigInt q);

  static Fraction infinity() { return Fraction(1, 0, Raw{}); }
  static Fraction integer(BigInt n) { return Fraction(std::move(n), 1, Raw{}); }

  const BigInt& num() const noexcept { return p_; }
  const BigInt& den() const noexcept { return q_; }

  bool isInfinite() const noexcept { return q_ == 0; }
  bool isZero() const noexcept { return p_ == 0 && q_ != 0; }
  bool isInteger() const noexcept { return q_ == 1; }
  bool isHalfInteger() const noexcept { return q_ == 2; }

  /// Rendered as "inf", "n", or "p/q".
  std::string str() const;

  friend bool operator==(const Fraction& a, const Fraction& b) noexcept {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend bool operator!=(const Fraction& a, const Fraction& b) noexcept { return !(a == b); }

  /// Total order used for canonical sequences: finite values by magnitude,
  /// with the infinite fraction greater than every finite one.
  friend bool operator<(const Fraction& a, const Fraction& b) noexcept {
    if (a.isInfinite()) return false;
    if (b.isInfinite()) return true;
    return a.p_ * b.q_ < b.p_ * a.q_;
  }

private:
  struct Raw {};
  Fraction(BigInt p, BigInt q, Raw) : p_(std::move(p)), q_(std::move(q)) {}

  BigInt p_;
  BigInt q_;
};

/// Quarter-turn action on fractions: f -> -1/f, exchanging 0 and infinity.
Fraction rotateFraction(const Fraction& a);

/// Mirror image: f -> -f (infinity is fixed).
Fraction mirrorFraction(const Fraction& a);

/// Horizontal twist absorption: p/q -> (p + n*q)/q; infinity absorbs every twist.
Fraction addInteger(const Fraction& a, const BigInt& n);

/// Exact sum/difference of fractions; an infinite operand makes the result infinite.
Fraction addFractions(const Fraction& a, const Fraction& b);
Fraction subFractions(const Fraction& a, const Fraction& b);

/// floor(a) as an integer; throws InfiniteInputError on infinity.
BigInt floorFraction(const Fraction& a);

/// Fractional part a - floor(a), always in [0, 1).
Fraction fractionalPart(const Fraction& a);

/// True when a and b differ by an integer (equivalence of marked tangles under
/// horizontal twist count); the infinite fraction is equivalent only to itself.
bool markedEquivalent(const Fraction& a, const Fraction& b);

/// Euclidean continued fraction [a0; a1, ..., ak] with ai >= 1 for i >= 1,
/// evaluating back to a exactly. Throws InfiniteInputError on infinity.
std::vector<BigInt> continuedFraction(const Fraction& a);

/// Minimal intersection count of the boundary compressing disk with the
/// vertical boundary circle: 2*q. Throws InfiniteInputError on infinity.
BigInt compressingDiskIntersections(const Fraction& a);

/// Two-bridge classification of the numerator closure of the p/q tangle.
struct TwoBridgeForm {
  enum class Kind { Unknot, Unlink, Generic };

  Kind kind = Kind::Unknot;
  BigInt p = 0;       // bridge number parameter, >= 2 when Generic
  BigInt q = 0;       // companion in [0, p), coprime to p, when Generic
  bool torus = false; // q = +-1 (mod p); always false for Unknot/Unlink

  bool isUnknot() const noexcept { return kind == Kind::Unknot; }
  bool isUnlink() const noexcept { return kind == Kind::Unlink; }
  std::string str() const;
};

/// p = 0 gives the two-component unlink, |p| = 1 the unknot, otherwise the
/// two-bridge link b(|p|, q mod |p|) with the torus flag set iff q = +-1 (mod |p|).
TwoBridgeForm twoBridgeClassify(const Fraction& a);

}  // namespace tanglecalc
