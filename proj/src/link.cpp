#include "tanglecalc/link.hpp"

#include "tanglecalc/errors.hpp"
#include "tanglecalc/rewrite.hpp"
#include "tanglecalc/validate.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace tanglecalc {

namespace {

template <class... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;

bool lexLess(const std::vector<Fraction>& a, const std::vector<Fraction>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Fraction> mirrored(const std::vector<Fraction>& entries) {
  std::vector<Fraction> out;
  out.reserve(entries.size());
  for (const Fraction& f : entries) out.push_back(mirrorFraction(f));
  return out;
}

/// Fold integer entries into a neighbor: the fractional-part sequence and the
/// total sum are unchanged, so the link is the same.
std::vector<Fraction> foldIntegers(std::vector<Fraction> entries) {
  for (bool again = true; again && entries.size() > 1;) {
    again = false;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (!entries[i].isInteger()) continue;
      std::size_t neighbor = i > 0 ? i - 1 : 1;
      entries[neighbor] = addFractions(entries[neighbor], entries[i]);
      entries.erase(entries.begin() + static_cast<std::ptrdiff_t>(i));
      again = true;
      break;
    }
  }
  return entries;
}

/// Canonical form of arbitrary finite entries: integers folded first.
MontesinosForm canonFolded(const std::vector<Fraction>& entries) {
  return canonMontesinos(foldIntegers(entries));
}

/// gcd(a, b) together with x, y solving a*x + b*y = gcd.
BigInt extendedGcd(BigInt a, BigInt b, BigInt& x, BigInt& y) {
  BigInt x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    BigInt q = a / b;
    BigInt r = a - q * b;
    a = std::move(b);
    b = std::move(r);
    BigInt nx = x0 - q * x1;
    x0 = std::move(x1);
    x1 = std::move(nx);
    BigInt ny = y0 - q * y1;
    y0 = std::move(y1);
    y1 = std::move(ny);
  }
  x = std::move(x0);
  y = std::move(y0);
  if (a < 0) {  // truncated division can leave a negative gcd
    a = -a;
    x = -x;
    y = -y;
  }
  return a;
}

const char* exceptionNames[4] = {
    "L(1/2, 1/2, -1/2, -1/2)",
    "L(2/3, -1/3, -1/3)",
    "L(1/2, -1/4, -1/4)",
    "L(1/2, -1/3, -1/6)",
};

std::vector<Fraction> fractions(std::initializer_list<std::pair<int, int>> list) {
  std::vector<Fraction> out;
  for (auto [p, q] : list) out.push_back(Fraction::reduce(BigInt(p), BigInt(q)));
  return out;
}

const std::vector<Fraction>& exceptionEntries(int i) {
  static const std::array<std::vector<Fraction>, 4> entries = {
      fractions({{1, 2}, {1, 2}, {-1, 2}, {-1, 2}}),
      fractions({{2, 3}, {-1, 3}, {-1, 3}}),
      fractions({{1, 2}, {-1, 4}, {-1, 4}}),
      fractions({{1, 2}, {-1, 3}, {-1, 6}}),
  };
  return entries[static_cast<std::size_t>(i)];
}

LinkReport reportFromTwoBridge(const TwoBridgeForm& form) {
  LinkReport report;
  switch (form.kind) {
    case TwoBridgeForm::Kind::Unknot:
      report.status = Status::NonHyperbolic;
      report.reasons.push_back(ReasonUnknotLink{});
      report.prime = false;
      break;
    case TwoBridgeForm::Kind::Unlink:
      report.status = Status::NonHyperbolic;
      report.reasons.push_back(ReasonSplitLink{});
      report.prime = false;
      report.split = true;
      break;
    case TwoBridgeForm::Kind::Generic:
      if (form.torus) {
        report.status = Status::NonHyperbolic;
        report.reasons.push_back(ReasonTwoBridgeTorus{form});
      }
      break;
  }
  return report;
}

}  // namespace

MontesinosForm canonMontesinos(const std::vector<Fraction>& entries) {
  if (entries.empty()) throw MontesinosDenominatorError("(no entries)");
  MontesinosForm form;
  form.e = Fraction();
  std::vector<Fraction> parts;
  parts.reserve(entries.size());
  for (const Fraction& r : entries) {
    if (r.isInfinite() || r.den() < 2) throw MontesinosDenominatorError(r.str());
    form.e = addFractions(form.e, r);
    parts.push_back(fractionalPart(r));
  }
  // Lexicographically minimal sequence over all rotations and reversals.
  std::vector<Fraction> best = parts;
  std::vector<Fraction> reversed(parts.rbegin(), parts.rend());
  for (const std::vector<Fraction>* base : {&parts, &reversed}) {
    for (std::size_t shift = 0; shift < base->size(); ++shift) {
      std::vector<Fraction> candidate;
      candidate.reserve(base->size());
      for (std::size_t i = 0; i < base->size(); ++i) {
        candidate.push_back((*base)[(shift + i) % base->size()]);
      }
      if (lexLess(candidate, best)) best = std::move(candidate);
    }
  }
  form.parts = std::move(best);
  form.n = static_cast<int>(form.parts.size());
  return form;
}

std::optional<TorusFamily> isTorusMontesinos(const MontesinosForm& form) {
  // One-parameter family: two opposite half twists and a 1/q entry; its total
  // sum is exactly 1/q, which pins the candidate parameter.
  if (!form.e.isInfinite() && !form.e.isZero() &&
      (form.e.num() == 1 || form.e.num() == -1)) {
    BigInt q = form.e.num() * form.e.den();
    std::vector<Fraction> reference = fractions({{1, 2}, {-1, 2}});
    reference.push_back(Fraction::reduce(1, q));
    if (canonFolded(reference) == form) return TorusFamily{"A", q.str()};
  }
  struct Sporadic {
    const char* id;
    std::vector<Fraction> entries;
  };
  static const std::array<Sporadic, 3> sporadics = {{
      {"B", fractions({{1, 4}, {-1, 2}, {1, 3}})},
      {"(3,4)", fractions({{-1, 3}, {-1, 2}, {1, 3}})},
      {"(3,5)", fractions({{-1, 5}, {1, 2}, {-1, 3}})},
  }};
  for (const Sporadic& s : sporadics) {
    if (canonFolded(s.entries) == form || canonFolded(mirrored(s.entries)) == form) {
      return TorusFamily{s.id, ""};
    }
  }
  return std::nullopt;
}

TwoBridgeForm twoBridgeOfPair(const Fraction& r1, const Fraction& r2) {
  if (r1.isInfinite() || r2.isInfinite()) throw InfiniteInputError("two-bridge join");
  const BigInt &p1 = r1.num(), &q1 = r1.den();
  const BigInt &p2 = r2.num(), &q2 = r2.den();
  BigInt p = p1 * q2 + p2 * q1;
  if (p < 0) p = -p;
  TwoBridgeForm form;
  if (p == 0) {
    form.kind = TwoBridgeForm::Kind::Unlink;
    return form;
  }
  if (p == 1) {
    form.kind = TwoBridgeForm::Kind::Unknot;
    return form;
  }
  // Companion parameter: with q1*b - p1*a = 1, the closure is b(p, q2*b + p2*a).
  BigInt x, y;
  extendedGcd(q1, p1, x, y);  // q1*x + p1*y = 1 (reduced fractions are coprime)
  BigInt b = x, a = -y;
  BigInt q = (q2 * b + p2 * a) % p;
  if (q < 0) q += p;
  form.kind = TwoBridgeForm::Kind::Generic;
  form.p = p;
  form.q = q;
  form.torus = (q == 1) || (q == p - 1);
  return form;
}

LinkReport classifyMontesinos(const std::vector<Fraction>& entries) {
  if (entries.empty()) throw MontesinosDenominatorError("(no entries)");
  for (const Fraction& r : entries) {
    if (r.isInfinite()) throw MontesinosDenominatorError(r.str());
  }
  std::vector<Fraction> folded = foldIntegers(entries);
  if (folded.size() == 1) return reportFromTwoBridge(twoBridgeClassify(folded[0]));

  MontesinosForm form = canonMontesinos(folded);
  LinkReport report;
  report.canonicalMontesinos = form;

  // Exceptional presentations (and their mirrors) are matched first; they are
  // the non-hyperbolic, non-torus cases.
  for (int i = 0; i < 4; ++i) {
    const std::vector<Fraction>& x = exceptionEntries(i);
    if (canonFolded(x) == form || canonFolded(mirrored(x)) == form) {
      report.status = Status::NonHyperbolic;
      report.reasons.push_back(ReasonOertelException{exceptionNames[i]});
      return report;
    }
  }

  if (std::optional<TorusFamily> family = isTorusMontesinos(form)) {
    report.status = Status::NonHyperbolic;
    report.reasons.push_back(ReasonMontesinosTorus{family->family, family->parameter});
    return report;
  }

  if (form.n <= 2) {
    LinkReport twoBridge = reportFromTwoBridge(twoBridgeOfPair(folded[0], folded[1]));
    twoBridge.canonicalMontesinos = form;
    return twoBridge;
  }
  return report;  // length >= 3, no torus form, no exception: hyperbolic
}

LinkReport classifyLargeLink(const ExprPtr& t1, const ExprPtr& t2, const GluingMap& g) {
  requireValid(t1);
  requireValid(t2);
  if (isRationalExpr(t1)) throw NotLargeLinkError("first tangle is rational");
  if (isRationalExpr(t2)) throw NotLargeLinkError("second tangle is rational");

  ExprPtr n1 = normalizeCore(t1);
  ExprPtr n2 = normalizeCore(g.mirrorSecond ? mirrorExpr(t2) : t2);

  LinkReport report;  // prime and non-split unconditionally
  if (maxQ(n1) >= 2) report.reasons.push_back(ReasonContainsQ2{"side1"});
  if (maxQ(n2) >= 2) report.reasons.push_back(ReasonContainsQ2{"side2"});

  // Ring chains meeting the gluing sphere from both sides combine; which axes
  // meet depends on the boundary identification.
  std::array<std::pair<Axis, Axis>, 2> pairs =
      g.axisMatch == AxisMatch::Identity
          ? std::array<std::pair<Axis, Axis>, 2>{{{Axis::Vertical, Axis::Vertical},
                                                  {Axis::Horizontal, Axis::Horizontal}}}
          : std::array<std::pair<Axis, Axis>, 2>{{{Axis::Vertical, Axis::Horizontal},
                                                  {Axis::Horizontal, Axis::Vertical}}};
  for (auto [a1, a2] : pairs) {
    int m1 = qsplit(n1, a1).count;
    int m2 = qsplit(n2, a2).count;
    if (m1 + m2 >= 2) report.reasons.push_back(ReasonContainsQ2{"across", m1, m2});
  }

  report.status = report.reasons.empty() ? Status::Hyperbolic : Status::NonHyperbolic;
  return report;
}

LinkReport classifyLink(const LinkExpr& link) {
  return std::visit(
      Overload{
          [](const NumeratorClosure& n) {
            requireValid(n.tangle);
            ExprPtr normal = normalizeCore(n.tangle);
            const auto* leaf = asRational(normal);
            if (!leaf) {
              throw UnsupportedClosureError(
                  "numerator closure is supported for rational tangles only; "
                  "use M(...) for Montesinos links or glue(...) for larger links");
            }
            return reportFromTwoBridge(twoBridgeClassify(leaf->value));
          },
          [](const MontesinosLink& m) { return classifyMontesinos(m.entries); },
          [](const GlueLink& gl) { return classifyLargeLink(gl.first, gl.second, gl.gluing); },
      },
      link);
}

}  // namespace tanglecalc
