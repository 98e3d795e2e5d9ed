#pragma once

#include "tanglecalc/classify.hpp"
#include "tanglecalc/expr.hpp"
#include "tanglecalc/fraction.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tanglecalc {

/// Canonical invariant of a Montesinos presentation: the sequence of
/// fractional parts up to cyclic rotation and reversal (stored as the
/// lexicographically minimal representative) together with the exact total sum.
struct MontesinosForm {
  std::vector<Fraction> parts;  // each strictly between 0 and 1, denominator >= 2
  Fraction e;                   // exact sum of the input entries
  int n = 0;                    // number of parts

  friend bool operator==(const MontesinosForm& a, const MontesinosForm& b) {
    return a.parts == b.parts && a.e == b.e;
  }
};

/// Requires every entry to have reduced denominator >= 2 (so no integers and
/// no infinity); throws MontesinosDenominatorError otherwise.
MontesinosForm canonMontesinos(const std::vector<Fraction>& entries);

/// Torus-link families among Montesinos forms: the one-parameter family
/// built from two half twists plus a 1/q entry, and three sporadic forms.
struct TorusFamily {
  std::string family;     // "A", "B", "(3,4)", or "(3,5)"
  std::string parameter;  // q for family A, empty otherwise
};

std::optional<TorusFamily> isTorusMontesinos(const MontesinosForm& form);

// --- Link verdict ------------------------------------------------------------

struct ReasonTwoBridgeTorus {
  TwoBridgeForm form;
};
struct ReasonMontesinosTorus {
  std::string family;
  std::string parameter;
};
struct ReasonOertelException {
  std::string which;  // the matched exceptional presentation
};
struct ReasonContainsQ2 {
  std::string location;  // "side1", "side2", or "across"
  int m1 = 0;            // ring counts contributed by each side ("across" only)
  int m2 = 0;
};
struct ReasonSplitLink {};
struct ReasonUnknotLink {};

using LinkReason = std::variant<ReasonTwoBridgeTorus, ReasonMontesinosTorus,
                                ReasonOertelException, ReasonContainsQ2, ReasonSplitLink,
                                ReasonUnknotLink>;

struct LinkReport {
  Status status = Status::Hyperbolic;
  std::vector<LinkReason> reasons;  // nonempty exactly when NonHyperbolic
  bool prime = true;
  bool split = false;
  std::optional<MontesinosForm> canonicalMontesinos;
};

/// Two-bridge form of the length-2 Montesinos join of r1 and r2 (numerator
/// closure of the two tangles side by side). Both fractions must be finite.
TwoBridgeForm twoBridgeOfPair(const Fraction& r1, const Fraction& r2);

/// Montesinos link classification. Entries may include integers (they fold
/// into a neighbor); infinite entries raise MontesinosDenominatorError.
/// Hyperbolic unless the link is a two-bridge degeneration, a torus link, or
/// one of the four exceptional presentations (mirrors included).
LinkReport classifyMontesinos(const std::vector<Fraction>& entries);

/// Link glued from two non-rational tangles along their boundary sphere.
/// Non-hyperbolic exactly when a ring chain of length >= 2 appears inside
/// either side or across the gluing; always prime and non-split.
/// Throws NotLargeLinkError when a side is rational.
LinkReport classifyLargeLink(const ExprPtr& t1, const ExprPtr& t2, const GluingMap& g);

/// Dispatch on the link expression kind. Numerator closures are supported for
/// rational tangles only (UnsupportedClosureError otherwise).
LinkReport classifyLink(const LinkExpr& link);

}  // namespace tanglecalc
