#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tanglecalc/errors.hpp"
#include "tanglecalc/expr.hpp"
#include "tanglecalc/fraction.hpp"
#include "tanglecalc/link.hpp"
#include "tanglecalc/parse.hpp"
#include "tanglecalc/rewrite.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace tanglecalc;

namespace {

Fraction fr(long long p, long long q) { return Fraction::reduce(BigInt(p), BigInt(q)); }

std::vector<Fraction> entries(std::initializer_list<std::pair<long long, long long>> list) {
  std::vector<Fraction> out;
  for (auto [p, q] : list) out.push_back(fr(p, q));
  return out;
}

std::vector<Fraction> mirrorAll(std::vector<Fraction> es) {
  for (Fraction& f : es) f = mirrorFraction(f);
  return es;
}

template <class R>
const R* findReason(const LinkReport& report) {
  for (const LinkReason& reason : report.reasons) {
    if (const R* r = std::get_if<R>(&reason)) return r;
  }
  return nullptr;
}

std::vector<std::string> partStrings(const MontesinosForm& form) {
  std::vector<std::string> out;
  for (const Fraction& f : form.parts) out.push_back(f.str());
  return out;
}

}  // namespace

TEST_CASE("canonical Montesinos form: fractional parts, rotation, reversal") {
  // All-half-twist presentation: every fractional part is 1/2, sum is zero.
  MontesinosForm a = canonMontesinos(entries({{1, 2}, {1, 2}, {-1, 2}, {-1, 2}}));
  CHECK(a.n == 4);
  CHECK(a.e == fr(0, 1));
  CHECK(partStrings(a) == std::vector<std::string>{"1/2", "1/2", "1/2", "1/2"});

  // Negative entries contribute their fractional part in (0,1).
  MontesinosForm b = canonMontesinos(entries({{2, 3}, {-1, 3}, {-1, 3}}));
  CHECK(b.n == 3);
  CHECK(b.e == fr(0, 1));
  CHECK(partStrings(b) == std::vector<std::string>{"2/3", "2/3", "2/3"});

  // The stored sequence is the lexicographic minimum over rotations/reversals.
  MontesinosForm c = canonMontesinos(entries({{1, 2}, {-1, 2}, {1, 3}}));
  CHECK(c.e == fr(1, 3));
  CHECK(partStrings(c) == std::vector<std::string>{"1/3", "1/2", "1/2"});

  MontesinosForm d = canonMontesinos(entries({{1, 3}, {-1, 2}, {1, 4}}));
  CHECK(partStrings(d) == std::vector<std::string>{"1/4", "1/3", "1/2"});
  CHECK(d.e == fr(1, 12));
}

TEST_CASE("canonical form is invariant under rotation and reversal of the input") {
  std::mt19937 rng(20517);
  std::uniform_int_distribution<int> lenDist(2, 6);
  std::uniform_int_distribution<long long> numDist(-20, 20);
  std::uniform_int_distribution<long long> denDist(2, 9);
  for (int trial = 0; trial < 300; ++trial) {
    int n = lenDist(rng);
    std::vector<Fraction> es;
    while (static_cast<int>(es.size()) < n) {
      long long p = numDist(rng), q = denDist(rng);
      if (p % q == 0) continue;  // keep the reduced denominator >= 2
      es.push_back(fr(p, q));
    }
    MontesinosForm base = canonMontesinos(es);

    std::uniform_int_distribution<int> shiftDist(0, n - 1);
    int shift = shiftDist(rng);
    std::vector<Fraction> rotated;
    for (int i = 0; i < n; ++i) rotated.push_back(es[(shift + i) % n]);
    CHECK(canonMontesinos(rotated) == base);

    std::vector<Fraction> reversed(es.rbegin(), es.rend());
    CHECK(canonMontesinos(reversed) == base);
  }
}

TEST_CASE("canonical Montesinos form rejects integers and infinity") {
  CHECK_THROWS_AS(canonMontesinos(entries({{1, 2}, {3, 1}})), MontesinosDenominatorError);
  CHECK_THROWS_AS(canonMontesinos(entries({{0, 1}})), MontesinosDenominatorError);
  CHECK_THROWS_AS(canonMontesinos({Fraction::infinity()}), MontesinosDenominatorError);
  CHECK_THROWS_AS(canonMontesinos({}), MontesinosDenominatorError);
}

TEST_CASE("torus detection: one-parameter family") {
  // Two opposite half twists plus 1/q; the sum pins q exactly.
  for (long long q : {2, 3, 5, 12, -2, -3, -7}) {
    std::vector<Fraction> es = entries({{1, 2}, {-1, 2}});
    es.push_back(fr(1, q));
    auto family = isTorusMontesinos(canonMontesinos(es));
    REQUIRE(family.has_value());
    CHECK(family->family == "A");
    CHECK(family->parameter == std::to_string(q));
  }
  // Same fractional parts but the wrong sum is not in the family.
  auto off = isTorusMontesinos(canonMontesinos(entries({{1, 2}, {1, 2}, {1, 3}})));
  CHECK((!off.has_value() || off->family != "A"));
}

TEST_CASE("torus detection: sporadic forms and their mirrors") {
  auto b = isTorusMontesinos(canonMontesinos(entries({{1, 4}, {-1, 2}, {1, 3}})));
  REQUIRE(b.has_value());
  CHECK(b->family == "B");
  auto bm = isTorusMontesinos(canonMontesinos(entries({{-1, 4}, {1, 2}, {-1, 3}})));
  REQUIRE(bm.has_value());
  CHECK(bm->family == "B");

  auto t34 = isTorusMontesinos(canonMontesinos(entries({{-1, 3}, {-1, 2}, {1, 3}})));
  REQUIRE(t34.has_value());
  CHECK(t34->family == "(3,4)");
  auto t34m = isTorusMontesinos(canonMontesinos(entries({{1, 3}, {1, 2}, {-1, 3}})));
  REQUIRE(t34m.has_value());
  CHECK(t34m->family == "(3,4)");

  auto t35 = isTorusMontesinos(canonMontesinos(entries({{-1, 5}, {1, 2}, {-1, 3}})));
  REQUIRE(t35.has_value());
  CHECK(t35->family == "(3,5)");
  auto t35m = isTorusMontesinos(canonMontesinos(entries({{1, 5}, {-1, 2}, {1, 3}})));
  REQUIRE(t35m.has_value());
  CHECK(t35m->family == "(3,5)");

  // Near miss: sum 1/42 gates the family test but the parts do not match.
  auto near = isTorusMontesinos(canonMontesinos(entries({{1, 2}, {-1, 3}, {-1, 7}})));
  CHECK(!near.has_value());
}

TEST_CASE("two-bridge join of a fraction pair") {
  TwoBridgeForm hopfish = twoBridgeOfPair(fr(1, 2), fr(1, 2));
  CHECK(hopfish.kind == TwoBridgeForm::Kind::Generic);
  CHECK(hopfish.p == 4);
  CHECK(hopfish.q == 3);
  CHECK(hopfish.torus);

  TwoBridgeForm fiveTwo = twoBridgeOfPair(fr(1, 3), fr(1, 2));
  CHECK(fiveTwo.p == 5);
  CHECK(fiveTwo.q == 4);
  CHECK(fiveTwo.torus);

  TwoBridgeForm sixFive = twoBridgeOfPair(fr(1, 2), fr(1, 4));
  CHECK(sixFive.p == 6);
  CHECK(sixFive.q == 5);
  CHECK(sixFive.torus);

  TwoBridgeForm eleven = twoBridgeOfPair(fr(2, 5), fr(1, 3));
  CHECK(eleven.p == 11);
  CHECK(eleven.q == 5);
  CHECK(!eleven.torus);

  CHECK(twoBridgeOfPair(fr(1, 2), fr(-1, 3)).kind == TwoBridgeForm::Kind::Unknot);
  CHECK(twoBridgeOfPair(fr(1, 3), fr(-1, 3)).kind == TwoBridgeForm::Kind::Unlink);
  CHECK_THROWS_AS(twoBridgeOfPair(Fraction::infinity(), fr(1, 2)), InfiniteInputError);
}

TEST_CASE("the two-bridge companion is well defined up to the torus test") {
  // b(p, q) and b(p, q') describe the same link when q' = q^{-1} mod p.
  // The reported companion is blind to mirroring (like the single-fraction
  // classifier, which reduces q into [0, p)); the torus flag is invariant.
  std::mt19937 rng(90124);
  std::uniform_int_distribution<long long> numDist(-9, 9);
  std::uniform_int_distribution<long long> denDist(2, 9);
  int generic = 0;
  for (int trial = 0; trial < 400; ++trial) {
    long long p1 = numDist(rng), q1 = denDist(rng);
    long long p2 = numDist(rng), q2 = denDist(rng);
    if (p1 % q1 == 0 || p2 % q2 == 0) continue;
    TwoBridgeForm ab = twoBridgeOfPair(fr(p1, q1), fr(p2, q2));
    TwoBridgeForm ba = twoBridgeOfPair(fr(p2, q2), fr(p1, q1));
    TwoBridgeForm mirror = twoBridgeOfPair(fr(-p1, q1), fr(-p2, q2));
    CHECK(ab.kind == ba.kind);
    CHECK(ab.kind == mirror.kind);
    if (ab.kind == TwoBridgeForm::Kind::Generic) {
      ++generic;
      CHECK(ab.p == ba.p);
      CHECK(ab.p == mirror.p);
      CHECK(ab.torus == ba.torus);
      CHECK(ab.torus == mirror.torus);
      // Swapping the pair gives q or its inverse mod p; mirroring both
      // fractions reproduces q exactly.
      auto inOrbit = [&](const BigInt& x) {
        return x == ab.q || (ab.q * x) % ab.p == 1;
      };
      CHECK(inOrbit(ba.q));
      CHECK(mirror.q == ab.q);
    }
  }
  CHECK(generic >= 200);
}

TEST_CASE("Montesinos classification: exceptional presentations") {
  const std::vector<std::vector<Fraction>> exceptions = {
      entries({{1, 2}, {1, 2}, {-1, 2}, {-1, 2}}),
      entries({{2, 3}, {-1, 3}, {-1, 3}}),
      entries({{1, 2}, {-1, 4}, {-1, 4}}),
      entries({{1, 2}, {-1, 3}, {-1, 6}}),
  };
  for (const auto& es : exceptions) {
    for (const auto& variant : {es, mirrorAll(es)}) {
      LinkReport report = classifyMontesinos(variant);
      CHECK(report.status == Status::NonHyperbolic);
      CHECK(findReason<ReasonOertelException>(report) != nullptr);
      CHECK(report.prime);
      CHECK(!report.split);
      CHECK(report.canonicalMontesinos.has_value());
    }
  }
  LinkReport named = classifyMontesinos(entries({{2, 3}, {-1, 3}, {-1, 3}}));
  REQUIRE(findReason<ReasonOertelException>(named) != nullptr);
  CHECK(findReason<ReasonOertelException>(named)->which == "L(2/3, -1/3, -1/3)");
}

TEST_CASE("Montesinos classification: torus forms") {
  LinkReport a5 = classifyMontesinos(entries({{1, 2}, {-1, 2}, {1, 5}}));
  CHECK(a5.status == Status::NonHyperbolic);
  REQUIRE(findReason<ReasonMontesinosTorus>(a5) != nullptr);
  CHECK(findReason<ReasonMontesinosTorus>(a5)->family == "A");
  CHECK(findReason<ReasonMontesinosTorus>(a5)->parameter == "5");

  LinkReport b = classifyMontesinos(entries({{1, 4}, {-1, 2}, {1, 3}}));
  CHECK(b.status == Status::NonHyperbolic);
  REQUIRE(findReason<ReasonMontesinosTorus>(b) != nullptr);
  CHECK(findReason<ReasonMontesinosTorus>(b)->family == "B");

  // Integer entries fold away first; the half-twist pair plus one full twist
  // is still in the one-parameter torus family.
  for (long long unit : {1LL, -1LL}) {
    LinkReport folded = classifyMontesinos(
        {fr(1, 2), fr(-1, 2), Fraction::integer(BigInt(unit))});
    CHECK(folded.status == Status::NonHyperbolic);
    REQUIRE(findReason<ReasonMontesinosTorus>(folded) != nullptr);
    CHECK(findReason<ReasonMontesinosTorus>(folded)->family == "A");
    CHECK(findReason<ReasonMontesinosTorus>(folded)->parameter == std::to_string(unit));
  }
}

TEST_CASE("Montesinos classification: length-two joins delegate to two-bridge") {
  // Two half twists with equal sign: the (2,4) torus link, caught as family A.
  LinkReport half = classifyMontesinos(entries({{1, 2}, {1, 2}}));
  CHECK(half.status == Status::NonHyperbolic);
  CHECK(findReason<ReasonMontesinosTorus>(half) != nullptr);

  LinkReport eleven = classifyMontesinos(entries({{2, 5}, {1, 3}}));
  CHECK(eleven.status == Status::Hyperbolic);
  CHECK(eleven.reasons.empty());
  CHECK(eleven.prime);
  REQUIRE(eleven.canonicalMontesinos.has_value());
  CHECK(eleven.canonicalMontesinos->e == fr(11, 15));

  LinkReport unknot = classifyMontesinos(entries({{1, 2}, {-1, 3}}));
  CHECK(unknot.status == Status::NonHyperbolic);
  CHECK(findReason<ReasonUnknotLink>(unknot) != nullptr);
  CHECK(!unknot.prime);
  CHECK(!unknot.split);

  LinkReport unlink = classifyMontesinos(entries({{1, 3}, {-1, 3}}));
  CHECK(unlink.status == Status::NonHyperbolic);
  CHECK(findReason<ReasonSplitLink>(unlink) != nullptr);
  CHECK(!unlink.prime);
  CHECK(unlink.split);

  // A single entry after folding: 1/2 + 1 = 3/2 closes to the trefoil.
  LinkReport trefoil = classifyMontesinos({fr(1, 2), Fraction::integer(1)});
  CHECK(trefoil.status == Status::NonHyperbolic);
  REQUIRE(findReason<ReasonTwoBridgeTorus>(trefoil) != nullptr);
  CHECK(findReason<ReasonTwoBridgeTorus>(trefoil)->form.p == 3);
  CHECK(!trefoil.canonicalMontesinos.has_value());
}

TEST_CASE("Montesinos classification: infinite entries are rejected") {
  CHECK_THROWS_AS(classifyMontesinos({Fraction::infinity(), fr(1, 2)}),
                  MontesinosDenominatorError);
  CHECK_THROWS_AS(classifyMontesinos({}), MontesinosDenominatorError);
}

TEST_CASE("complete torus sweep across the one-parameter family") {
  for (long long q = -20; q <= 20; ++q) {
    if (q == 0) continue;
    std::vector<Fraction> es = entries({{1, 2}, {-1, 2}});
    es.push_back(fr(1, q));
    LinkReport report = classifyMontesinos(es);
    CAPTURE(q);
    CHECK(report.status == Status::NonHyperbolic);
    if (q == 1 || q == -1) continue;  // folds to length two, still the family
    REQUIRE(findReason<ReasonMontesinosTorus>(report) != nullptr);
    CHECK(findReason<ReasonMontesinosTorus>(report)->parameter == std::to_string(q));
  }
}

TEST_CASE("perturbed family: non-hyperbolic outcomes are isolated") {
  // Replacing one half twist by a third twist leaves only finitely many
  // non-hyperbolic members; every hit has an identifiable reason.
  const std::set<long long> expectedHits = {1, 2, -3, 4, 5, 6};
  for (long long q = -20; q <= 20; ++q) {
    if (q == 0) continue;
    std::vector<Fraction> es = entries({{1, 3}, {-1, 2}});
    es.push_back(fr(1, q));
    LinkReport report = classifyMontesinos(es);
    CAPTURE(q);
    if (expectedHits.count(q)) {
      CHECK(report.status == Status::NonHyperbolic);
    } else {
      CHECK(report.status == Status::Hyperbolic);
      CHECK(report.reasons.empty());
    }
  }
  // Pin the reason kind for each hit.
  CHECK(findReason<ReasonTwoBridgeTorus>(
            classifyMontesinos({fr(1, 3), fr(-1, 2), fr(1, 1)})) != nullptr);
  LinkReport q2 = classifyMontesinos(entries({{1, 3}, {-1, 2}, {1, 2}}));
  const auto* a = findReason<ReasonMontesinosTorus>(q2);
  REQUIRE(a != nullptr);
  CHECK(a->family == "A");
  CHECK(a->parameter == "3");
  LinkReport qm3 = classifyMontesinos(entries({{1, 3}, {-1, 2}, {-1, 3}}));
  const auto* t34 = findReason<ReasonMontesinosTorus>(qm3);
  REQUIRE(t34 != nullptr);
  CHECK(t34->family == "(3,4)");
  LinkReport q4 = classifyMontesinos(entries({{1, 3}, {-1, 2}, {1, 4}}));
  const auto* b = findReason<ReasonMontesinosTorus>(q4);
  REQUIRE(b != nullptr);
  CHECK(b->family == "B");
  LinkReport q5 = classifyMontesinos(entries({{1, 3}, {-1, 2}, {1, 5}}));
  const auto* t35 = findReason<ReasonMontesinosTorus>(q5);
  REQUIRE(t35 != nullptr);
  CHECK(t35->family == "(3,5)");
  CHECK(findReason<ReasonOertelException>(
            classifyMontesinos(entries({{1, 3}, {-1, 2}, {1, 6}}))) != nullptr);
}

TEST_CASE("near miss: sum 1/42 with three distinct odd twists is hyperbolic") {
  LinkReport report = classifyMontesinos(entries({{1, 2}, {-1, 3}, {-1, 7}}));
  CHECK(report.status == Status::Hyperbolic);
  CHECK(report.reasons.empty());
  REQUIRE(report.canonicalMontesinos.has_value());
  CHECK(report.canonicalMontesinos->e == fr(1, 42));
}

TEST_CASE("Montesinos status is a mirror invariant") {
  std::mt19937 rng(76001);
  std::uniform_int_distribution<int> lenDist(2, 5);
  std::uniform_int_distribution<long long> numDist(-9, 9);
  std::uniform_int_distribution<long long> denDist(2, 7);
  std::uniform_int_distribution<int> plantDist(0, 3);
  int nonHyperbolic = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<Fraction> es;
    if (plantDist(rng) == 0) {
      es = entries({{1, 2}, {-1, 2}});
      es.push_back(fr(1, denDist(rng)));
    } else {
      int n = lenDist(rng);
      while (static_cast<int>(es.size()) < n) {
        long long p = numDist(rng), q = denDist(rng);
        if (p % q == 0) continue;
        es.push_back(fr(p, q));
      }
    }
    LinkReport lhs = classifyMontesinos(es);
    LinkReport rhs = classifyMontesinos(mirrorAll(es));
    CHECK(lhs.status == rhs.status);
    CHECK(lhs.prime == rhs.prime);
    CHECK(lhs.split == rhs.split);
    CHECK((lhs.status == Status::NonHyperbolic) == !lhs.reasons.empty());
    if (lhs.status == Status::NonHyperbolic) ++nonHyperbolic;
  }
  CHECK(nonHyperbolic >= 80);
}

TEST_CASE("glued links: ring chains across the boundary sphere") {
  ExprPtr t1 = parseTangle("Q1 * T[1/3]");
  ExprPtr t2 = parseTangle("Q1 * T[1/4]");
  LinkReport report = classifyLargeLink(t1, t2, GluingMap{AxisMatch::Identity, false});
  CHECK(report.status == Status::NonHyperbolic);
  REQUIRE(report.reasons.size() == 1);
  const auto* across = findReason<ReasonContainsQ2>(report);
  REQUIRE(across != nullptr);
  CHECK(across->location == "across");
  CHECK(across->m1 == 1);
  CHECK(across->m2 == 1);
  CHECK(report.prime);
  CHECK(!report.split);
}

TEST_CASE("glued links: hyperbolic when no chain reaches length two") {
  ExprPtr t1 = parseTangle("T[1/3] + T[1/4]");
  ExprPtr t2 = parseTangle("T[1/5] + T[2/5]");
  LinkReport report = classifyLargeLink(t1, t2, GluingMap{AxisMatch::Identity, false});
  CHECK(report.status == Status::Hyperbolic);
  CHECK(report.reasons.empty());
  CHECK(report.prime);
  CHECK(!report.split);

  // A single ring on one side only is not enough either.
  ExprPtr ringed = parseTangle("Q1 * T[1/3]");
  LinkReport single = classifyLargeLink(ringed, t2, GluingMap{AxisMatch::Identity, false});
  CHECK(single.status == Status::Hyperbolic);
}

TEST_CASE("glued links: a chain of two rings inside one side") {
  ExprPtr t1 = parseTangle("(Q2 * T[1/3]) + T[1/4]");
  ExprPtr t2 = parseTangle("T[1/3] + T[1/4]");
  LinkReport report = classifyLargeLink(t1, t2, GluingMap{AxisMatch::Identity, false});
  CHECK(report.status == Status::NonHyperbolic);
  REQUIRE(report.reasons.size() == 1);
  const auto* side = findReason<ReasonContainsQ2>(report);
  REQUIRE(side != nullptr);
  CHECK(side->location == "side1");

  LinkReport swapped = classifyLargeLink(t2, t1, GluingMap{AxisMatch::Identity, false});
  REQUIRE(findReason<ReasonContainsQ2>(swapped) != nullptr);
  CHECK(findReason<ReasonContainsQ2>(swapped)->location == "side2");

  // At the root, the same rings also pair across the sphere.
  ExprPtr rootRinged = parseTangle("Q2 * T[1/3]");
  LinkReport both = classifyLargeLink(rootRinged, t2, GluingMap{AxisMatch::Identity, false});
  CHECK(both.status == Status::NonHyperbolic);
  CHECK(both.reasons.size() == 2);
  bool sawSide = false, sawAcross = false;
  for (const LinkReason& reason : both.reasons) {
    const auto* r = std::get_if<ReasonContainsQ2>(&reason);
    REQUIRE(r != nullptr);
    if (r->location == "side1") sawSide = true;
    if (r->location == "across") {
      sawAcross = true;
      CHECK(r->m1 == 2);
      CHECK(r->m2 == 0);
    }
  }
  CHECK(sawSide);
  CHECK(sawAcross);
}

TEST_CASE("glued links: the axis identification decides which chains combine") {
  ExprPtr vertical = parseTangle("Q1 * T[1/3]");
  ExprPtr horizontal = parseTangle("rot(Q1) + T[3]");

  LinkReport identity =
      classifyLargeLink(vertical, horizontal, GluingMap{AxisMatch::Identity, false});
  CHECK(identity.status == Status::Hyperbolic);

  LinkReport quarter =
      classifyLargeLink(vertical, horizontal, GluingMap{AxisMatch::Quarter, false});
  CHECK(quarter.status == Status::NonHyperbolic);
  REQUIRE(quarter.reasons.size() == 1);
  const auto* across = findReason<ReasonContainsQ2>(quarter);
  REQUIRE(across != nullptr);
  CHECK(across->location == "across");
  CHECK(across->m1 + across->m2 == 2);
}

TEST_CASE("glued links: mirroring one side does not change the outcome") {
  std::mt19937 rng(66210);
  const std::vector<std::string> sides = {
      "Q1 * T[1/3]", "T[1/3] + T[1/4]", "rot(Q1) + T[3]",
      "(Q2 * T[1/3]) + T[1/4]", "Q1 * (T[1/3] + T[1/4])",
  };
  for (const std::string& a : sides) {
    for (const std::string& b : sides) {
      for (AxisMatch axis : {AxisMatch::Identity, AxisMatch::Quarter}) {
        ExprPtr t1 = parseTangle(a);
        ExprPtr t2 = parseTangle(b);
        LinkReport plain = classifyLargeLink(t1, t2, GluingMap{axis, false});
        LinkReport withFlag = classifyLargeLink(t1, t2, GluingMap{axis, true});
        LinkReport preMirrored = classifyLargeLink(t1, mirrorExpr(t2), GluingMap{axis, false});
        CHECK(plain.status == withFlag.status);
        CHECK(withFlag.status == preMirrored.status);
        if (axis == AxisMatch::Identity) {
          LinkReport swapped = classifyLargeLink(t2, t1, GluingMap{axis, false});
          CHECK(swapped.status == plain.status);
        }
      }
    }
  }
}

TEST_CASE("glued links: rational sides are rejected") {
  ExprPtr rational = parseTangle("T[1/2] * T[1/3]");
  ExprPtr big = parseTangle("T[1/3] + T[1/4]");
  CHECK_THROWS_AS(classifyLargeLink(rational, big, GluingMap{}), NotLargeLinkError);
  CHECK_THROWS_AS(classifyLargeLink(big, rational, GluingMap{}), NotLargeLinkError);
}

TEST_CASE("link dispatch: numerator closures of rational tangles") {
  LinkReport trefoil = classifyLink(parseLinkExpr("N(T[3])"));
  CHECK(trefoil.status == Status::NonHyperbolic);
  REQUIRE(findReason<ReasonTwoBridgeTorus>(trefoil) != nullptr);
  CHECK(findReason<ReasonTwoBridgeTorus>(trefoil)->form.p == 3);
  CHECK(findReason<ReasonTwoBridgeTorus>(trefoil)->form.q == 1);

  LinkReport fig8ish = classifyLink(parseLinkExpr("N(T[5/2])"));
  CHECK(fig8ish.status == Status::Hyperbolic);
  CHECK(fig8ish.reasons.empty());

  LinkReport unknot = classifyLink(parseLinkExpr("N(T[inf])"));
  CHECK(unknot.status == Status::NonHyperbolic);
  CHECK(findReason<ReasonUnknotLink>(unknot) != nullptr);
  CHECK(!unknot.prime);

  LinkReport unlink = classifyLink(parseLinkExpr("N(T[0])"));
  CHECK(findReason<ReasonSplitLink>(unlink) != nullptr);
  CHECK(unlink.split);

  CHECK(findReason<ReasonUnknotLink>(classifyLink(parseLinkExpr("N(T[1/5])"))) != nullptr);

  // Closures normalize first: 1/2 stacked on 1/3 is the 1/5 tangle.
  CHECK(findReason<ReasonUnknotLink>(
            classifyLink(parseLinkExpr("N(T[1/2] * T[1/3])"))) != nullptr);
}

TEST_CASE("link dispatch: non-rational closures point at the other constructors") {
  CHECK_THROWS_AS(classifyLink(parseLinkExpr("N(T[1/3] + T[1/4])")), UnsupportedClosureError);
  try {
    classifyLink(parseLinkExpr("N(Q1 * T[1/3])"));
    FAIL("expected UnsupportedClosureError");
  } catch (const UnsupportedClosureError& err) {
    CHECK(std::string(err.what()).find("M(") != std::string::npos);
  }
}

TEST_CASE("link dispatch: Montesinos and glued forms") {
  LinkReport torus = classifyLink(parseLinkExpr("M(1/2, -1/2, 1/3)"));
  CHECK(torus.status == Status::NonHyperbolic);
  REQUIRE(findReason<ReasonMontesinosTorus>(torus) != nullptr);
  CHECK(findReason<ReasonMontesinosTorus>(torus)->parameter == "3");

  LinkReport glued =
      classifyLink(parseLinkExpr("glue(Q1 * T[1/3]; rot(Q1) + T[3]; quarter)"));
  CHECK(glued.status == Status::NonHyperbolic);

  LinkReport hyperbolic =
      classifyLink(parseLinkExpr("glue(T[1/3] + T[1/4]; T[1/5] + T[2/5])"));
  CHECK(hyperbolic.status == Status::Hyperbolic);
}
