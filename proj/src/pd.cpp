#include "tanglecalc/pd.hpp"

#include "tanglecalc/errors.hpp"
#include "tanglecalc/fraction.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <variant>

namespace tanglecalc {

namespace {

template <class... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;

/// A strand entering a crossing at port p leaves at the opposite port.
int through(int port) { return (port + 2) % 4; }

/// Diagram under construction: a perfect matching on strand ends. Ends are
/// crossing ports (4c + p, ports numbered counterclockwise with the under
/// strand on ports 0 and 2) or negative ids marking dangling box corners.
class DiagramBuilder {
 public:
  /// Dangling ends of a tangle box: NW, NE, SW, SE.
  struct Box {
    std::array<int, 4> corner;
  };
  enum Corner { NW = 0, NE = 1, SW = 2, SE = 3 };

  int crossingCount() const { return static_cast<int>(signs_.size()); }

  Box buildTangle(const ExprPtr& e) {
    return std::visit(
        Overload{
            [&](const RationalLeaf& leaf) { return rationalBox(leaf.value); },
            [&](const QLeaf& q) {
              Box rings = ringStack(q.index);
              return q.axis == Axis::Vertical ? rings : rotated(rings);
            },
            [&](const SumNode& s) {
              Box a = buildTangle(s.left);
              Box b = buildTangle(s.right);
              splice(a.corner[NE], b.corner[NW]);
              splice(a.corner[SE], b.corner[SW]);
              return Box{{a.corner[NW], b.corner[NE], a.corner[SW], b.corner[SE]}};
            },
            [&](const ProductNode& p) {
              Box a = buildTangle(p.top);
              Box b = buildTangle(p.bottom);
              splice(a.corner[SW], b.corner[NW]);
              splice(a.corner[SE], b.corner[NE]);
              return Box{{a.corner[NW], a.corner[NE], b.corner[SW], b.corner[SE]}};
            },
            [&](const RotNode& r) { return rotated(buildTangle(r.inner)); },
        },
        e->node);
  }

  /// Join top corners and bottom corners, closing the four strand ends.
  void closeNumerator(const Box& b) {
    splice(b.corner[NW], b.corner[NE]);
    splice(b.corner[SW], b.corner[SE]);
  }

  void buildLink(const LinkExpr& link) {
    std::visit(
        Overload{
            [&](const NumeratorClosure& n) { closeNumerator(buildTangle(n.tangle)); },
            [&](const MontesinosLink& m) {
              if (m.entries.empty()) throw MontesinosDenominatorError("(no entries)");
              Box row = rationalBox(m.entries.front());
              for (std::size_t i = 1; i < m.entries.size(); ++i) {
                Box next = rationalBox(m.entries[i]);
                splice(row.corner[NE], next.corner[NW]);
                splice(row.corner[SE], next.corner[SW]);
                row.corner[NE] = next.corner[NE];
                row.corner[SE] = next.corner[SE];
              }
              closeNumerator(row);
            },
            [&](const GlueLink& g) {
              Box a = buildTangle(g.first);
              ExprPtr second =
                  g.gluing.mirrorSecond ? mirrorExpr(g.second) : g.second;
              Box b = buildTangle(second);
              if (g.gluing.axisMatch == AxisMatch::Quarter) b = rotated(b);
              for (int c = 0; c < 4; ++c) splice(a.corner[c], b.corner[c]);
            },
        },
        link);
  }

  /// Number the arcs, orient each component by walking it, and emit tuples
  /// rotated so the incoming under-arc comes first.
  PDCode finish() {
    const int ends = 4 * crossingCount();
    std::vector<int> arcOf(ends, 0);
    int nextArc = 0;
    for (int e = 0; e < ends; ++e) {
      if (arcOf[e] != 0) continue;
      ++nextArc;
      arcOf[e] = nextArc;
      arcOf[mate_.at(e)] = nextArc;
    }

    std::vector<char> seen(ends, 0), incoming(ends, 0);
    int components = freeCircles_;
    for (int e = 0; e < ends; ++e) {
      if (seen[e]) continue;
      ++components;
      int cur = e;
      while (true) {
        seen[cur] = 1;
        int arrival = mate_.at(cur);
        seen[arrival] = 1;
        incoming[arrival] = 1;
        int next = 4 * (arrival / 4) + through(arrival % 4);
        if (next == e) break;
        cur = next;
      }
    }

    PDCode code;
    code.components = components;
    code.signs = signs_;
    for (int c = 0; c < crossingCount(); ++c) {
      int start = incoming[4 * c] ? 0 : 2;
      std::array<int, 4> tuple;
      for (int k = 0; k < 4; ++k) tuple[k] = arcOf[4 * c + (start + k) % 4];
      code.crossings.push_back(tuple);
    }
    return code;
  }

 private:
  int end(int crossing, int port) const { return 4 * crossing + port; }

  int newCrossing(int sign) {
    signs_.push_back(sign);
    return crossingCount() - 1;
  }

  int newCorner() { return -(++cornerCount_); }

  /// A fresh arc between two ends not yet on any arc.
  void join(int a, int b) {
    mate_[a] = b;
    mate_[b] = a;
  }

  /// Redirect the arc dangling at `corner` onto the fresh end `e`.
  void attach(int corner, int e) {
    int other = mate_.at(corner);
    mate_.erase(corner);
    mate_[other] = e;
    mate_[e] = other;
  }

  /// Connect two dangling corners; an arc running directly between them
  /// closes into a crossing-free circle.
  void splice(int x, int y) {
    int a = mate_.at(x);
    int b = mate_.at(y);
    mate_.erase(x);
    mate_.erase(y);
    if (a == y) {
      ++freeCircles_;
      return;
    }
    mate_[a] = b;
    mate_[b] = a;
  }

  Box zeroBox() {
    Box b{{newCorner(), newCorner(), newCorner(), newCorner()}};
    join(b.corner[NW], b.corner[NE]);
    join(b.corner[SW], b.corner[SE]);
    return b;
  }

  Box infinityBox() {
    Box b{{newCorner(), newCorner(), newCorner(), newCorner()}};
    join(b.corner[NW], b.corner[SW]);
    join(b.corner[NE], b.corner[SE]);
    return b;
  }

  static long twistLength(const BigInt& n) {
    BigInt size = n < 0 ? BigInt(-n) : n;
    if (size > 1000000) throw std::runtime_error("diagram too large to export");
    return size.convert_to<long>();
  }

  /// Append |n| half twists on the east side (the two right-hand strand ends
  /// pass through a horizontal chain of crossings).
  Box horizontalTwist(Box t, const BigInt& n) {
    int sign = n > 0 ? 1 : -1;
    long count = twistLength(n);
    int prevTop = 0, prevBottom = 0;
    for (long i = 0; i < count; ++i) {
      int c = newCrossing(sign);
      // Counterclockwise ports: the under strand enters on the west side.
      int wTop = sign > 0 ? 0 : 3, wBottom = sign > 0 ? 1 : 0;
      int eBottom = sign > 0 ? 2 : 1, eTop = sign > 0 ? 3 : 2;
      if (i == 0) {
        attach(t.corner[NE], end(c, wTop));
        attach(t.corner[SE], end(c, wBottom));
      } else {
        join(prevTop, end(c, wTop));
        join(prevBottom, end(c, wBottom));
      }
      prevTop = end(c, eTop);
      prevBottom = end(c, eBottom);
    }
    if (count > 0) {
      t.corner[NE] = newCorner();
      t.corner[SE] = newCorner();
      join(t.corner[NE], prevTop);
      join(t.corner[SE], prevBottom);
    }
    return t;
  }

  /// Append |n| half twists on the south side (vertical chain).
  Box verticalTwist(Box t, const BigInt& n) {
    int sign = n > 0 ? 1 : -1;
    long count = twistLength(n);
    int prevLeft = 0, prevRight = 0;
    for (long i = 0; i < count; ++i) {
      int c = newCrossing(sign);
      int nLeft = sign > 0 ? 0 : 3, sLeft = sign > 0 ? 1 : 0;
      int sRight = sign > 0 ? 2 : 1, nRight = sign > 0 ? 3 : 2;
      if (i == 0) {
        attach(t.corner[SW], end(c, nLeft));
        attach(t.corner[SE], end(c, nRight));
      } else {
        join(prevLeft, end(c, nLeft));
        join(prevRight, end(c, nRight));
      }
      prevLeft = end(c, sLeft);
      prevRight = end(c, sRight);
    }
    if (count > 0) {
      t.corner[SW] = newCorner();
      t.corner[SE] = newCorner();
      join(t.corner[SW], prevLeft);
      join(t.corner[SE], prevRight);
    }
    return t;
  }

  /// Twist chain of the continued fraction [a0; a1, ..., ak]: entries are
  /// consumed innermost first, horizontal for even index, vertical for odd.
  Box rationalBox(const Fraction& f) {
    if (f.isInfinite()) return infinityBox();
    std::vector<BigInt> cf = continuedFraction(f);
    int k = static_cast<int>(cf.size()) - 1;
    Box t = k % 2 == 0 ? zeroBox() : infinityBox();
    for (int j = k; j >= 0; --j) {
      t = j % 2 == 0 ? horizontalTwist(t, cf[static_cast<std::size_t>(j)])
                     : verticalTwist(t, cf[static_cast<std::size_t>(j)]);
    }
    return t;
  }

  /// One circle around both vertical strings: four crossings (ring over),
  /// reading counterclockwise around the circle.
  Box ringUnit() {
    int c1 = newCrossing(1);  // left string, upper
    int c2 = newCrossing(1);  // right string, upper
    int c3 = newCrossing(1);  // right string, lower
    int c4 = newCrossing(1);  // left string, lower
    // Ports: 0 = N, 1 = W, 2 = S, 3 = E; the string runs N-S under the ring.
    join(end(c1, 2), end(c4, 0));  // left string between its crossings
    join(end(c2, 2), end(c3, 0));  // right string
    join(end(c1, 3), end(c2, 1));  // ring, between the strings on top
    join(end(c2, 3), end(c3, 3));  // ring, around the right side
    join(end(c3, 1), end(c4, 3));  // ring, between the strings below
    join(end(c4, 1), end(c1, 1));  // ring, around the left side
    Box b{{newCorner(), newCorner(), newCorner(), newCorner()}};
    join(b.corner[NW], end(c1, 0));
    join(b.corner[NE], end(c2, 0));
    join(b.corner[SW], end(c4, 2));
    join(b.corner[SE], end(c3, 2));
    return b;
  }

  Box ringStack(int n) {
    if (n <= 0) return infinityBox();
    Box top = ringUnit();
    for (int i = 1; i < n; ++i) {
      Box below = ringUnit();
      splice(top.corner[SW], below.corner[NW]);
      splice(top.corner[SE], below.corner[NE]);
      top.corner[SW] = below.corner[SW];
      top.corner[SE] = below.corner[SE];
    }
    return top;
  }

  /// Quarter turn counterclockwise: the east side becomes the north side.
  static Box rotated(Box b) {
    return Box{{b.corner[NE], b.corner[SE], b.corner[NW], b.corner[SW]}};
  }

  std::vector<int> signs_;
  std::map<int, int> mate_;
  int cornerCount_ = 0;
  int freeCircles_ = 0;
};

}  // namespace

PDCode exportPD(const LinkExpr& link) {
  DiagramBuilder builder;
  builder.buildLink(link);
  return builder.finish();
}

PDCode exportPD(const Parsed& input) {
  if (std::holds_alternative<ExprPtr>(input)) {
    throw OpenStrandsError(
        "tangle has four open strand ends; close it with N(...), M(...), or "
        "glue(...; ...)");
  }
  return exportPD(std::get<LinkExpr>(input));
}

}  // namespace tanglecalc
