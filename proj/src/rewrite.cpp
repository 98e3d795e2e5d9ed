#include "tanglecalc/rewrite.hpp"

#include "tanglecalc/errors.hpp"
#include "tanglecalc/validate.hpp"

#include <utility>
#include <variant>
#include <vector>

namespace tanglecalc {

namespace {

template <class... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;

bool isZeroLeaf(const ExprPtr& e) {
  const auto* r = asRational(e);
  return r && r->value.isZero();
}

bool isInfLeaf(const ExprPtr& e) {
  const auto* r = asRational(e);
  return r && r->value.isInfinite();
}

void appendSumMembers(const ExprPtr& e, std::vector<ExprPtr>& out) {
  if (const auto* s = asSum(e)) {
    appendSumMembers(s->left, out);
    appendSumMembers(s->right, out);
  } else {
    out.push_back(e);
  }
}

void appendProductMembers(const ExprPtr& e, std::vector<ExprPtr>& out) {
  if (const auto* p = asProduct(e)) {
    appendProductMembers(p->top, out);
    appendProductMembers(p->bottom, out);
  } else {
    out.push_back(e);
  }
}

/// Vertical-twist absorption T[p/q] * T[1/m] = T[p/(q + m p)]; the same
/// formula applies with the twist factor on either side of the product.
Fraction collapseProduct(const Fraction& a, const Fraction& twist) {
  BigInt m = twist.num() * twist.den();
  return Fraction::reduce(a.num(), a.den() + m * a.num());
}

bool isTwistFactor(const ExprPtr& e) {
  const auto* r = asRational(e);
  return r && !r->value.isInfinite() && (r->value.num() == 1 || r->value.num() == -1);
}

bool isHalfLeaf(const ExprPtr& e) {
  const auto* r = asRational(e);
  return r && r->value.isHalfInteger();
}

/// |numerator| = 2 leaves are the quarter-turn image of half-integer leaves.
bool isTwoNumeratorLeaf(const ExprPtr& e) {
  const auto* r = asRational(e);
  return r && !r->value.isInfinite() && (r->value.num() == 2 || r->value.num() == -2);
}

class Normalizer {
public:
  explicit Normalizer(std::vector<TraceEntry>* trace) : trace_(trace) {}

  ExprPtr run(const ExprPtr& e) {
    return std::visit(
        Overload{
            [&](const RationalLeaf&) { return e; },
            [&](const QLeaf&) { return e; },
            [&](const SumNode& x) {
              std::vector<ExprPtr> ms;
              appendSumMembers(runChild(x.left, PathStep::Left), ms);
              appendSumMembers(runChild(x.right, PathStep::Right), ms);
              return sumChain(std::move(ms));
            },
            [&](const ProductNode& x) {
              std::vector<ExprPtr> ms;
              appendProductMembers(runChild(x.top, PathStep::Top), ms);
              appendProductMembers(runChild(x.bottom, PathStep::Bottom), ms);
              return productChain(std::move(ms));
            },
            [&](const RotNode& x) { return run(rotExpr(x.inner)); },
        },
        e->node);
  }

private:
  ExprPtr runChild(const ExprPtr& child, PathStep step) {
    path_.push_back(step);
    ExprPtr out = run(child);
    path_.pop_back();
    return out;
  }

  void log(const char* rule) {
    if (trace_) trace_->push_back({rule, path_});
  }

  /// One pass of the chain rules; true when something fired. Scans are
  /// leftmost-first with a fixed priority, so the result is deterministic.
  bool chainStep(std::vector<ExprPtr>& ms, bool productAxis) {
    // Identity elimination: T[0] in a sum chain, T[inf] in a product chain.
    for (std::size_t i = 0; i < ms.size(); ++i) {
      if (productAxis ? isInfLeaf(ms[i]) : isZeroLeaf(ms[i])) {
        ms.erase(ms.begin() + static_cast<std::ptrdiff_t>(i));
        log("identity_elim");
        return true;
      }
    }
    // Rational collapse on the leftmost eligible adjacent pair.
    for (std::size_t i = 0; i + 1 < ms.size(); ++i) {
      const auto* a = asRational(ms[i]);
      const auto* b = asRational(ms[i + 1]);
      if (!a || !b) continue;
      if (productAxis) {
        if (!isTwistFactor(ms[i]) && !isTwistFactor(ms[i + 1])) continue;
        // Prefer the lower factor as the absorbed twist when both qualify.
        Fraction merged = isTwistFactor(ms[i + 1]) ? collapseProduct(a->value, b->value)
                                                   : collapseProduct(b->value, a->value);
        ms[i] = rational(std::move(merged));
      } else {
        if (!a->value.isInteger() && !b->value.isInteger()) continue;
        Fraction merged = b->value.isInteger() ? addInteger(a->value, b->value.num())
                                               : addInteger(b->value, a->value.num());
        ms[i] = rational(std::move(merged));
      }
      ms.erase(ms.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      log("rational_collapse");
      return true;
    }
    // Half-integer pair to ring tangle (quarter-turned form in product chains).
    for (std::size_t i = 0; i + 1 < ms.size(); ++i) {
      bool hit = productAxis ? (isTwoNumeratorLeaf(ms[i]) && isTwoNumeratorLeaf(ms[i + 1]))
                             : (isHalfLeaf(ms[i]) && isHalfLeaf(ms[i + 1]));
      if (!hit) continue;
      ms[i] = qTangle(1, productAxis ? Axis::Horizontal : Axis::Vertical);
      ms.erase(ms.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      log("half_sum");
      return true;
    }
    // Ring merge: rings whose axis matches the chain commute to the front
    // and add. Skip when a single ring leaf already sits at the front.
    Axis chainAxis = productAxis ? Axis::Vertical : Axis::Horizontal;
    int total = 0;
    int found = 0;
    std::size_t firstAt = 0;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const auto* q = asQLeaf(ms[i]);
      if (q && q->axis == chainAxis) {
        if (found == 0) firstAt = i;
        ++found;
        total += q->index;
      }
    }
    if (found >= 2 || (found == 1 && firstAt != 0)) {
      std::vector<ExprPtr> next;
      next.reserve(ms.size() - static_cast<std::size_t>(found) + 1);
      next.push_back(qTangle(total, chainAxis));
      for (const ExprPtr& m : ms) {
        const auto* q = asQLeaf(m);
        if (!(q && q->axis == chainAxis)) next.push_back(m);
      }
      ms = std::move(next);
      log("ring_merge");
      return true;
    }
    return false;
  }

  ExprPtr sumChain(std::vector<ExprPtr> ms) {
    while (chainStep(ms, /*productAxis=*/false)) {
    }
    if (ms.empty()) return rational(Fraction());
    ExprPtr acc = ms.front();
    for (std::size_t i = 1; i < ms.size(); ++i) acc = sum(std::move(acc), ms[i]);
    return acc;
  }

  ExprPtr productChain(std::vector<ExprPtr> ms) {
    while (chainStep(ms, /*productAxis=*/true)) {
    }
    if (ms.empty()) return rational(Fraction::infinity());
    ExprPtr acc = ms.front();
    for (std::size_t i = 1; i < ms.size(); ++i) acc = product(std::move(acc), ms[i]);
    return acc;
  }

  std::vector<TraceEntry>* trace_;
  Path path_;
};

/// Split a normal product chain along the vertical axis.
QSplit splitVertical(const ExprPtr& e) {
  if (const auto* q = asQLeaf(e); q && q->axis == Axis::Vertical) {
    return {q->index, rational(Fraction::infinity())};
  }
  if (asProduct(e)) {
    std::vector<ExprPtr> ms;
    appendProductMembers(e, ms);
    int count = 0;
    std::vector<ExprPtr> rest;
    for (const ExprPtr& m : ms) {
      QSplit s = splitVertical(m);
      count += s.count;
      if (!isInfLeaf(s.remainder)) rest.push_back(s.remainder);
    }
    if (rest.empty()) return {count, rational(Fraction::infinity())};
    ExprPtr acc = rest.front();
    for (std::size_t i = 1; i < rest.size(); ++i) acc = product(std::move(acc), rest[i]);
    return {count, std::move(acc)};
  }
  return {0, e};
}

}  // namespace

ExprPtr normalizeCore(const ExprPtr& e) { return Normalizer(nullptr).run(e); }

NormalForm normalize(const ExprPtr& e) {
  requireValid(e);
  NormalForm out;
  out.expr = Normalizer(&out.trace).run(e);
  return out;
}

bool isNormal(const ExprPtr& e) { return structuralEqual(normalizeCore(e), e); }

QSplit qsplit(const ExprPtr& e, Axis axis) {
  if (!isNormal(e)) throw NotNormalizedError();
  if (axis == Axis::Vertical) return splitVertical(e);
  QSplit s = splitVertical(rotExpr(e));
  return {s.count, rotExpr(s.remainder)};
}

int maxQ(const ExprPtr& e) {
  ExprPtr n = normalizeCore(e);
  int best = 0;
  // Every subexpression of a normal form is normal, so splitting is safe.
  auto walk = [&](auto&& self, const ExprPtr& sub) -> void {
    best = std::max(best, splitVertical(sub).count);
    best = std::max(best, splitVertical(rotExpr(sub)).count);
    std::visit(Overload{
                   [](const RationalLeaf&) {},
                   [](const QLeaf&) {},
                   [&](const SumNode& x) {
                     self(self, x.left);
                     self(self, x.right);
                   },
                   [&](const ProductNode& x) {
                     self(self, x.top);
                     self(self, x.bottom);
                   },
                   [&](const RotNode& x) { self(self, x.inner); },
               },
               sub->node);
  };
  walk(walk, n);
  return best;
}

bool isRationalExpr(const ExprPtr& e) { return asRational(normalizeCore(e)) != nullptr; }

long long lengthEstimate(const ExprPtr& e) {
  ExprPtr n = normalizeCore(e);
  long long count = 0;
  auto walk = [&](auto&& self, const ExprPtr& sub) -> void {
    std::visit(Overload{
                   [&](const RationalLeaf&) { count += 1; },
                   [&](const QLeaf& q) { count += 2LL * q.index; },
                   [&](const SumNode& x) {
                     self(self, x.left);
                     self(self, x.right);
                   },
                   [&](const ProductNode& x) {
                     self(self, x.top);
                     self(self, x.bottom);
                   },
                   [&](const RotNode& x) { self(self, x.inner); },
               },
               sub->node);
  };
  walk(walk, n);
  return count;
}

std::vector<Path> reduciblePositions(const ExprPtr& e) {
  std::vector<Path> out;
  Path path;
  auto walk = [&](auto&& self, const ExprPtr& sub) -> void {
    bool childrenNormal = true;
    auto visitChild = [&](const ExprPtr& c, PathStep step) {
      path.push_back(step);
      self(self, c);
      if (!isNormal(c)) childrenNormal = false;
      path.pop_back();
    };
    std::visit(Overload{
                   [](const RationalLeaf&) {},
                   [](const QLeaf&) {},
                   [&](const SumNode& x) {
                     visitChild(x.left, PathStep::Left);
                     visitChild(x.right, PathStep::Right);
                   },
                   [&](const ProductNode& x) {
                     visitChild(x.top, PathStep::Top);
                     visitChild(x.bottom, PathStep::Bottom);
                   },
                   [&](const RotNode& x) { visitChild(x.inner, PathStep::Inner); },
               },
               sub->node);
    if (childrenNormal && !isNormal(sub)) out.push_back(path);
  };
  walk(walk, e);
  return out;
}

ExprPtr simplifyAt(const ExprPtr& e, const Path& path) {
  if (path.empty()) return normalizeCore(e);
  Path rest(path.begin() + 1, path.end());
  return std::visit(
      Overload{
          [&](const RationalLeaf&) { return e; },
          [&](const QLeaf&) { return e; },
          [&](const SumNode& x) {
            if (path.front() == PathStep::Left) return sum(simplifyAt(x.left, rest), x.right);
            return sum(x.left, simplifyAt(x.right, rest));
          },
          [&](const ProductNode& x) {
            if (path.front() == PathStep::Top) return product(simplifyAt(x.top, rest), x.bottom);
            return product(x.top, simplifyAt(x.bottom, rest));
          },
          [&](const RotNode& x) { return rot(simplifyAt(x.inner, rest)); },
      },
      e->node);
}

}  // namespace tanglecalc
