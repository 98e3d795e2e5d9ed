#include "tanglecalc/expr.hpp"

#include <utility>

namespace tanglecalc {

namespace {

template <class... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;

ExprPtr make(TangleExpr expr) { return std::make_shared<const TangleExpr>(std::move(expr)); }

}  // namespace

ExprPtr rational(Fraction value) { return make({RationalLeaf{std::move(value)}}); }

ExprPtr rationalInt(long long n) { return rational(Fraction::integer(BigInt(n))); }

ExprPtr qTangle(int index, Axis axis) {
  if (index == 0) return rational(Fraction::infinity());
  return make({QLeaf{index, axis}});
}

ExprPtr sum(ExprPtr left, ExprPtr right) { return make({SumNode{std::move(left), std::move(right)}}); }

ExprPtr product(ExprPtr top, ExprPtr bottom) {
  return make({ProductNode{std::move(top), std::move(bottom)}});
}

ExprPtr rot(ExprPtr inner) { return make({RotNode{std::move(inner)}}); }

const RationalLeaf* asRational(const ExprPtr& e) { return std::get_if<RationalLeaf>(&e->node); }
const QLeaf* asQLeaf(const ExprPtr& e) { return std::get_if<QLeaf>(&e->node); }
const SumNode* asSum(const ExprPtr& e) { return std::get_if<SumNode>(&e->node); }
const ProductNode* asProduct(const ExprPtr& e) { return std::get_if<ProductNode>(&e->node); }
const RotNode* asRot(const ExprPtr& e) { return std::get_if<RotNode>(&e->node); }

bool structuralEqual(const ExprPtr& a, const ExprPtr& b) {
  if (a.get() == b.get()) return true;
  return std::visit(
      Overload{
          [&](const RationalLeaf& x) {
            const auto* y = asRational(b);
            return y && x.value == y->value;
          },
          [&](const QLeaf& x) {
            const auto* y = asQLeaf(b);
            return y && x.index == y->index && x.axis == y->axis;
          },
          [&](const SumNode& x) {
            const auto* y = asSum(b);
            return y && structuralEqual(x.left, y->left) && structuralEqual(x.right, y->right);
          },
          [&](const ProductNode& x) {
            const auto* y = asProduct(b);
            return y && structuralEqual(x.top, y->top) && structuralEqual(x.bottom, y->bottom);
          },
          [&](const RotNode& x) {
            const auto* y = asRot(b);
            return y && structuralEqual(x.inner, y->inner);
          },
      },
      a->node);
}

ExprPtr rotExpr(const ExprPtr& e) {
  return std::visit(
      Overload{
          [&](const RationalLeaf& x) { return rational(rotateFraction(x.value)); },
          [&](const QLeaf& x) {
            return qTangle(x.index, x.axis == Axis::Vertical ? Axis::Horizontal : Axis::Vertical);
          },
          // A quarter turn carries the left summand to the top of the stack.
          [&](const SumNode& x) { return product(rotExpr(x.left), rotExpr(x.right)); },
          [&](const ProductNode& x) { return sum(rotExpr(x.top), rotExpr(x.bottom)); },
          // rot(rot(t)) = t: a half turn is an isotopy for these tangles.
          [&](const RotNode& x) { return elimRot(x.inner); },
      },
      e->node);
}

ExprPtr elimRot(const ExprPtr& e) {
  return std::visit(
      Overload{
          [&](const RationalLeaf&) { return e; },
          [&](const QLeaf&) { return e; },
          [&](const SumNode& x) {
            ExprPtr l = elimRot(x.left);
            ExprPtr r = elimRot(x.right);
            if (l.get() == x.left.get() && r.get() == x.right.get()) return e;
            return sum(std::move(l), std::move(r));
          },
          [&](const ProductNode& x) {
            ExprPtr t = elimRot(x.top);
            ExprPtr b = elimRot(x.bottom);
            if (t.get() == x.top.get() && b.get() == x.bottom.get()) return e;
            return product(std::move(t), std::move(b));
          },
          [&](const RotNode& x) { return rotExpr(x.inner); },
      },
      e->node);
}

ExprPtr mirrorExpr(const ExprPtr& e) {
  return std::visit(
      Overload{
          [&](const RationalLeaf& x) { return rational(mirrorFraction(x.value)); },
          [&](const QLeaf&) { return e; },
          [&](const SumNode& x) { return sum(mirrorExpr(x.left), mirrorExpr(x.right)); },
          [&](const ProductNode& x) { return product(mirrorExpr(x.top), mirrorExpr(x.bottom)); },
          [&](const RotNode& x) { return rot(mirrorExpr(x.inner)); },
      },
      e->node);
}

std::string pathToString(const Path& path) {
  std::string out = "root";
  for (PathStep step : path) {
    switch (step) {
      case PathStep::Left: out += ".left"; break;
      case PathStep::Right: out += ".right"; break;
      case PathStep::Top: out += ".top"; break;
      case PathStep::Bottom: out += ".bottom"; break;
      case PathStep::Inner: out += ".inner"; break;
    }
  }
  return out;
}

ExprPtr subexprAt(const ExprPtr& root, const Path& path) {
  ExprPtr cur = root;
  for (PathStep step : path) {
    if (!cur) return nullptr;
    switch (step) {
      case PathStep::Left: {
        const auto* s = asSum(cur);
        cur = s ? s->left : nullptr;
        break;
      }
      case PathStep::Right: {
        const auto* s = asSum(cur);
        cur = s ? s->right : nullptr;
        break;
      }
      case PathStep::Top: {
        const auto* p = asProduct(cur);
        cur = p ? p->top : nullptr;
        break;
      }
      case PathStep::Bottom: {
        const auto* p = asProduct(cur);
        cur = p ? p->bottom : nullptr;
        break;
      }
      case PathStep::Inner: {
        const auto* r = asRot(cur);
        cur = r ? r->inner : nullptr;
        break;
      }
    }
  }
  return cur;
}

}  // namespace tanglecalc
