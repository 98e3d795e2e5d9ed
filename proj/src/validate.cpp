#include "tanglecalc/validate.hpp"

#include "tanglecalc/errors.hpp"
#include "tanglecalc/rewrite.hpp"

#include <variant>

namespace tanglecalc {

namespace {

template <class... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;

bool reducesToInf(const ExprPtr& e) {
  ExprPtr n = normalizeCore(e);  // keep the normal form alive past the accessor
  const auto* r = asRational(n);
  return r && r->value.isInfinite();
}

bool reducesToZero(const ExprPtr& e) {
  ExprPtr n = normalizeCore(e);
  const auto* r = asRational(n);
  return r && r->value.isZero();
}

void walk(const ExprPtr& e, Path& path, std::vector<Violation>& out) {
  auto visitChild = [&](const ExprPtr& c, PathStep step) {
    path.push_back(step);
    walk(c, path, out);
    path.pop_back();
  };
  auto flagChild = [&](PathStep step, Violation::Kind kind) {
    path.push_back(step);
    out.push_back({kind, path});
    path.pop_back();
  };
  std::visit(Overload{
                 [](const RationalLeaf&) {},
                 [](const QLeaf&) {},
                 [&](const SumNode& x) {
                   if (reducesToInf(x.left)) flagChild(PathStep::Left, Violation::Kind::TrivialSum);
                   if (reducesToInf(x.right)) flagChild(PathStep::Right, Violation::Kind::TrivialSum);
                   visitChild(x.left, PathStep::Left);
                   visitChild(x.right, PathStep::Right);
                 },
                 [&](const ProductNode& x) {
                   if (reducesToZero(x.top)) flagChild(PathStep::Top, Violation::Kind::TrivialProduct);
                   if (reducesToZero(x.bottom)) {
                     flagChild(PathStep::Bottom, Violation::Kind::TrivialProduct);
                   }
                   visitChild(x.top, PathStep::Top);
                   visitChild(x.bottom, PathStep::Bottom);
                 },
                 [&](const RotNode& x) { visitChild(x.inner, PathStep::Inner); },
             },
             e->node);
}

}  // namespace

std::string Violation::str() const {
  const char* what = kind == Kind::TrivialSum ? "trivial sum operand (reduces to T[inf])"
                                              : "trivial product operand (reduces to T[0])";
  return std::string(what) + " at " + pathToString(path);
}

Validation validate(const ExprPtr& e) {
  Validation v;
  Path path;
  walk(e, path, v.violations);
  return v;
}

void requireValid(const ExprPtr& e) {
  Validation v = validate(e);
  if (v.ok()) return;
  std::string detail;
  for (const Violation& violation : v.violations) {
    if (!detail.empty()) detail += "; ";
    detail += violation.str();
  }
  throw ValidationFailedError(detail);
}

}  // namespace tanglecalc
