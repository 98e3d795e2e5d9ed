#include "tanglecalc/classify.hpp"

#include "tanglecalc/validate.hpp"

#include <variant>

namespace tanglecalc {

namespace {

template <class... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;

/// Walk a normal form collecting maximal ring chains. A chain owned by a sum
/// or product node suppresses the ring leaves along its own spine (they are
/// the same chain), while subexpressions hanging off the chain are scanned
/// afresh.
void collectRuns(const ExprPtr& e, Path& path, bool suppressV, bool suppressH,
                 std::vector<QRun>& out) {
  auto recurse = [&](const ExprPtr& child, PathStep step, bool sv, bool sh) {
    path.push_back(step);
    collectRuns(child, path, sv, sh, out);
    path.pop_back();
  };
  std::visit(Overload{
                 [](const RationalLeaf&) {},
                 [&](const QLeaf& q) {
                   bool suppressed = q.axis == Axis::Vertical ? suppressV : suppressH;
                   if (!suppressed) out.push_back({path, q.axis, q.index});
                 },
                 [&](const SumNode& x) {
                   if (!suppressH) {
                     int c = qsplit(e, Axis::Horizontal).count;
                     if (c >= 1) out.push_back({path, Axis::Horizontal, c});
                   }
                   recurse(x.left, PathStep::Left, /*sv=*/false, /*sh=*/true);
                   recurse(x.right, PathStep::Right, /*sv=*/false, /*sh=*/true);
                 },
                 [&](const ProductNode& x) {
                   if (!suppressV) {
                     int c = qsplit(e, Axis::Vertical).count;
                     if (c >= 1) out.push_back({path, Axis::Vertical, c});
                   }
                   recurse(x.top, PathStep::Top, /*sv=*/true, /*sh=*/false);
                   recurse(x.bottom, PathStep::Bottom, /*sv=*/true, /*sh=*/false);
                 },
                 [&](const RotNode& x) { recurse(x.inner, PathStep::Inner, suppressV, suppressH); },
             },
             e->node);
}

}  // namespace

std::vector<QRun> collectQRuns(const ExprPtr& normalForm) {
  std::vector<QRun> out;
  Path path;
  collectRuns(normalForm, path, false, false, out);
  return out;
}

Verdict classifyTangle(const ExprPtr& e) {
  requireValid(e);
  Verdict v;
  v.normalForm = normalizeCore(e);
  if (asRational(v.normalForm)) v.reasons.push_back(ReasonRational{});
  for (Axis axis : {Axis::Vertical, Axis::Horizontal}) {
    int m = qsplit(v.normalForm, axis).count;
    if (m >= 1) v.reasons.push_back(ReasonQProduct{m, axis});
  }
  for (const QRun& run : collectQRuns(v.normalForm)) {
    if (run.length >= 2) v.reasons.push_back(ReasonContainsQ{run.length, run.path, run.axis});
  }
  v.status = v.reasons.empty() ? Status::Hyperbolic : Status::NonHyperbolic;
  return v;
}

SurfaceCensus censusTangle(const ExprPtr& e) {
  requireValid(e);
  ExprPtr n = normalizeCore(e);
  SurfaceCensus census;
  if (asRational(n)) census.disk = DiskRecord{};
  for (Axis axis : {Axis::Vertical, Axis::Horizontal}) {
    int m = qsplit(n, axis).count;
    for (int depth = 1; depth <= m; ++depth) census.annuli.push_back({Path{}, axis, depth});
  }
  for (const QRun& run : collectQRuns(n)) {
    for (int depth = 2; depth <= run.length; ++depth) {
      census.tori.push_back({run.path, run.axis, depth});
    }
  }
  return census;
}

std::vector<Path> conwayDisks(const ExprPtr& e) {
  std::vector<Path> out;
  Path path;
  auto walk = [&](auto&& self, const ExprPtr& sub) -> void {
    std::visit(Overload{
                   [](const RationalLeaf&) {},
                   [](const QLeaf&) {},
                   [&](const SumNode& x) {
                     out.push_back(path);
                     path.push_back(PathStep::Left);
                     self(self, x.left);
                     path.pop_back();
                     path.push_back(PathStep::Right);
                     self(self, x.right);
                     path.pop_back();
                   },
                   [&](const ProductNode& x) {
                     path.push_back(PathStep::Top);
                     self(self, x.top);
                     path.pop_back();
                     path.push_back(PathStep::Bottom);
                     self(self, x.bottom);
                     path.pop_back();
                   },
                   [&](const RotNode& x) {
                     path.push_back(PathStep::Inner);
                     self(self, x.inner);
                     path.pop_back();
                   },
               },
               sub->node);
  };
  walk(walk, normalizeCore(e));
  return out;
}

}  // namespace tanglecalc
