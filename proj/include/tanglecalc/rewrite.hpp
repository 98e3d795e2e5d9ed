#pragma once

#include "tanglecalc/expr.hpp"

#include <string>
#include <vector>

namespace tanglecalc {

/// One applied rewrite: which rule fired and at which node.
/// Rules:
///   "identity_elim"     -- T[0] dropped from a sum chain / T[inf] from a product chain
///   "rational_collapse" -- two adjacent rational leaves merged into one
///   "half_sum"          -- two adjacent half-integer leaves became a ring tangle
///   "ring_merge"        -- ring leaves of the chain's axis moved to the front
///                          and merged by index addition
struct TraceEntry {
  std::string rule;
  Path path;
};

struct NormalForm {
  ExprPtr expr;
  std::vector<TraceEntry> trace;
};

/// Deterministic normal form: Rot eliminated, identities dropped, adjacent
/// rational leaves collapsed, half-integer pairs promoted to ring tangles,
/// ring chains merged to the front of their chain. Total (never throws on a
/// structurally valid tree) and idempotent.
ExprPtr normalizeCore(const ExprPtr& e);

/// Validate then normalize, recording every applied rule.
/// Throws ValidationFailedError if validation reports violations.
NormalForm normalize(const ExprPtr& e);

bool isNormal(const ExprPtr& e);

/// Ring-prefix split: e is equivalent to a chain of `count` rings on the given
/// axis applied to `remainder` (product chain for Vertical, sum chain for
/// Horizontal). The remainder carries no further ring prefix on that axis.
/// Requires a normal expression; throws NotNormalizedError otherwise.
struct QSplit {
  int count = 0;
  ExprPtr remainder;
};

QSplit qsplit(const ExprPtr& e, Axis axis);

/// Largest ring-prefix count over every subexpression of the normal form of e,
/// on either axis.
int maxQ(const ExprPtr& e);

/// True when e normalizes to a single rational leaf.
bool isRationalExpr(const ExprPtr& e);

/// Size of the normal form counted in rational pieces: one per rational leaf,
/// two per ring index unit.
long long lengthEstimate(const ExprPtr& e);

/// Addresses of innermost reducible nodes: every child is normal but the node
/// itself is not. Empty exactly when e is normal.
std::vector<Path> reduciblePositions(const ExprPtr& e);

/// Rebuild e with the subexpression at `path` replaced by its normal form.
/// With `path` drawn from reduciblePositions this is one innermost
/// simplification step; iterating to a fixed point in any order is expected to
/// agree with normalizeCore (checked by the confluence tests).
ExprPtr simplifyAt(const ExprPtr& e, const Path& path);

}  // namespace tanglecalc
