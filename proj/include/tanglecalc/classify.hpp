#pragma once

#include "tanglecalc/expr.hpp"
#include "tanglecalc/rewrite.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace tanglecalc {

enum class Status { Hyperbolic, NonHyperbolic };

/// Why a tangle complement fails to be hyperbolic.
struct ReasonRational {};  // the tangle is rational

struct ReasonQProduct {  // the whole tangle is a ring chain applied to a rest
  int m = 1;
  Axis axis = Axis::Vertical;
};

struct ReasonContainsQ {  // a ring chain of length >= 2 sits somewhere inside
  int n = 2;
  Path path;
  Axis axis = Axis::Vertical;
};

using Reason = std::variant<ReasonRational, ReasonQProduct, ReasonContainsQ>;

struct Verdict {
  Status status = Status::Hyperbolic;
  std::vector<Reason> reasons;  // nonempty exactly when NonHyperbolic
  ExprPtr normalForm;

  bool hyperbolic() const noexcept { return status == Status::Hyperbolic; }
};

/// Decide hyperbolicity of the tangle complement. The complement is
/// hyperbolic unless the tangle is rational, is a ring-chain product at the
/// top level, or contains a ring chain of length >= 2 anywhere.
/// Throws ValidationFailedError on invalid expressions.
Verdict classifyTangle(const ExprPtr& e);

/// Essential-surface census of the tangle complement.
struct DiskRecord {
  bool separatesStrings = true;  // the disk splits the two strings apart
};

struct SurfaceRecord {
  Path path;  // node carrying the ring chain ("root" for the whole tangle)
  Axis axis = Axis::Vertical;
  int m = 0;  // depth of the surface inside the chain
};

struct SurfaceCensus {
  bool irreducible = true;  // complements never contain an essential sphere
  std::optional<DiskRecord> disk;       // present exactly for rational tangles
  std::vector<SurfaceRecord> annuli;    // one per depth 1..M of the root chain
  std::vector<SurfaceRecord> tori;      // one per depth 2..L of each chain of length >= 2
};

/// Throws ValidationFailedError on invalid expressions.
SurfaceCensus censusTangle(const ExprPtr& e);

/// Addresses of the sum nodes surviving normalization; each one carries an
/// essential separating disk of the complement.
std::vector<Path> conwayDisks(const ExprPtr& e);

/// A maximal ring chain in a normal form: `length` rings on `axis` rooted at
/// `path`. Lone rings report length 1; nested chains are not double-counted
/// against the chain node that owns them.
struct QRun {
  Path path;
  Axis axis = Axis::Vertical;
  int length = 0;
};

std::vector<QRun> collectQRuns(const ExprPtr& normalForm);

}  // namespace tanglecalc
