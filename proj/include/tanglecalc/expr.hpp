#pragma once

#include "tanglecalc/fraction.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace tanglecalc {

struct TangleExpr;
using ExprPtr = std::shared_ptr<const TangleExpr>;

/// Orientation of a ring chain: vertical chains stack along products,
/// horizontal chains line up along sums.
enum class Axis { Vertical, Horizontal };

/// Rational tangle T[p/q].
struct RationalLeaf {
  Fraction value;
};

/// Ring tangle Qn: two parallel strands threaded through n nested rings.
/// The axis records the strand direction; index >= 1 (Q0 is parsed as T[inf]).
struct QLeaf {
  int index = 1;
  Axis axis = Axis::Vertical;
};

/// Horizontal join: left and right tangles side by side.
struct SumNode {
  ExprPtr left;
  ExprPtr right;
};

/// Vertical join: top tangle stacked over bottom tangle.
struct ProductNode {
  ExprPtr top;
  ExprPtr bottom;
};

/// Quarter-turn wrapper. The parser eliminates these eagerly, but the node
/// exists so rotation can be expressed and tested as a syntactic operation.
struct RotNode {
  ExprPtr inner;
};

struct TangleExpr {
  std::variant<RationalLeaf, QLeaf, SumNode, ProductNode, RotNode> node;
};

// --- Factories ---------------------------------------------------------------

ExprPtr rational(Fraction value);
ExprPtr rationalInt(long long n);

/// Qn for n >= 1; Q0 degenerates to T[inf].
ExprPtr qTangle(int index, Axis axis = Axis::Vertical);

ExprPtr sum(ExprPtr left, ExprPtr right);
ExprPtr product(ExprPtr top, ExprPtr bottom);
ExprPtr rot(ExprPtr inner);

// --- Accessors ---------------------------------------------------------------

const RationalLeaf* asRational(const ExprPtr& e);
const QLeaf* asQLeaf(const ExprPtr& e);
const SumNode* asSum(const ExprPtr& e);
const ProductNode* asProduct(const ExprPtr& e);
const RotNode* asRot(const ExprPtr& e);

bool structuralEqual(const ExprPtr& a, const ExprPtr& b);

// --- Syntactic symmetries ----------------------------------------------------

/// Quarter-turn rotation with the wrapper already eliminated: rational leaves
/// map to -1/f, ring chains swap axis, sums become products in the same order
/// (left goes on top) and vice versa. Applying it twice gives the original
/// expression back.
ExprPtr rotExpr(const ExprPtr& e);

/// Rot-free equivalent of e itself (rotations pushed down to the leaves).
ExprPtr elimRot(const ExprPtr& e);

/// Mirror image: rational leaves negate, ring tangles are their own mirror.
/// Commutes with rotation.
ExprPtr mirrorExpr(const ExprPtr& e);

// --- Link expressions ---------------------------------------------------------

/// Numerator closure N(T): joins the two top and the two bottom endpoints.
struct NumeratorClosure {
  ExprPtr tangle;
};

/// Montesinos link M(r1, ..., rn); entries are written with denominator >= 2.
struct MontesinosLink {
  std::vector<Fraction> entries;
};

/// How the boundary spheres of two tangles are matched when gluing.
enum class AxisMatch {
  Identity,  // vertical curves to vertical curves
  Quarter,   // vertical curves to horizontal curves
};

struct GluingMap {
  AxisMatch axisMatch = AxisMatch::Identity;
  bool mirrorSecond = false;
};

/// Link made by gluing two tangles along their common boundary sphere.
struct GlueLink {
  ExprPtr first;
  ExprPtr second;
  GluingMap gluing;
};

using LinkExpr = std::variant<NumeratorClosure, MontesinosLink, GlueLink>;

// --- Tree addresses ----------------------------------------------------------

enum class PathStep { Left, Right, Top, Bottom, Inner };

/// Address of a subexpression: steps from the root. Rendered as
/// "root", "root.left", "root.left.top", ...
using Path = std::vector<PathStep>;

std::string pathToString(const Path& path);

/// Subexpression at the given address; null if the path does not fit.
ExprPtr subexprAt(const ExprPtr& root, const Path& path);

}  // namespace tanglecalc
