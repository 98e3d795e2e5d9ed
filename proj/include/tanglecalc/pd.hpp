#pragma once

#include "tanglecalc/expr.hpp"
#include "tanglecalc/parse.hpp"

#include <array>
#include <vector>

namespace tanglecalc {

/// Planar-diagram code of a closed link diagram.
///
/// Each crossing is a 4-tuple of arc identifiers listed counterclockwise
/// starting at the incoming under-arc; arcs are the diagram edges between
/// consecutive crossings, numbered from 1 in order of first appearance, and
/// each identifier occurs exactly twice across all tuples. The parallel signs
/// vector records the handedness assigned at construction: +1 for crossings
/// realized from positive twist entries, -1 for negative ones (ring crossings
/// are drawn with the circle passing over both strings and carry +1).
/// Closed curves that touch no crossing are included in the component count.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;
  std::vector<int> signs;
  int components = 0;
};

/// Diagram of a closed link expression. Rational tangles are drawn as the
/// alternating horizontal/vertical twist chains of their continued fractions,
/// so the crossing total is the sum of the continued-fraction entry sizes
/// (plus four crossings per ring); no normalization is applied first.
PDCode exportPD(const LinkExpr& link);

/// As above for parsed input; a bare tangle leaves four strand ends open and
/// raises OpenStrandsError.
PDCode exportPD(const Parsed& input);

}  // namespace tanglecalc
