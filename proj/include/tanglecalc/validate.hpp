#pragma once

#include "tanglecalc/expr.hpp"

#include <string>
#include <vector>

namespace tanglecalc {

/// A place where an expression composes trivially and the tangle calculus
/// identities would not apply.
struct Violation {
  enum class Kind {
    TrivialSum,      // a sum operand reduces to T[inf]: the join caps off
    TrivialProduct,  // a product operand reduces to T[0]: the join caps off
  };

  Kind kind = Kind::TrivialSum;
  Path path;  // address of the offending operand

  std::string str() const;
};

struct Validation {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Check every sum/product node: a sum operand must not reduce to T[inf]
/// (T[0] operands are fine, they are eliminated as identities) and a product
/// operand must not reduce to T[0] (T[inf] operands are the identity there).
Validation validate(const ExprPtr& e);

/// Throws ValidationFailedError when validate(e) reports violations.
void requireValid(const ExprPtr& e);

}  // namespace tanglecalc
