#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mudeg/group.hpp"

namespace mudeg {

/// AST of the group-expression language.
///
///   expr    := term (("x" | "×") term)*
///   term    := atom ("^" int)?
///   atom    := primary ("wr" primary)?
///   primary := "C" int | "S" int | "A" int | "D" int
///            | "G(" int "," int "," int ")" | "(" expr ")"
///
/// Whitespace is ignored. "D6" is the dihedral group of order 12.
struct GroupExpr {
  enum class Kind { Cyclic, Symmetric, Alternating, Dihedral, Reflection, Wreath, Product, Power };

  Kind kind = Kind::Cyclic;
  /// Cyclic/Symmetric/Alternating/Dihedral: {n}; Reflection: {m, p, n};
  /// Power: {k}; otherwise empty.
  std::vector<std::size_t> params;
  /// Wreath: {base, top}; Product: two or more factors; Power: {base}.
  std::vector<GroupExpr> children;

  static GroupExpr leaf(Kind kind, std::vector<std::size_t> params) { return {kind, std::move(params), {}}; }

  friend bool operator==(const GroupExpr&, const GroupExpr&) = default;
};

/// Throws ParseError (with position and expected tokens) or SemanticError.
GroupExpr parse_group(std::string_view text);

/// Canonical text; parse_group(to_string(e)) == e.
std::string to_string(const GroupExpr& expr);

/// Throws SemanticError for invalid parameters.
void validate(const GroupExpr& expr);

/// Order computed from the expression alone, saturating at UINT64_MAX.
std::uint64_t expected_order(const GroupExpr& expr);

PermGroup build_group(const GroupExpr& expr);

}  // namespace mudeg
