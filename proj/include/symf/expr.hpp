#pragma once

#include "symf/partition.hpp"
#include "symf/rational.hpp"
#include "symf/symfn.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace symf {

/// Syntax tree of the symmetric-function expression language:
///
///     expr   := ['-'] term (('+' | '-') term)*
///     term   := factor ('*' factor)*
///     factor := atom ('[' expr ']')*              plethysm, left-associative
///     atom   := BASIS PART | NUMBER | '(' expr ')' | FUNC '(' expr [',' expr] ')'
///     BASIS  := p | h | e | m | s
///     PART   := digits | '[' [int (',' int)*] ']'
///     NUMBER := digits ['/' digits]
///     FUNC   := scalar | kron | dim | ones | coeff
struct Expr {
    enum class Kind { number, atom, add, sub, negate, mul, plethysm, call };

    Kind kind = Kind::number;
    Rational number;
    Basis basis = Basis::p;
    Partition partition;
    std::string function;
    std::vector<Expr> children;

    bool operator==(const Expr& other) const;
};

struct ParsedExpr {
    Expr expr;
    /// Non-fatal notes, e.g. a partition written out of order and re-sorted.
    std::vector<std::string> warnings;
};

/// Throws ParseError (with 1-based line and column) on malformed input.
ParsedExpr parse_expr(std::string_view text);

/// Canonical text that parses back to an equal tree.
std::string to_string(const Expr& e);

SymFn evaluate(const Expr& e);

/// parse_expr followed by evaluate; warnings are forwarded to the warning handler.
SymFn evaluate(std::string_view text);

} // namespace symf
