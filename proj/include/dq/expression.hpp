#pragma once

#include "dq/function.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace dq {

/// What the parser needs to know: the chart's variables and which of them the
/// jet symbols psi(...) depend on.
struct ParseContext {
    ChartShape shape;
    JetDomain jet_domain = 0;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind {
        rational,  // value
        imaginary,
        hbar,
        variable,  // var
        theta,
        jet,       // alpha, full length over chart variables
        wave,      // exponent = m in e(m)
        weight,    // name
        add,
        sub,
        mul,
        div,
        pow,       // exponent
        neg,
    };

    Kind kind;
    int line = 1;
    int column = 1;
    Rational value;
    int var = -1;
    int exponent = 0;
    MultiIndex alpha;
    std::string name;
    std::vector<ExprPtr> children;
};

/// Grammar:
///   expr   := term (("+" | "-") term)*
///   term   := factor (("*" | "/") factor)*
///   factor := "-" factor | atom ("^" ["-"] UINT)?
///   atom   := RATIONAL | "i" | "hbar" | VAR | "theta" | "gauss" | "phase"
///           | "psi" "(" UINT ("," UINT)* ")" | "e" "(" INT ")" | "(" expr ")"
///   RATIONAL := UINT ("/" UINT)?     (no blanks around the slash)
/// Division and negative powers require an invertible divisor (c * hbar^k * e(m)).
/// Throws ParseError with the line and column of the offending token.
ExprPtr parse_expression(std::string_view text, const ParseContext& context);

/// Evaluates the tree. Throws ParseError for non-invertible divisors and
/// AlgebraError for ill-formed products (e.g. two weight factors).
Function lower(const ExprPtr& expr, const ParseContext& context);

inline Function parse_function(std::string_view text, const ParseContext& context) {
    return lower(parse_expression(text, context), context);
}

}  // namespace dq
