#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wholo/forms.hpp"

namespace wholo {

/// Expression tree over the level-1 generators.
struct FormExpr {
    enum class Kind {
        Eisenstein,  // E4, E6, ... (eisenstein_k)
        Delta,
        J,
        IntLiteral,  // literal
        Neg,         // lhs
        Add,         // lhs, rhs
        Sub,
        Mul,
        Div,
        Pow,         // lhs ^ exponent (integer literal, negative allowed)
        Theta,       // lhs
    };

    Kind kind;
    long eisenstein_k = 0;
    Integer literal{0};
    long exponent = 0;
    std::unique_ptr<FormExpr> lhs;
    std::unique_ptr<FormExpr> rhs;
};

using FormExprPtr = std::unique_ptr<FormExpr>;

/// Recursive-descent parser for
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := '-' factor | atom ('^' int)?
///   atom   := 'E' evenint | 'Delta' | 'j' | 'Theta' '(' expr ')' | '(' expr ')' | int
/// Whitespace-insensitive, explicit operators only. Throws SyntaxError (with
/// 1-based byte offset and expected-token set) and UnknownGenerator.
FormExprPtr parse(std::string_view text);

struct WeightInfo {
    std::optional<long> weight;  // nullopt = non-modular
    std::vector<std::string> diagnostics;
};

/// Weight inference: weights add under Mul, subtract under Div, scale under
/// Pow; Add/Sub require equal weights; Theta maps weight 0 to 2 and anything
/// else to non-modular; E2 and integer literals are non-modular resp. weight 0.
WeightInfo infer_weight(const FormExpr& e);

/// Bottom-up evaluation over the series engine. Working precision is padded
/// internally (and re-tried on shortfall) so the result carries exactly the
/// requested precision.
ModularExpansion evaluate(const FormExpr& e, long prec);
ModularExpansion evaluate(std::string_view text, long prec);

/// Canonical pretty-printer; parse(render(e)) reproduces the tree.
std::string render(const FormExpr& e);

}  // namespace wholo
