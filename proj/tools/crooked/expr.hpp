#pragma once

#include <string_view>

namespace crooked::cli {

/// Evaluates a small arithmetic expression: numbers, + - * / ^, parentheses,
/// unary minus, the constants pi and e, and the functions sin cos tan sinh
/// cosh tanh asinh acosh atanh exp log sqrt abs. Throws std::invalid_argument.
double eval_expression(std::string_view text);

}  // namespace crooked::cli
