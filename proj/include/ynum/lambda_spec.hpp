/**
 * @file lambda_spec.hpp
 * @brief Text form of a lambda argument: "p/q", "phi", "a+b*sqrt5", or "sym".
 */
#pragma once

#include "ynum/ycore.hpp"

#include <stdexcept>
#include <string>

namespace ynum {

struct LambdaParseError : std::invalid_argument {
    LambdaParseError(const std::string& what, size_t position)
        : std::invalid_argument("parse error at position " + std::to_string(position) + ": " +
                                what),
          position(position) {}
    size_t position;
};

/// Accepts "p/q" or "p" (rational), "phi" (golden ratio), "a+b*sqrt5" /
/// "a-b*sqrt5" (element of Q(sqrt 5)), or "sym" (the indeterminate).
LambdaValue parse_lambda(const std::string& text);

/// Round-trippable rendering: parse(render(v)) reproduces v.
std::string render_lambda(const LambdaValue& v);

}  // namespace ynum
