// Tiny recursive-descent parser for theta-rational element expressions:
// integers, theta, u, the residue generator g, + - * / ^ and parentheses.
#pragma once

#include <string>

#include "fflog/laurent.hpp"

namespace fflog {

// Throws math_error(PARSE) on malformed input.
WElem parse_welem(const WFieldPtr& W, const std::string& text);

}  // namespace fflog
