#pragma once

#include "ast.hpp"
#include "kernel.hpp"
#include "layout.hpp"
#include "lbs.hpp"
#include "lexer.hpp"
#include "modern.hpp"
#include "render.hpp"
#include "semantics.hpp"

namespace begriff {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace begriff
