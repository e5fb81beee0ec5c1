#pragma once

#include <string>

#include "ultratree/error.hpp"

namespace ultratree::testing {

// The code of the ultratree::Error thrown by f, or "" when nothing is thrown.
template <typename F>
std::string error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace ultratree::testing
