#pragma once

#include <functional>

#include "genmech/error.hpp"

namespace genmech::test {

// Runs fn and reports which ErrorCode it threw (Ok when it did not throw).
inline ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Ok;
}

}  // namespace genmech::test
