#pragma once

#include <catch_amalgamated.hpp>

#include <functional>

#include "objects.hpp"
#include "qkit/error.hpp"

namespace fixtures {

using namespace qkit;

inline ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Usage;
}

}  // namespace fixtures
