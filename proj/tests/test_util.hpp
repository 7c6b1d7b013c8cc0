#pragma once

#include <gtest/gtest.h>

#include <optional>
#include <utility>

#include "polyarith/error.hpp"

namespace testutil {

template <typename F>
std::optional<polyarith::Error> catch_error(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const polyarith::Error& e) {
    return e;
  }
  return std::nullopt;
}

template <typename F>
polyarith::ErrorKind error_of(F&& f) {
  auto e = catch_error(std::forward<F>(f));
  if (!e) {
    ADD_FAILURE() << "expected a polyarith::Error";
    return polyarith::ErrorKind::InvalidArgument;
  }
  return e->kind();
}

}  // namespace testutil
