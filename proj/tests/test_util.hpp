#pragma once

#include <string_view>

#include <gtest/gtest.h>

#include "blindsc/bigint.hpp"
#include "blindsc/error.hpp"

namespace testutil {

/// Runs f and returns the code of the blindsc::Error it throws.
template <typename F>
blindsc::Errc error_of(F&& f) {
  try {
    f();
  } catch (const blindsc::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a blindsc::Error";
  return blindsc::Errc::InvalidArgument;
}

inline blindsc::Bytes bytes_of(std::string_view s) { return blindsc::Bytes(s.begin(), s.end()); }

}  // namespace testutil
