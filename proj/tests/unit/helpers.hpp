#pragma once

#include <functional>
#include <optional>
#include <string>

#include <gtest/gtest.h>

#include "soficshift/error.hpp"
#include "soficshift/graph.hpp"

namespace soficshift::testing {

/// Code of the soficshift::Error thrown by f, or nullopt if none was thrown.
inline std::optional<ErrorCode> error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline Word w(const LabelledGraph& g, std::string_view text) {
  auto parsed = g.parse_word(text);
  if (!parsed) throw std::invalid_argument("bad word " + std::string(text));
  return *parsed;
}

}  // namespace soficshift::testing

#define EXPECT_ERROR(code, stmt) \
  EXPECT_EQ(::soficshift::testing::error_of([&] { stmt; }), ::soficshift::ErrorCode::code)
