#pragma once

#include <cstdint>

#include "howson/errors.hpp"

namespace howson::checked {

  inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
      throw OverflowError("integer overflow in addition");
    }
    return r;
  }

  inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) {
      throw OverflowError("integer overflow in subtraction");
    }
    return r;
  }

  inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
      throw OverflowError("integer overflow in multiplication");
    }
    return r;
  }

  inline std::int64_t neg(std::int64_t a) {
    return sub(0, a);
  }

}  // namespace howson::checked
