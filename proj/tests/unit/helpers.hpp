#pragma once

#include "doctest.h"
#include "sl2swc/error.hpp"

// Checks that `expr` throws sl2swc::Error of the given kind.
#define CHECK_FAILS_WITH(expr, k)                                   \
  do {                                                              \
    bool thrown_ = false;                                           \
    try {                                                           \
      (void)(expr);                                                 \
    } catch (const sl2swc::Error& e_) {                             \
      thrown_ = true;                                               \
      CHECK_MESSAGE(e_.kind() == (k), "got ", sl2swc::to_string(e_.kind())); \
    }                                                               \
    CHECK_MESSAGE(thrown_, "no error thrown by " #expr);            \
  } while (0)
