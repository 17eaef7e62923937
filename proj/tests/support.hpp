#pragma once

#include <doctest.h>

#include "recsym/error.hpp"

/// Runs fn and returns the code of the recsym::Error it throws.
template <typename Fn>
recsym::Errc code_of(Fn&& fn) {
  try {
    fn();
  } catch (const recsym::Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return recsym::Errc::InvalidArgument;
}
