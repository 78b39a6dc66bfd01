#ifndef SEMIGLUE_CHECKED_HPP
#define SEMIGLUE_CHECKED_HPP

#include <cstdint>

#include "semiglue/error.hpp"

namespace semiglue {

template <class T>
T checked_add(T a, T b) {
  T out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(Errc::Overflow, "integer overflow in addition");
  return out;
}

template <class T>
T checked_mul(T a, T b) {
  T out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(Errc::Overflow, "integer overflow in multiplication");
  return out;
}

}  // namespace semiglue

#endif  // SEMIGLUE_CHECKED_HPP
