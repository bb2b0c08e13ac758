#pragma once

#include <string_view>

#include "kzero/class_poly.hpp"
#include "kzero/errors.hpp"

inline kzero::ClassPoly P(std::string_view text) { return kzero::parse_class_poly(text); }

inline kzero::Rational Q(long num, long den = 1) {
  kzero::Rational q(num, den);
  q.canonicalize();
  return q;
}

inline kzero::Rational at(const kzero::ClassPoly& p, long x) { return kzero::eval(p, {{"x", kzero::Integer(x)}}); }

template <class F>
bool throws_code(F&& f, kzero::Errc code) {
  try {
    f();
  } catch (const kzero::Error& e) {
    return e.code() == code;
  }
  return false;
}
