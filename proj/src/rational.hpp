#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace vyb {

// Exact arithmetic everywhere; no floating point in the core.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline long long to_longlong(const Rat& r) {
  if (!is_integer(r)) throw std::domain_error("expected an integer, got " + r.str());
  return numerator(r).convert_to<long long>();
}

inline std::string rat_to_string(const Rat& r) { return r.str(); }

inline Rat rat_from_string(const std::string& s) {
  try {
    return Rat(s);
  } catch (const std::exception&) {
    throw std::domain_error("malformed rational: '" + s + "'");
  }
}

}  // namespace vyb
