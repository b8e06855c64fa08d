#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace curralg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Int int_pow(Int base, unsigned e) {
  Int r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline Rat rat_pow(const Rat& base, unsigned e) {
  Rat r = 1;
  Rat b = base;
  unsigned k = e;
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

inline Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

// Exact conversion helper; throws if q is not an integer.
inline Int to_integer(const Rat& q, const char* what = "value") {
  if (den(q) != 1)
    throw std::domain_error(std::string(what) + " is not an integer");
  return num(q);
}

// Thrown when an enumeration or construction exceeds a configured cap.
class resource_error : public std::runtime_error {
 public:
  resource_error(const std::string& msg, unsigned long long count)
      : std::runtime_error(msg), count_(count) {}
  unsigned long long count() const { return count_; }

 private:
  unsigned long long count_;
};

}  // namespace curralg
