#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <string>
#include <vector>

namespace covres {

// Exact arbitrary-precision integers/rationals; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }
inline long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

inline long long gcd_of(const std::vector<long long>& xs) {
  long long g = 0;
  for (long long x : xs) g = std::gcd(g, x);
  return g;
}

// a mod n in [0, n)
inline long long mod_pos(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

std::vector<long long> divisors(long long n);
long long euler_phi(long long n);
int moebius(long long n);

// Natural ordering on identifier strings: maximal digit runs compare by
// numeric value, everything else bytewise.  Total order (ties between
// numerically equal runs like "01" vs "1" are broken lexicographically).
bool natural_less(const std::string& a, const std::string& b);

}  // namespace covres
