#include "covres/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace covres {

std::vector<long long> divisors(long long n) {
  if (n <= 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<long long> ds;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

long long euler_phi(long long n) {
  if (n <= 0) throw std::invalid_argument("euler_phi: n must be positive");
  long long result = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

int moebius(long long n) {
  if (n <= 0) throw std::invalid_argument("moebius: n must be positive");
  int sign = 1;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;  // square factor
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

namespace {

// Split off one token: either a maximal digit run or a single byte.
// Digit runs are compared (numeric value, raw text); bytes compare raw.
struct Token {
  bool is_num;
  std::string_view text;    // raw token text
  std::string_view digits;  // without leading zeros (numeric tokens)
};

Token next_token(std::string_view s, size_t& pos) {
  if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    std::string_view raw = s.substr(start, pos - start);
    size_t nz = raw.find_first_not_of('0');
    std::string_view trimmed = (nz == std::string_view::npos) ? raw.substr(raw.size() - 1) : raw.substr(nz);
    return {true, raw, trimmed};
  }
  Token t{false, s.substr(pos, 1), {}};
  ++pos;
  return t;
}

}  // namespace

bool natural_less(const std::string& a, const std::string& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    Token ta = next_token(a, i);
    Token tb = next_token(b, j);
    if (ta.is_num != tb.is_num) return ta.is_num;  // numbers sort before other bytes
    if (ta.is_num) {
      if (ta.digits.size() != tb.digits.size()) return ta.digits.size() < tb.digits.size();
      if (ta.digits != tb.digits) return ta.digits < tb.digits;
      if (ta.text != tb.text) return ta.text < tb.text;  // "01" vs "1"
    } else {
      if (ta.text != tb.text) return ta.text < tb.text;
    }
  }
  return i == a.size() && j < b.size();  // proper prefix sorts first
}

}  // namespace covres
