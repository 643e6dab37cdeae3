#include <weylbound/bigint.hpp>

#include <cmath>
#include <stdexcept>

namespace weylbound {

Int ceil_half(const Int& x) {
  if (x < 0) {
    throw std::invalid_argument("ceil_half: negative input");
  }
  return (x + 1) / 2;
}

Int int_pow(const Int& base, long long exp) {
  if (exp < 0) {
    throw std::invalid_argument("int_pow: negative exponent");
  }
  Int result = 1;
  Int b = base;
  unsigned long long e = static_cast<unsigned long long>(exp);
  while (e > 0) {
    if (e & 1ULL) {
      result *= b;
    }
    e >>= 1ULL;
    if (e > 0) {
      b *= b;
    }
  }
  return result;
}

long long floor_log(long long p, const Int& x) {
  if (p < 2) {
    throw std::invalid_argument("floor_log: base must be >= 2");
  }
  if (x < 1) {
    throw std::invalid_argument("floor_log: argument must be >= 1");
  }
  long long e = 0;
  Int power = p;
  while (power <= x) {
    ++e;
    power *= p;
  }
  return e;
}

Int geometric_sum(const Int& z, long long top) {
  if (z < 0 || top < 0) {
    throw std::invalid_argument("geometric_sum: negative input");
  }
  if (z == 0) {
    return 1;
  }
  if (z == 1) {
    return Int(top) + 1;
  }
  return (int_pow(z, top + 1) - 1) / (z - 1);
}

double log2_approx(const Int& x) {
  if (x <= 0) {
    throw std::invalid_argument("log2_approx: argument must be positive");
  }
  const unsigned bits = boost::multiprecision::msb(x) + 1;
  if (bits <= 63) {
    return std::log2(x.convert_to<double>());
  }
  const unsigned shift = bits - 63;
  const Int top = x >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

} // namespace weylbound
