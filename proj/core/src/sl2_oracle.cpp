#include <weylbound/sl2_oracle.hpp>

#include <stdexcept>
#include <vector>

namespace weylbound {

namespace {

void check_args(long long lambda, long long p) {
  if (lambda < 0) {
    throw std::invalid_argument("sl2 oracle: lambda must be >= 0");
  }
  if (p < 2) {
    throw std::invalid_argument("sl2 oracle: p must be >= 2");
  }
}

std::vector<long long> base_p_digits(long long lambda, long long p) {
  std::vector<long long> digits;
  do {
    digits.push_back(lambda % p);
    lambda /= p;
  } while (lambda > 0);
  return digits;
}

// Character of L(mu) as a weight->multiplicity map, from the digit
// factorization: L(mu) = tensor over digits a_i of L(a_i) twisted by p^i,
// and restricted L(a) has the a+1 weights a, a-2, ..., -a.
std::map<long long, long long> simple_character(long long mu, long long p) {
  std::map<long long, long long> character{{0, 1}};
  long long scale = 1;
  for (long long digit : base_p_digits(mu, p)) {
    std::map<long long, long long> next;
    for (const auto& [w, mult] : character) {
      for (long long d = digit; d >= -digit; d -= 2) {
        next[w + scale * d] += mult;
      }
    }
    character = std::move(next);
    scale *= p;
  }
  return character;
}

} // namespace

long long sl2_simple_dim(long long lambda, long long p) {
  check_args(lambda, p);
  long long dim = 1;
  for (long long digit : base_p_digits(lambda, p)) {
    dim *= digit + 1;
  }
  return dim;
}

long long Sl2Decomposition::length() const {
  long long total = 0;
  for (const auto& [mu, mult] : factors) {
    total += mult;
  }
  return total;
}

long long Sl2Decomposition::dimension_check() const {
  long long total = 0;
  for (const auto& [mu, mult] : factors) {
    total += mult * sl2_simple_dim(mu, p);
  }
  return total;
}

Sl2Decomposition sl2_weyl_factors(long long lambda, long long p) {
  check_args(lambda, p);
  Sl2Decomposition out;
  out.lambda = lambda;
  out.p = p;

  // Weyl character of V(lambda): lambda, lambda-2, ..., -lambda, each once.
  std::map<long long, long long> remaining;
  for (long long w = lambda; w >= -lambda; w -= 2) {
    remaining[w] = 1;
  }

  // Triangular elimination against simple characters from the top weight.
  while (!remaining.empty()) {
    const auto top = std::prev(remaining.end());
    const long long mu = top->first;
    const long long mult = top->second;
    if (mu < 0 || mult <= 0) {
      throw std::logic_error("sl2_weyl_factors: elimination left a non-character");
    }
    out.factors[mu] += mult;
    for (const auto& [w, m] : simple_character(mu, p)) {
      auto it = remaining.find(w);
      if (it == remaining.end() || it->second < mult * m) {
        throw std::logic_error("sl2_weyl_factors: negative multiplicity");
      }
      it->second -= mult * m;
      if (it->second == 0) {
        remaining.erase(it);
      }
    }
  }
  if (out.dimension_check() != lambda + 1) {
    throw std::logic_error("sl2_weyl_factors: dimension bookkeeping failed");
  }
  return out;
}

long long sl2_exact_length(long long lambda, long long p) {
  return sl2_weyl_factors(lambda, p).length();
}

} // namespace weylbound
