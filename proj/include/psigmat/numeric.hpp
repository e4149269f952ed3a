#ifndef PSIGMAT_NUMERIC_HPP_
#define PSIGMAT_NUMERIC_HPP_

#include <cstdint>
#include <numeric>
#include <vector>

namespace psigmat {

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Distinct prime divisors of n, ascending.  pi(n) in the usual notation.
inline std::vector<int> prime_divisors(long long n) {
  std::vector<int> ps;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      ps.push_back(static_cast<int>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) ps.push_back(static_cast<int>(n));
  return ps;
}

inline bool coprime(long long a, long long b) { return std::gcd(a, b) == 1; }

}  // namespace psigmat

#endif
